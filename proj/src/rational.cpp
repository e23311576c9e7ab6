#include "mirrorlab/rational.hpp"

#include "mirrorlab/errors.hpp"

#include <cctype>
#include <utility>

namespace mirrorlab {

namespace {

// Replace a leading UTF-8 minus sign (U+2212) with '-'.
std::string normalize_minus(const std::string& text)
{
    if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xE2 &&
        static_cast<unsigned char>(text[1]) == 0x88 &&
        static_cast<unsigned char>(text[2]) == 0x92) {
        return "-" + text.substr(3);
    }
    return text;
}

bool all_digits(const std::string& s)
{
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    std::string s = normalize_minus(text);
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("not a rational: '" + text + "'");
    }
    Integer n(num), d(den);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    Rational x(n, d);
    x.canonicalize();
    if (negative) x = -x;
    return x;
}

std::string rational_str(const Rational& x)
{
    return x.get_str();
}

long padic_val(const Rational& x, unsigned long p)
{
    if (x == 0) return kValInfinity;
    Integer prime(p);
    mpz_t tmp;
    mpz_init(tmp);
    long vn = static_cast<long>(mpz_remove(tmp, x.get_num_mpz_t(), prime.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp, x.get_den_mpz_t(), prime.get_mpz_t()));
    mpz_clear(tmp);
    return vn - vd;
}

bool is_p_integral(const Rational& x, unsigned long p)
{
    // Canonical form: p-integral iff p does not divide the denominator.
    return !mpz_divisible_ui_p(x.get_den_mpz_t(), p);
}

bool is_prime(unsigned long n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<unsigned long> primes_up_to(unsigned long bound)
{
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= bound; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

unsigned long mod_inverse(unsigned long a, unsigned long m)
{
    if (m == 1) return 0;
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw Error("mod_inverse: arguments not coprime");
    if (t < 0) t += static_cast<long long>(m);
    return static_cast<unsigned long>(t);
}

} // namespace mirrorlab
