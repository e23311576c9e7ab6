#include "mirrorlab/hypergeom.hpp"

#include "mirrorlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mirrorlab {

HGParams::HGParams(std::vector<Rational> values) : values_(std::move(values)), denom_lcm_(1)
{
    if (values_.empty()) throw ParseError("empty parameter list");
    for (const auto& a : values_) {
        if (a <= 0 || a >= 1) {
            throw ParseError("parameter " + rational_str(a) + " outside (0,1)");
        }
    }
    std::sort(values_.begin(), values_.end());
    for (const auto& a : values_) {
        mpz_lcm(denom_lcm_.get_mpz_t(), denom_lcm_.get_mpz_t(), a.get_den_mpz_t());
    }
}

HGParams HGParams::parse(const std::string& text)
{
    std::vector<Rational> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // tolerate surrounding spaces
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty parameter in '" + text + "'");
        vals.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    return HGParams(std::move(vals));
}

bool HGParams::is_good_prime(unsigned long p) const
{
    return !mpz_divisible_ui_p(denom_lcm_.get_mpz_t(), p);
}

std::string HGParams::str() const
{
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += rational_str(values_[i]);
    }
    return out;
}

Rational pochhammer(const Rational& x, unsigned long k)
{
    Rational acc(1);
    Rational term = x;
    for (unsigned long i = 0; i < k; ++i) {
        acc *= term;
        term += 1;
    }
    return acc;
}

Series series_F(const HGParams& a, std::size_t order)
{
    std::size_t n = a.size();
    std::vector<Rational> c(order, Rational(0));
    if (order == 0) return Series(std::move(c));
    c[0] = 1;
    for (std::size_t k = 1; k < order; ++k) {
        // c[k] = c[k-1] * prod_i (a_i + k - 1) / k^n
        Rational t = c[k - 1];
        for (const auto& ai : a.values()) t *= ai + Rational(k - 1);
        for (std::size_t i = 0; i < n; ++i) t /= Rational(k);
        c[k] = std::move(t);
    }
    return Series(std::move(c));
}

Series series_G(const HGParams& a, std::size_t order)
{
    Series F = series_F(a, order);
    std::vector<Rational> g(order, Rational(0));
    // bracket H_k = sum_j sum_{i<k} (1/(a_j+i) - 1/(1+i)), grown incrementally
    Rational H(0);
    for (std::size_t k = 1; k < order; ++k) {
        for (const auto& aj : a.values()) {
            H += 1 / (aj + Rational(k - 1)) - Rational(1, k);
        }
        g[k] = F[k] * H;
    }
    return Series(std::move(g));
}

Series ratio_GF(const HGParams& a, std::size_t order)
{
    return series_G(a, order) / series_F(a, order);
}

Series mirror_q(const HGParams& a, std::size_t order)
{
    return shift_up(exp(ratio_GF(a, order)));
}

bool ratio_equal(const HGParams& a, const HGParams& b, std::size_t order)
{
    if (a.size() != b.size()) throw ParseError("ratio_equal needs equal parameter counts");
    Series ra = ratio_GF(a, order + 1);
    Series rb = ratio_GF(b, order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        if (ra[k] != rb[k]) return false;
    }
    return true;
}

bool euler_identity_check(const Rational& a1, const Rational& b1, std::size_t order)
{
    for (const Rational& x : {a1, b1, Rational(1 - a1), Rational(1 - b1)}) {
        if (x <= 0 || x >= 1) {
            throw ParseError("euler_identity_check parameter outside (0,1)");
        }
    }
    Series lhs = series_F(HGParams({a1, b1}), order);
    Series one_minus_z = Series::one(order) - Series::identity(order);
    Series rhs = pow_alpha(one_minus_z, 1 - a1 - b1) * series_F(HGParams({1 - a1, 1 - b1}), order);
    return lhs == rhs;
}

} // namespace mirrorlab
