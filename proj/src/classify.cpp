#include "mirrorlab/classify.hpp"

#include "mirrorlab/dwork.hpp"
#include "mirrorlab/errors.hpp"
#include "mirrorlab/hypergeom.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <numeric>

namespace mirrorlab {

unsigned long euler_phi(unsigned long m)
{
    unsigned long result = m;
    unsigned long n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::vector<unsigned long>> phi_partitions(unsigned n, unsigned long modulus_bound)
{
    // phi(m) >= sqrt(m/2), so phi(m) <= n forces m <= 2n^2.
    unsigned long B = modulus_bound ? modulus_bound : 2UL * n * n;
    std::vector<std::pair<unsigned long, unsigned long>> usable; // (m, phi(m)), m descending
    for (unsigned long m = B; m >= 2; --m) {
        if (unsigned long f = euler_phi(m); f <= n) usable.emplace_back(m, f);
    }
    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> cur;
    auto rec = [&](auto&& self, unsigned remaining, std::size_t start) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < usable.size(); ++i) {
            if (usable[i].second > remaining) continue;
            cur.push_back(usable[i].first);
            self(self, remaining - static_cast<unsigned>(usable[i].second), i);
            cur.pop_back();
        }
    };
    rec(rec, n, 0);
    return out;
}

std::vector<Integer> genfun_coeffs(unsigned terms)
{
    if (terms < 1) throw ParseError("genfun needs at least one term");
    unsigned long B = 2UL * terms * terms;
    // how many m >= 2 have phi(m) = v, for each v <= terms
    std::map<unsigned long, unsigned long> counts;
    for (unsigned long m = 2; m <= B; ++m) {
        if (unsigned long v = euler_phi(m); v <= terms) ++counts[v];
    }
    std::vector<Integer> poly(terms + 1, Integer(0));
    poly[0] = 1;
    for (const auto& [v, count] : counts) {
        for (unsigned long rep = 0; rep < count; ++rep) {
            // multiply by 1/(1 - x^v)
            for (std::size_t k = v; k <= terms; ++k) poly[k] += poly[k - v];
        }
    }
    poly[0] -= 1;
    if (terms >= 2) poly[2] += 24;
    return {poly.begin() + 1, poly.end()};
}

namespace {

std::vector<Rational> totative_orbit(unsigned long m)
{
    std::vector<Rational> out;
    for (unsigned long j = 1; j < m; ++j) {
        if (std::gcd(j, m) == 1) out.emplace_back(Integer(j), Integer(m));
    }
    return out;
}

ClassificationEntry entry_from_moduli(unsigned n, std::vector<unsigned long> moduli)
{
    ClassificationEntry e;
    e.n = n;
    std::sort(moduli.begin(), moduli.end(), std::greater<>());
    e.moduli = std::move(moduli);
    for (unsigned long m : e.moduli) {
        auto orbit = totative_orbit(m);
        e.params.insert(e.params.end(), orbit.begin(), orbit.end());
    }
    std::sort(e.params.begin(), e.params.end());
    // one representative per complement pair; an unpaired element can only
    // be 1/2 (odd n)
    std::multiset<Rational> pool(e.params.begin(), e.params.end());
    while (!pool.empty()) {
        Rational x = *pool.begin();
        pool.erase(pool.begin());
        if (auto it = pool.find(1 - x); it != pool.end()) pool.erase(it);
        e.representatives.push_back(x);
    }
    std::sort(e.representatives.begin(), e.representatives.end(), std::greater<>());
    return e;
}

} // namespace

std::vector<ClassificationEntry> enumerate_candidates(unsigned n)
{
    if (n == 2) throw ParseError("n = 2 uses the bounded pair search");
    if (n < 1) throw ParseError("n must be positive");
    std::vector<ClassificationEntry> out;
    for (auto& part : phi_partitions(n)) {
        out.push_back(entry_from_moduli(n, part));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.params < b.params;
    });
    // verify, not assume: every candidate passes the condition for all good
    // primes up to 50
    const auto primes = primes_up_to(50);
    for (const auto& e : out) {
        HGParams params(e.params);
        for (unsigned long p : primes) {
            if (!params.is_good_prime(p)) continue;
            if (!condition_check(params, p)) {
                throw FormViolation("candidate " + params.str() + " fails at p=" + std::to_string(p));
            }
        }
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> enumerate_n2(unsigned long denominator_bound)
{
    if (denominator_bound < 12) throw ParseError("denominator bound below 12 is not meaningful");
    struct Frac {
        unsigned long num, den;
    };
    std::vector<Frac> values;
    for (unsigned long m = 2; m <= denominator_bound; ++m) {
        for (unsigned long j = 1; j < m; ++j) {
            if (std::gcd(j, m) == 1) values.push_back({j, m});
        }
    }
    auto cmp_lt = [](const Frac& a, const Frac& b) {
        return a.num * b.den < b.num * a.den;
    };
    std::vector<std::pair<Rational, Rational>> found;
    const auto total = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t ii = 0; ii < total; ++ii) {
        const Frac a1 = values[ii];
        for (std::size_t jj = ii; jj < values.size(); ++jj) {
            const Frac a2 = values[jj];
            const unsigned long c = std::lcm(a1.den, a2.den);
            bool ok = true;
            for (unsigned long r = 2; r <= c && ok; ++r) {
                if (std::gcd(r, c) != 1) continue;
                Frac i1{mod_inverse(r % a1.den, a1.den) * a1.num % a1.den, a1.den};
                Frac i2{mod_inverse(r % a2.den, a2.den) * a2.num % a2.den, a2.den};
                Frac lo = cmp_lt(i1, i2) ? i1 : i2;
                Frac hi = cmp_lt(i1, i2) ? i2 : i1;
                Frac alo = cmp_lt(a1, a2) ? a1 : a2;
                Frac ahi = cmp_lt(a1, a2) ? a2 : a1;
                bool same = lo.num == alo.num && lo.den == alo.den && hi.num == ahi.num &&
                            hi.den == ahi.den;
                // complement multiset {1-a1, 1-a2}, reordered
                Frac clo{ahi.den - ahi.num, ahi.den};
                Frac chi{alo.den - alo.num, alo.den};
                if (cmp_lt(chi, clo)) std::swap(clo, chi);
                bool comp = lo.num == clo.num && lo.den == clo.den && hi.num == chi.num &&
                            hi.den == chi.den;
                ok = same || comp;
            }
            if (ok) {
                Rational x(Integer(a1.num), Integer(a1.den));
                Rational y(Integer(a2.num), Integer(a2.den));
                if (x < y) std::swap(x, y);
#pragma omp critical
                found.emplace_back(x, y);
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

TriangleType triangle_type(const Rational& a1, const Rational& a2)
{
    if (a1 < a2) throw ParseError("triangle_type needs a1 >= a2");
    for (const Rational& x : {a1, a2}) {
        if (x <= 0 || x >= 1) throw ParseError("triangle parameters must lie in (0,1)");
    }
    auto index = [](const Rational& divisor) -> std::optional<unsigned long> {
        if (divisor == 0) return std::nullopt; // infinite index
        Rational m = 1 / divisor;
        if (m.get_den() != 1 || m <= 0 || !m.get_num().fits_ulong_p()) {
            throw NotTriangle("1/" + rational_str(divisor) + " is not a positive integer");
        }
        return m.get_num().get_ui();
    };
    return TriangleType{index(a1 - a2), index(1 - a1 - a2)};
}

namespace {

std::vector<std::vector<Rational>> parse_block(const char* const* rows, std::size_t count,
                                               bool expand)
{
    std::vector<std::vector<Rational>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto reps = HGParams::parse(rows[i]).values();
        std::vector<Rational> full = reps;
        if (expand) {
            for (const auto& r : reps) full.push_back(1 - r);
        }
        std::sort(full.begin(), full.end());
        out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// the published classification: n = 2 rows are complete pairs, n = 4 and 6
// rows list one element per complement pair
const char* kRows2[] = {
    "1/2,1/2", "2/3,1/3", "3/4,1/4", "5/6,1/6",
    "1/6,1/6", "1/3,1/6", "1/2,1/6", "1/3,1/3", "2/3,2/3", "1/4,1/4", "1/2,1/4", "3/4,1/2",
    "3/4,3/4",
    "1/2,1/3", "2/3,1/6", "2/3,1/2", "5/6,1/3", "5/6,1/2", "5/6,2/3", "5/6,5/6", "3/8,1/8",
    "5/8,1/8",
    "7/8,3/8", "7/8,5/8", "5/12,1/12", "7/12,1/12", "11/12,5/12", "11/12,7/12",
};

const char* kRows4[] = {
    "1/2,1/2", "1/3,2/3", "1/4,1/2", "1/4,1/4", "2/5,1/5", "3/8,1/8", "3/10,1/10",
    "1/2,1/6", "1/2,1/3", "1/3,1/6", "1/6,1/6", "1/3,1/4", "1/4,1/6", "5/12,1/12",
};

const char* kRows6[] = {
    "1/2,1/2,1/2", "1/3,1/3,1/3", "1/2,1/2,1/4", "1/2,1/4,1/4", "1/4,1/4,1/4", "1/2,1/2,1/3",
    "1/2,1/3,1/3",
    "1/2,1/2,1/6", "1/2,1/3,1/6", "1/3,1/3,1/6", "1/2,1/6,1/6", "1/3,1/6,1/6", "1/6,1/6,1/6",
    "3/7,2/7,1/7",
    "1/2,3/8,1/8", "3/8,1/4,1/8", "4/9,2/9,1/9", "1/2,2/5,1/5", "1/2,3/10,1/10", "1/2,1/3,1/4",
    "1/3,1/3,1/4",
    "1/3,1/4,1/4", "1/2,1/4,1/6", "1/3,1/4,1/6", "1/4,1/4,1/6", "1/4,1/6,1/6", "1/2,5/12,1/12",
    "5/12,1/3,1/12",
    "5/12,1/4,1/12", "5/12,1/6,1/12", "5/14,3/14,1/14", "2/5,1/3,1/5", "7/18,5/18,1/18",
    "2/5,1/4,1/5", "3/10,1/4,1/10",
    "3/8,1/3,1/8", "3/8,1/6,1/8", "2/5,1/5,1/6", "1/3,3/10,1/10", "3/10,1/6,1/10",
};

} // namespace

const std::vector<std::vector<Rational>>& table1_block(unsigned n)
{
    static const auto block2 = parse_block(kRows2, std::size(kRows2), false);
    static const auto block4 = parse_block(kRows4, std::size(kRows4), true);
    static const auto block6 = parse_block(kRows6, std::size(kRows6), true);
    switch (n) {
    case 2: return block2;
    case 4: return block4;
    case 6: return block6;
    default: throw ParseError("reference table has blocks for n = 2, 4, 6 only");
    }
}

std::vector<Rational> expand_representatives(const std::vector<Rational>& reps)
{
    std::vector<Rational> full = reps;
    for (const auto& r : reps) full.push_back(1 - r);
    std::sort(full.begin(), full.end());
    return full;
}

TableDiff table1_compare(unsigned n, const std::vector<std::vector<Rational>>& produced)
{
    auto ref = table1_block(n);
    auto prod = produced;
    for (auto& row : prod) std::sort(row.begin(), row.end());
    std::sort(prod.begin(), prod.end());
    TableDiff diff;
    std::set_difference(ref.begin(), ref.end(), prod.begin(), prod.end(),
                        std::back_inserter(diff.missing));
    std::set_difference(prod.begin(), prod.end(), ref.begin(), ref.end(),
                        std::back_inserter(diff.extra));
    return diff;
}

} // namespace mirrorlab
