#include "mirrorlab/modular_type.hpp"

#include "mirrorlab/classify.hpp"
#include "mirrorlab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mirrorlab {

namespace {

// group parameters by denominator and insist each group is a union of
// complete totative sets
std::map<unsigned long, unsigned long> denominator_multiplicities(const HGParams& a)
{
    std::map<unsigned long, std::vector<Integer>> groups;
    for (const auto& x : a.values()) {
        if (!x.get_den().fits_ulong_p()) throw IncompleteOrbit("denominator too large");
        groups[x.get_den().get_ui()].push_back(x.get_num());
    }
    std::map<unsigned long, unsigned long> mult;
    for (auto& [s, nums] : groups) {
        unsigned long phi = euler_phi(s);
        if (nums.size() % phi != 0) {
            throw IncompleteOrbit("denominator " + std::to_string(s) +
                                  " does not carry complete totative sets");
        }
        unsigned long copies = nums.size() / phi;
        std::sort(nums.begin(), nums.end());
        std::size_t idx = 0;
        for (unsigned long j = 1; j < s; ++j) {
            if (std::gcd(j, s) != 1) continue;
            for (unsigned long rep = 0; rep < copies; ++rep) {
                if (idx >= nums.size() || nums[idx] != Integer(j)) {
                    throw IncompleteOrbit("denominator " + std::to_string(s) +
                                          " does not carry complete totative sets");
                }
                ++idx;
            }
        }
        mult[s] = nums.size();
    }
    return mult;
}

} // namespace

Integer n_constant(const HGParams& a)
{
    Integer N(1);
    for (const auto& [s, m] : denominator_multiplicities(a)) {
        Integer Ns;
        mpz_ui_pow_ui(Ns.get_mpz_t(), s, m);
        unsigned long rest = s;
        for (unsigned long p = 2; rest > 1; ++p) {
            if (rest % p != 0) continue;
            while (rest % p == 0) rest /= p;
            // m is a multiple of phi(s), hence of p-1 for every p | s
            Integer f;
            mpz_ui_pow_ui(f.get_mpz_t(), p, m / (p - 1));
            Ns *= f;
        }
        N *= Ns;
    }
    return N;
}

NMinimalityProbe n_minimality_probe(const HGParams& a, const Integer& N, std::size_t order)
{
    NMinimalityProbe probe;
    probe.checked_order = order;
    Series F = series_F(a, order);
    probe.f_rescaled_integer = all_integer(rescale(F, Rational(N)));
    Integer rest = N;
    for (unsigned long p = 2; rest > 1; ++p) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
        Rational reduced(N / p);
        probe.divided_failures.emplace_back(p, first_non_integer(rescale(F, reduced)));
    }
    return probe;
}

CYCase::CYCase(HGParams a, const Integer& N, const Integer& n0) : a_(std::move(a)), N_(N), n0_(n0)
{
    if (a_.size() != 4) throw ParseError("a case needs exactly four parameters");
    const auto& block = table1_block(4);
    if (!std::binary_search(block.begin(), block.end(), a_.values())) {
        throw ParseError(a_.str() + " is not one of the classified n=4 cases");
    }
    if (N_ == 0) N_ = n_constant(a_);
    if (n0_ == 0 && a_.values() == HGParams::parse("1/5,2/5,3/5,4/5").values()) n0_ = 5;
}

Series rescaled_mirror_q(const HGParams& a, const Integer& N, std::size_t order)
{
    return shift_up(exp(rescale(ratio_GF(a, order), Rational(N))));
}

std::array<Series, 7> u_series(const CYCase& c, std::size_t order)
{
    if (order < 2) throw ParseError("u_series needs order >= 2");
    Rational N{c.N()};
    Series F = rescale(series_F(c.params(), order), N);
    Series G = rescale(series_G(c.params(), order), N);
    std::array<Series, 7> u;
    u[0] = Series::identity(order);
    u[1] = F;
    u[2] = theta(F);
    u[3] = theta(u[2]);
    u[4] = theta(u[3]);
    Series tG = theta(G);
    u[5] = F * tG - G * u[2];
    u[6] = F * theta(tG) - G * u[3];
    return u;
}

IntegralitySuiteReport integrality_suite(const CYCase& c, std::size_t order_z, std::size_t order_q)
{
    if (order_z < 2 * order_q) throw ParseError("composition headroom needs order_z >= 2*order_q");
    IntegralitySuiteReport rep;
    rep.order_q = order_q;
    Series q = rescaled_mirror_q(c.params(), c.N(), order_z);
    Series z_of_q = truncate(revert(truncate(q, order_q + 1)), order_q + 1);
    auto u = u_series(c, order_z);
    rep.all_integral = true;
    for (int i = 0; i < 7; ++i) {
        Series ui_q = compose(truncate(u[i], order_q + 1), z_of_q);
        if (auto bad = first_non_integer(ui_q)) {
            rep.all_integral = false;
            rep.first_failure = {i, *bad};
            break;
        }
    }
    return rep;
}

Series yukawa(const CYCase& c, std::size_t order_q)
{
    if (order_q < 1) throw ParseError("yukawa needs order >= 1");
    if (c.n0() == 0) throw ParseError("yukawa needs the normalization constant n0");
    std::size_t M = 2 * order_q + 4;
    auto u = u_series(c, M);
    Series u1sq = u[1] * u[1];
    Series denom_core = u[5] + u1sq;
    // the singular fibre of F(Nz) sits at Nz = 1
    Series disc = Series::one(M) - Rational(c.N()) * Series::identity(M);
    Series Yz = Rational(c.n0()) * (u1sq * u1sq) / (pow_int(denom_core, 3) * disc);
    Series q = rescaled_mirror_q(c.params(), c.N(), M);
    Series z_of_q = truncate(revert(truncate(q, order_q + 1)), order_q + 1);
    return compose(truncate(Yz, order_q + 1), z_of_q);
}

std::vector<Rational> instanton_numbers(const Series& yukawa_q, std::size_t dmax)
{
    if (yukawa_q.order() <= dmax) throw ParseError("yukawa series too short for dmax");
    std::vector<Rational> nd(dmax + 1, Rational(0)); // nd[0] unused
    for (std::size_t k = 1; k <= dmax; ++k) {
        // coeff_k(Y - n0) = sum_{d | k} n_d d^3
        Rational s = yukawa_q[k];
        for (std::size_t d = 1; d < k; ++d) {
            if (k % d == 0) s -= nd[d] * Rational(Integer(d) * d * d);
        }
        nd[k] = s / Rational(Integer(k) * k * k);
    }
    return {nd.begin() + 1, nd.end()};
}

Series lambert_series(const Rational& n0, const std::vector<Rational>& nd, std::size_t order)
{
    std::vector<Rational> c(order, Rational(0));
    if (order > 0) c[0] = n0;
    for (std::size_t d = 1; d <= nd.size(); ++d) {
        // n_d d^3 q^d/(1-q^d) = n_d d^3 (q^d + q^{2d} + ...)
        Rational term = nd[d - 1] * Rational(Integer(d) * d * d);
        for (std::size_t k = d; k < order; k += d) c[k] += term;
    }
    return Series(std::move(c));
}

} // namespace mirrorlab
