#pragma once

#include "mirrorlab/hypergeom.hpp"
#include "mirrorlab/rational.hpp"
#include "mirrorlab/series.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace mirrorlab {

/// The rescaling constant N: over each distinct parameter denominator s,
///   N_s = s^m prod_{p | s} p^(m/(p-1)),  m = multiplicity of s,
/// and N = prod_s N_s. Requires the parameters of each denominator to form
/// complete totative sets (IncompleteOrbit otherwise); F(Nz) then has
/// integer coefficients.
Integer n_constant(const HGParams& a);

struct NMinimalityProbe {
    /// Per prime factor p of N: first non-integer coefficient index of
    /// F((N/p) z), if any. A finding is evidence that N/p is insufficient;
    /// reported, never asserted.
    std::vector<std::pair<unsigned long, std::optional<std::size_t>>> divided_failures;
    bool f_rescaled_integer = false;
    std::size_t checked_order = 0;
};

NMinimalityProbe n_minimality_probe(const HGParams& a, const Integer& N,
                                    std::size_t order);

/// One of the n = 4 cases of the bundled classification table together with
/// its rescaling constant and Yukawa normalization.
class CYCase {
public:
    /// Validates membership in the n = 4 block. N = 0 means "compute it".
    CYCase(HGParams a, const Integer& N = 0, const Integer& n0 = 0);

    const HGParams& params() const { return a_; }
    const Integer& N() const { return N_; }
    const Integer& n0() const { return n0_; }

private:
    HGParams a_;
    Integer N_;
    Integer n0_;
};

/// (1/N) q(a|Nz) = z exp((G/F)(Nz)); integer coefficients for table cases.
Series rescaled_mirror_q(const HGParams& a, const Integer& N, std::size_t order);

/// The seven generators, indexed as
///   u[0] = z, u[1..4] = theta^i F(Nz) for i = 0..3,
///   u[5] = F theta G - G theta F, u[6] = F theta^2 G - G theta^2 F
/// (all at argument Nz), so that u5/u1^2 = theta(G/F) at Nz.
std::array<Series, 7> u_series(const CYCase& c, std::size_t order);

struct IntegralitySuiteReport {
    bool all_integral = false;
    /// (generator index, coefficient index) of the first failure, if any.
    std::optional<std::pair<int, std::size_t>> first_failure;
    std::size_t order_q = 0;
};

/// Composes each u_i with z(q) (the reverted rescaled mirror map) and checks
/// all q-coefficients through order_q are integers. order_z >= 2*order_q.
IntegralitySuiteReport integrality_suite(const CYCase& c, std::size_t order_z,
                                         std::size_t order_q);

/// Yukawa coupling in the q-coordinate:
///   Y = n0 u1^4 / ((u5 + u1^2)^3 (1 - Nz)),  transported through z(q).
/// The discriminant factor is 1 - Nz because the singular point of F sits at
/// Nz = 1; the rescaled q-expansion then starts at the constant n0.
/// Returned with order order_q + 1 (coefficients q^0 .. q^order_q).
Series yukawa(const CYCase& c, std::size_t order_q);

/// Invert the Lambert expansion Y = n0 + sum_d n_d d^3 q^d/(1-q^d):
///   n_k = (coeff_k(Y - n0) - sum_{d | k, d < k} n_d d^3) / k^3.
/// Values may a priori be non-integers and are reported as-is.
std::vector<Rational> instanton_numbers(const Series& yukawa_q, std::size_t dmax);

/// Rebuild the Lambert series from instanton numbers (round-trip check).
Series lambert_series(const Rational& n0, const std::vector<Rational>& nd,
                      std::size_t order);

} // namespace mirrorlab
