#pragma once

#include "mirrorlab/hypergeom.hpp"
#include "mirrorlab/rational.hpp"
#include "mirrorlab/series.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace mirrorlab {

/// None iff every coefficient is p-integral; otherwise the smallest failing
/// index.
std::optional<std::size_t> series_p_integral(const Series& f, unsigned long p);

/// Dwork operator: the unique p-integral (x + x0)/p with x0 in {0,...,p-1}.
/// Throws BadPrime when p divides the denominator of x.
Rational dwork_op(const Rational& x, unsigned long p);

/// Same map computed by scanning x0 = 0..p-1 for the p-integral candidate.
/// Exists as an independent cross-check of dwork_op.
Rational dwork_op_search(const Rational& x, unsigned long p);

/// Elementwise Dwork image of a parameter multiset.
HGParams dwork_apply(const HGParams& a, unsigned long p);

/// The integrality condition on parameters: the Dwork image multiset equals
/// {a_i}; for n = 2 the complement multiset {1-a_1, 1-a_2} is also allowed.
bool condition_check(const HGParams& a, unsigned long p);

/// Dieudonne/Dwork unit criterion: f(z^p)/f(z)^p must lie in 1 + p Z_p[[z]].
/// Requires f(0) = 1 and order(f) >= p. None iff the criterion holds through
/// order(f); otherwise the smallest index where the valuation drops below 1.
std::optional<std::size_t> dieudonne_test(const Series& f, unsigned long p);

/// Unconditional congruence between G/F at the Dwork image (in z^p) and
/// p G/F: checked coefficient-wise to order M. Any failure signals an
/// implementation bug, which makes this a self-test oracle.
std::optional<std::size_t> dwork_theorem_check(const HGParams& a, unsigned long p,
                                               std::size_t order);

struct FastCongruenceResult {
    /// Smallest index k <= M where G/F at the Dwork image differs from G/F
    /// with p-valuation < 1, if any. A failure certifies that the mirror map
    /// is not p-integral without expanding it.
    std::optional<std::size_t> first_failure;
    /// Whether the two ratios agree exactly (not merely mod p) through M.
    /// Recorded as an observation only.
    bool is_equality = false;
};

FastCongruenceResult fast_congruence(const HGParams& a, unsigned long p,
                                     std::size_t order);

/// Smallest prime p <= bound with p r = 1 (mod c). Throws NotFound.
unsigned long prime_in_class(unsigned long c, unsigned long r, unsigned long bound);

/// Case data for dwork_structure_witness: x = t/(s q^y) with q prime,
/// gcd(q, s) = 1; m only matters for item 4.
struct WitnessCase {
    unsigned long q = 2;
    unsigned y = 0;
    unsigned m = 0;
};

/// Finds a prime in the residue class the structure statement prescribes for
/// `item` (1..4) and returns (p, dwork_op(x, p)) after asserting the image
/// has one of the shapes the item allows. Throws FormViolation when the
/// image matches no allowed shape.
std::pair<unsigned long, Rational> dwork_structure_witness(const Rational& x, int item,
                                                           const WitnessCase& aux,
                                                           unsigned long bound);

/// Which checks a sweep cell should run.
struct CellChecks {
    bool condition = true;
    bool q_integrality = true;
    bool fast_congruence = true;
    bool dieudonne = true;
};

/// Verdicts for one (parameters, prime) cell.
struct IntegralityReport {
    unsigned long p = 0;
    bool condition_holds = false;
    std::size_t checked_order = 0;
    /// Smallest non-p-integral mirror-map index found, if any.
    std::optional<std::size_t> q_first_failure;
    std::optional<std::size_t> fast_congruence_failure;
    bool fast_is_equality = false;
    bool dieudonne_ran = false;
    std::optional<std::size_t> dieudonne_failure;
};

/// Evaluate one sweep cell. `q` is the mirror map of `a`, precomputed at the
/// sweep's truncation order so it can be shared across primes.
IntegralityReport integrality_report(const HGParams& a, const Series& q,
                                     unsigned long p, std::size_t order,
                                     const CellChecks& checks);

} // namespace mirrorlab
