#pragma once

#include "mirrorlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mirrorlab {

/// A candidate N-integral parameter tuple, recorded with the totient-orbit
/// decomposition it came from.
struct ClassificationEntry {
    unsigned n = 0;
    /// Orbit moduli m_i > 1 with sum phi(m_i) = n, descending.
    std::vector<unsigned long> moduli;
    /// Union of the totative orbits {j/m : gcd(j,m)=1}, sorted ascending.
    std::vector<Rational> params;
    /// One element per complement pair, in (0, 1/2], descending (the
    /// params multiset is closed under x -> 1-x by construction).
    std::vector<Rational> representatives;
};

unsigned long euler_phi(unsigned long m);

/// All multisets {m_i > 1} with sum phi(m_i) = n, each listed once
/// (descending within a multiset, lexicographic across multisets).
/// modulus_bound 0 selects the safe default 2n^2.
std::vector<std::vector<unsigned long>> phi_partitions(unsigned n,
                                                       unsigned long modulus_bound = 0);

/// Coefficients of x^1..x^terms of
///   24x^2 - 1 + prod_{m>=2} 1/(1 - x^phi(m)).
std::vector<Integer> genfun_coeffs(unsigned terms);

/// One entry per phi-partition of n (n != 2). Every entry is verified to
/// satisfy condition_check for all good primes p <= 50 before being
/// returned.
std::vector<ClassificationEntry> enumerate_candidates(unsigned n);

/// All unordered pairs (a1, a2), denominators <= denominator_bound, whose
/// Dwork image multiset for every unit residue class equals {a1,a2} or
/// {1-a1,1-a2}. Pairs are returned as (max, min), sorted. The result is
/// complete relative to the known classification for any bound >= 12.
std::vector<std::pair<Rational, Rational>> enumerate_n2(unsigned long denominator_bound = 60);

/// Cusped-triangle-group parameters: m1 = 1/(a1-a2), m2 = 1/(1-a1-a2),
/// nullopt encoding an infinite index. Throws NotTriangle when a divisor is
/// neither zero nor the reciprocal of a positive integer.
struct TriangleType {
    std::optional<unsigned long> m1;
    std::optional<unsigned long> m2;
    bool operator==(const TriangleType&) const = default;
};

TriangleType triangle_type(const Rational& a1, const Rational& a2);

/// Reference blocks of the bundled classification table (n = 2, 4, 6),
/// canonicalized to full sorted parameter multisets.
const std::vector<std::vector<Rational>>& table1_block(unsigned n);

/// Printed table rows for n = 4 and 6 are representative halves; expand via
/// a_{i+n/2} = 1 - a_i and sort. For n = 2 the pair is the whole multiset.
std::vector<Rational> expand_representatives(const std::vector<Rational>& reps);

struct TableDiff {
    std::vector<std::vector<Rational>> missing; // in reference, not produced
    std::vector<std::vector<Rational>> extra;   // produced, not in reference
    bool empty() const { return missing.empty() && extra.empty(); }
};

/// Compare produced multisets against the reference block for n.
TableDiff table1_compare(unsigned n, const std::vector<std::vector<Rational>>& produced);

} // namespace mirrorlab
