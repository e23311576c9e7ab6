#pragma once

#include "mirrorlab/rational.hpp"
#include "mirrorlab/series.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mirrorlab {

/// A multiset of rational parameters a_1, ..., a_n, each in (0,1), held in
/// sorted canonical order. The hypergeometric datum for
///   theta^n - z (theta + a_1) ... (theta + a_n).
class HGParams {
public:
    explicit HGParams(std::vector<Rational> values);

    /// Parse a comma-separated rational list, e.g. "1/5,2/5,3/5,4/5".
    static HGParams parse(const std::string& text);

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

    /// lcm of the parameter denominators.
    const Integer& denominator_lcm() const { return denom_lcm_; }

    /// A prime is good when it divides no parameter denominator.
    bool is_good_prime(unsigned long p) const;

    /// Canonical text form "a1,a2,...,an" (sorted ascending).
    std::string str() const;

    bool operator==(const HGParams&) const = default;

private:
    std::vector<Rational> values_;
    Integer denom_lcm_;
};

/// Rising factorial x(x+1)...(x+k-1); empty product 1 for k = 0.
Rational pochhammer(const Rational& x, unsigned long k);

/// Holomorphic solution: coefficient k is prod_i (a_i)_k / (k!)^n.
Series series_F(const HGParams& a, std::size_t order);

/// Log-companion solution (the full solution is G + F log z):
/// coefficient k is F_k * sum_j sum_{i<k} (1/(a_j+i) - 1/(1+i)).
Series series_G(const HGParams& a, std::size_t order);

/// G/F; coefficient 0 vanishes.
Series ratio_GF(const HGParams& a, std::size_t order);

/// Mirror map q = z exp(G/F). Returned with order M+1: the coefficients of
/// z^1 .. z^M are determined by F and G through order M.
Series mirror_q(const HGParams& a, std::size_t order);

/// True iff the coefficients of G/F agree for k = 1..M.
bool ratio_equal(const HGParams& a, const HGParams& b, std::size_t order);

/// Checks 2F1(a,b;1|z) = (1-z)^(1-a-b) 2F1(1-a,1-b;1|z) as truncated series,
/// both sides computed independently.
bool euler_identity_check(const Rational& a1, const Rational& b1, std::size_t order);

} // namespace mirrorlab
