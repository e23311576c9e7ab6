#pragma once

#include "mirrorlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mirrorlab {

/// Truncated formal power series over the rationals.
///
/// A Series of order M carries the coefficients of z^0 .. z^(M-1); nothing
/// is known about z^M and beyond (in particular they are not zero). Every
/// binary operation truncates to the minimum of the operand orders, so an
/// order never silently claims more precision than the inputs support.
/// Values are immutable once constructed and all operations are pure, so
/// Series can be shared freely across threads.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<Rational> coeffs);

    static Series zero(std::size_t order);
    static Series one(std::size_t order);
    /// The series z (requires order >= 2 to hold the linear term).
    static Series identity(std::size_t order);
    /// c * z^k, zero-padded to `order`.
    static Series monomial(const Rational& c, std::size_t k, std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const Series&) const = default;

    /// Coefficients as canonical rational strings, lowest index first.
    std::vector<std::string> coeff_strings() const;

private:
    std::vector<Rational> coeffs_;

    friend Series mul_serial(const Series&, const Series&);
    friend Series operator*(const Series&, const Series&);
};

Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);

/// Cauchy product; output coefficients are computed in parallel.
Series operator*(const Series& f, const Series& g);
/// Single-threaded reference implementation of the Cauchy product, kept
/// for differential tests and benchmarks against the parallel kernel.
Series mul_serial(const Series& f, const Series& g);

/// Throws DivisionByNonUnit when g(0) = 0.
Series operator/(const Series& f, const Series& g);

Series operator*(const Rational& c, const Series& f);
Series operator*(const Series& f, const Rational& c);

/// Formal exponential; requires f(0) = 0 (BadConstantTerm otherwise).
Series exp(const Series& f);
/// Formal logarithm; requires f(0) = 1 (BadConstantTerm otherwise).
Series log(const Series& f);
/// f^alpha = exp(alpha log f); requires f(0) = 1.
Series pow_alpha(const Series& f, const Rational& alpha);
/// f^n by binary powering; n >= 0, no constant-term restriction.
Series pow_int(const Series& f, unsigned long n);

/// f(g); requires g(0) = 0 (NonNilpotentInner otherwise). Result order is
/// min(order(f), order(g)).
Series compose(const Series& f, const Series& g);

/// f(z^k) with explicit target order; valid while target <= k*order(f).
Series stretch(const Series& f, std::size_t k, std::size_t target_order);
Series stretch(const Series& f, std::size_t k);

/// Compositional inverse: g with f(g) = g(f) = z up to order(f).
/// Requires f(0) = 0 and f'(0) != 0 (NotReversible otherwise).
/// Newton iteration, doubling the correct order each step.
Series revert(const Series& f);

/// z d/dz: coefficient k is multiplied by k.
Series theta(const Series& f);

/// Coefficient k is multiplied by c^k.
Series rescale(const Series& f, const Rational& c);

/// Multiply by z; order grows by one (the shifted coefficients stay known).
Series shift_up(const Series& f);
/// Divide by z; requires f(0) = 0. Order shrinks by one.
Series shift_down(const Series& f);

Series truncate(const Series& f, std::size_t order);

/// True when every coefficient has denominator 1.
bool all_integer(const Series& f);
/// Smallest index whose coefficient is not an integer, if any.
std::optional<std::size_t> first_non_integer(const Series& f);

} // namespace mirrorlab
