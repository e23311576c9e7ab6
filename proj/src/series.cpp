#include "mirrorlab/series.hpp"

#include "mirrorlab/errors.hpp"

#include <algorithm>
#include <cstddef>

namespace mirrorlab {

namespace {

using diff_t = std::ptrdiff_t;

// Outputs below this size are not worth a parallel region.
constexpr std::size_t kParallelCutoff = 48;

} // namespace

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

Series Series::zero(std::size_t order)
{
    return Series(std::vector<Rational>(order, Rational(0)));
}

Series Series::one(std::size_t order)
{
    auto c = std::vector<Rational>(order, Rational(0));
    if (order > 0) c[0] = 1;
    return Series(std::move(c));
}

Series Series::identity(std::size_t order)
{
    auto c = std::vector<Rational>(order, Rational(0));
    if (order > 1) c[1] = 1;
    return Series(std::move(c));
}

Series Series::monomial(const Rational& value, std::size_t k, std::size_t order)
{
    auto c = std::vector<Rational>(order, Rational(0));
    if (k < order) c[k] = value;
    return Series(std::move(c));
}

std::vector<std::string> Series::coeff_strings() const
{
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(rational_str(c));
    return out;
}

Series operator+(const Series& f, const Series& g)
{
    std::size_t L = std::min(f.order(), g.order());
    std::vector<Rational> c(L);
    for (std::size_t k = 0; k < L; ++k) c[k] = f[k] + g[k];
    return Series(std::move(c));
}

Series operator-(const Series& f, const Series& g)
{
    std::size_t L = std::min(f.order(), g.order());
    std::vector<Rational> c(L);
    for (std::size_t k = 0; k < L; ++k) c[k] = f[k] - g[k];
    return Series(std::move(c));
}

Series operator-(const Series& f)
{
    std::vector<Rational> c(f.order());
    for (std::size_t k = 0; k < f.order(); ++k) c[k] = -f[k];
    return Series(std::move(c));
}

Series mul_serial(const Series& f, const Series& g)
{
    std::size_t L = std::min(f.order(), g.order());
    std::vector<Rational> c(L, Rational(0));
    for (std::size_t i = 0; i < L; ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; i + j < L; ++j) {
            if (g[j] != 0) c[i + j] += f[i] * g[j];
        }
    }
    return Series(std::move(c));
}

Series operator*(const Series& f, const Series& g)
{
    std::size_t L = std::min(f.order(), g.order());
    if (L < kParallelCutoff) return mul_serial(f, g);
    std::vector<Rational> c(L, Rational(0));
    // Each output coefficient is an independent dot product. Exact rational
    // addition commutes, so the result is identical to mul_serial.
#pragma omp parallel for schedule(dynamic, 8)
    for (diff_t k = 0; k < static_cast<diff_t>(L); ++k) {
        Rational acc(0);
        for (diff_t i = 0; i <= k; ++i) {
            if (f[i] != 0 && g[k - i] != 0) acc += f[i] * g[k - i];
        }
        c[k] = std::move(acc);
    }
    return Series(std::move(c));
}

Series operator*(const Rational& s, const Series& f)
{
    std::vector<Rational> c(f.order());
    for (std::size_t k = 0; k < f.order(); ++k) c[k] = s * f[k];
    return Series(std::move(c));
}

Series operator*(const Series& f, const Rational& s)
{
    return s * f;
}

namespace {

// sum of a[j]*b[k-j] over j in [lo, hi); exact addition commutes, so the
// thread split cannot change the result
Rational convolve_range(const std::vector<Rational>& a, const std::vector<Rational>& b,
                        std::size_t k, std::size_t lo, std::size_t hi)
{
    Rational total(0);
    if (hi <= lo) return total;
    if (hi - lo < kParallelCutoff) {
        for (std::size_t j = lo; j < hi; ++j) {
            if (a[j] != 0 && b[k - j] != 0) total += a[j] * b[k - j];
        }
        return total;
    }
#pragma omp parallel
    {
        Rational local(0);
#pragma omp for nowait schedule(static)
        for (diff_t j = static_cast<diff_t>(lo); j < static_cast<diff_t>(hi); ++j) {
            if (a[j] != 0 && b[k - j] != 0) local += a[j] * b[k - j];
        }
#pragma omp critical
        total += local;
    }
    return total;
}

} // namespace

Series operator/(const Series& f, const Series& g)
{
    std::size_t L = std::min(f.order(), g.order());
    if (L > 0 && g[0] == 0) throw DivisionByNonUnit("division by series with zero constant term");
    std::vector<Rational> r(L, Rational(0));
    for (std::size_t k = 0; k < L; ++k) {
        // r[k] = (f[k] - sum_{j<k} r[j] g[k-j]) / g[0]
        Rational s = convolve_range(r, g.coeffs(), k, 0, k);
        r[k] = (f[k] - s) / g[0];
    }
    return Series(std::move(r));
}

Series exp(const Series& f)
{
    std::size_t L = f.order();
    if (L > 0 && f[0] != 0) throw BadConstantTerm("exp needs constant term 0");
    std::vector<Rational> e(L, Rational(0));
    if (L == 0) return Series(std::move(e));
    e[0] = 1;
    // theta(e) = e * theta(f):  k e[k] = sum_{j=1..k} j f[j] e[k-j]
    std::vector<Rational> tf(L);
    for (std::size_t j = 0; j < L; ++j) tf[j] = Rational(j) * f[j];
    for (std::size_t k = 1; k < L; ++k) {
        Rational s = convolve_range(tf, e, k, 1, k + 1);
        e[k] = s / Rational(k);
    }
    return Series(std::move(e));
}

Series log(const Series& f)
{
    std::size_t L = f.order();
    if (L > 0 && f[0] != 1) throw BadConstantTerm("log needs constant term 1");
    // theta(log f) = theta(f)/f, then divide coefficient k by k.
    Series t = theta(f) / f;
    std::vector<Rational> out(L, Rational(0));
    for (std::size_t k = 1; k < L; ++k) out[k] = t[k] / Rational(k);
    return Series(std::move(out));
}

Series pow_alpha(const Series& f, const Rational& alpha)
{
    if (f.order() > 0 && f[0] != 1) throw BadConstantTerm("pow_alpha needs constant term 1");
    if (alpha == 0) return Series::one(f.order());
    return exp(alpha * log(f));
}

Series pow_int(const Series& f, unsigned long n)
{
    Series acc = Series::one(f.order());
    Series base = f;
    while (n > 0) {
        if (n & 1UL) acc = acc * base;
        n >>= 1UL;
        if (n > 0) base = base * base;
    }
    return acc;
}

Series compose(const Series& f, const Series& g)
{
    std::size_t L = std::min(f.order(), g.order());
    if (L > 0 && g[0] != 0) throw NonNilpotentInner("compose needs inner constant term 0");
    if (L == 0) return Series(std::vector<Rational>{});
    // Horner: coefficients of f beyond L feed only z^L and higher.
    Series r = Series::monomial(f[L - 1], 0, L);
    for (std::size_t k = L - 1; k-- > 0;) {
        r = r * truncate(g, L);
        r = r + Series::monomial(f[k], 0, L);
    }
    return r;
}

Series stretch(const Series& f, std::size_t k, std::size_t target_order)
{
    if (k == 0) throw Error("stretch exponent must be positive");
    if (f.order() < (target_order + k - 1) / k) {
        throw Error("stretch target exceeds known coefficients");
    }
    std::vector<Rational> c(target_order, Rational(0));
    for (std::size_t j = 0; j * k < target_order; ++j) c[j * k] = f[j];
    return Series(std::move(c));
}

Series stretch(const Series& f, std::size_t k)
{
    return stretch(f, k, f.order());
}

namespace {

// d/dz, order shrinks by one unless `pad_top`
Series derivative(const Series& f, bool pad_top)
{
    std::size_t L = f.order();
    std::vector<Rational> c(pad_top ? L : (L > 0 ? L - 1 : 0), Rational(0));
    for (std::size_t kk = 0; kk + 1 < L; ++kk) c[kk] = Rational(kk + 1) * f[kk + 1];
    return Series(std::move(c));
}

} // namespace

Series revert(const Series& f)
{
    std::size_t L = f.order();
    if (L < 2 || f[0] != 0 || f[1] == 0) {
        throw NotReversible("revert needs f(0)=0 and f'(0)!=0");
    }
    // Newton: g <- g - (f(g) - z)/f'(g), correct order doubles per step.
    std::vector<Rational> g(2, Rational(0));
    g[1] = 1 / f[1];
    std::size_t correct = 2;
    while (correct < L) {
        std::size_t w = std::min(2 * correct, L);
        g.resize(w, Rational(0));
        Series gw{std::vector<Rational>(g)};
        Series fw = truncate(f, w);
        Series num = compose(fw, gw) - Series::identity(w);
        // The padded top coefficient of f' is never read: num vanishes to
        // order >= 2, so the quotient has positive valuation.
        Series fprime = w < L ? truncate(derivative(f, false), w) : derivative(f, true);
        Series corr = num / compose(fprime, gw);
        for (std::size_t kk = 0; kk < w; ++kk) g[kk] -= corr[kk];
        correct = w;
    }
    return Series(std::move(g));
}

Series theta(const Series& f)
{
    std::vector<Rational> c(f.order());
    for (std::size_t k = 0; k < f.order(); ++k) c[k] = Rational(k) * f[k];
    return Series(std::move(c));
}

Series rescale(const Series& f, const Rational& s)
{
    std::vector<Rational> c(f.order());
    Rational power(1);
    for (std::size_t k = 0; k < f.order(); ++k) {
        c[k] = power * f[k];
        power *= s;
    }
    return Series(std::move(c));
}

Series shift_up(const Series& f)
{
    std::vector<Rational> c(f.order() + 1, Rational(0));
    for (std::size_t k = 0; k < f.order(); ++k) c[k + 1] = f[k];
    return Series(std::move(c));
}

Series shift_down(const Series& f)
{
    if (f.order() == 0 || f[0] != 0) throw BadConstantTerm("shift_down needs constant term 0");
    std::vector<Rational> c(f.order() - 1);
    for (std::size_t k = 1; k < f.order(); ++k) c[k - 1] = f[k];
    return Series(std::move(c));
}

Series truncate(const Series& f, std::size_t order)
{
    if (order >= f.order()) return f;
    return Series(std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + order));
}

bool all_integer(const Series& f)
{
    return !first_non_integer(f).has_value();
}

std::optional<std::size_t> first_non_integer(const Series& f)
{
    for (std::size_t k = 0; k < f.order(); ++k) {
        if (f[k].get_den() != 1) return k;
    }
    return std::nullopt;
}

} // namespace mirrorlab
