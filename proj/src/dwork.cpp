#include "mirrorlab/dwork.hpp"

#include "mirrorlab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace mirrorlab {

std::optional<std::size_t> series_p_integral(const Series& f, unsigned long p)
{
    for (std::size_t k = 0; k < f.order(); ++k) {
        if (!is_p_integral(f[k], p)) return k;
    }
    return std::nullopt;
}

Rational dwork_op(const Rational& x, unsigned long p)
{
    if (!is_p_integral(x, p)) throw BadPrime("prime divides the denominator");
    // x0 = (-x mod p) picked so (x + x0)/p is p-integral again.
    Integer num = x.get_num(), den = x.get_den();
    Integer pz(p);
    Integer den_inv, x0;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    x0 = (-num * den_inv) % pz;
    if (x0 < 0) x0 += pz;
    Rational out = (x + Rational(x0)) / Rational(pz);
    out.canonicalize();
#ifndef NDEBUG
    if (x >= 0 && x < 1) {
        // modular-inverse form of the same map, as an independent check
        Integer p_inv;
        if (den > 1) {
            mpz_invert(p_inv.get_mpz_t(), pz.get_mpz_t(), den.get_mpz_t());
            Integer alt_num = (p_inv * num) % den;
            assert(out == Rational(alt_num, den));
        }
    }
#endif
    return out;
}

Rational dwork_op_search(const Rational& x, unsigned long p)
{
    if (!is_p_integral(x, p)) throw BadPrime("prime divides the denominator");
    for (unsigned long x0 = 0; x0 < p; ++x0) {
        Rational cand = (x + Rational(x0)) / Rational(Integer(p));
        cand.canonicalize();
        if (is_p_integral(cand, p)) return cand;
    }
    throw Error("dwork_op_search: no candidate found"); // unreachable
}

HGParams dwork_apply(const HGParams& a, unsigned long p)
{
    std::vector<Rational> image;
    image.reserve(a.size());
    for (const auto& ai : a.values()) image.push_back(dwork_op(ai, p));
    return HGParams(std::move(image));
}

bool condition_check(const HGParams& a, unsigned long p)
{
    if (!a.is_good_prime(p)) throw BadPrime("not a good prime for these parameters");
    HGParams image = dwork_apply(a, p);
    if (image == a) return true;
    if (a.size() == 2) {
        std::vector<Rational> complement{1 - a.values()[0], 1 - a.values()[1]};
        std::sort(complement.begin(), complement.end());
        return image.values() == complement;
    }
    return false;
}

std::optional<std::size_t> dieudonne_test(const Series& f, unsigned long p)
{
    if (f.order() == 0 || f[0] != 1) throw BadConstantTerm("dieudonne_test needs f(0)=1");
    if (f.order() < p) throw Error("dieudonne_test needs order >= p");
    // g - 1 must lie in p Z_p[[z]]; its constant term is exactly 0.
    Series g = stretch(f, p, f.order()) / pow_int(f, p);
    for (std::size_t k = 1; k < g.order(); ++k) {
        if (g[k] != 0 && padic_val(g[k], p) < 1) return k;
    }
    return std::nullopt;
}

std::optional<std::size_t> dwork_theorem_check(const HGParams& a, unsigned long p,
                                               std::size_t order)
{
    if (!a.is_good_prime(p)) throw BadPrime("not a good prime for these parameters");
    HGParams image = dwork_apply(a, p);
    Series lhs = stretch(ratio_GF(image, order / p + 1), p, order + 1);
    Series rhs = Rational(Integer(p)) * ratio_GF(a, order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        Rational d = lhs[k] - rhs[k];
        if (d != 0 && padic_val(d, p) < 1) return k;
    }
    return std::nullopt;
}

FastCongruenceResult fast_congruence(const HGParams& a, unsigned long p, std::size_t order)
{
    if (!a.is_good_prime(p)) throw BadPrime("not a good prime for these parameters");
    HGParams image = dwork_apply(a, p);
    Series lhs = ratio_GF(image, order + 1);
    Series rhs = ratio_GF(a, order + 1);
    FastCongruenceResult res;
    res.is_equality = true;
    for (std::size_t k = 1; k <= order; ++k) {
        Rational d = lhs[k] - rhs[k];
        if (d != 0) {
            res.is_equality = false;
            if (padic_val(d, p) < 1) {
                res.first_failure = k;
                break;
            }
        }
    }
    return res;
}

unsigned long prime_in_class(unsigned long c, unsigned long r, unsigned long bound)
{
    if (c == 0) throw ParseError("zero modulus");
    if (std::gcd(r % c, c) != 1 && c != 1) throw Error("residue not coprime to modulus");
    for (unsigned long p = 2; p <= bound; ++p) {
        if (is_prime(p) && (p % c) * (r % c) % c == 1 % c) return p;
    }
    throw NotFound("no prime <= bound in the residue class");
}

namespace {

bool is_nonneg_integer_in(const Rational& v, long lo, long hi)
{
    if (v.get_den() != 1) return false;
    return v.get_num() >= lo && v.get_num() <= hi;
}

} // namespace

std::pair<unsigned long, Rational> dwork_structure_witness(const Rational& x, int item,
                                                           const WitnessCase& aux,
                                                           unsigned long bound)
{
    if (x <= 0 || x >= 1) throw ParseError("witness requires 0 < x < 1");
    unsigned long q = aux.q;
    Integer den = x.get_den();
    if (!den.fits_ulong_p()) throw ParseError("witness denominator too large");
    unsigned long d = den.get_ui();
    // canonical presentation d = s q^y with gcd(s, q) = 1
    unsigned y_actual = 0;
    unsigned long s = d;
    if (item != 1) {
        if (!is_prime(q)) throw ParseError("witness q must be prime");
        while (s % q == 0) {
            s /= q;
            ++y_actual;
        }
    }
    unsigned long qy = (item == 1) ? 1 : d / s; // q^y

    unsigned long residue = 0;
    switch (item) {
    case 1:
        residue = d - 1; // p^{-1} = -1 (mod d)
        break;
    case 2:
        if (y_actual != 0) throw ParseError("item 2 requires q prime to the denominator");
        residue = q % d;
        break;
    case 3:
        if (aux.y != y_actual) throw ParseError("item 3: y must match the denominator");
        residue = (s + q) % d;
        break;
    case 4: {
        if (y_actual < 1 || aux.m > y_actual) throw ParseError("item 4 requires y >= 1 and m <= y");
        unsigned long qym = 1; // q^{y-m}
        for (unsigned i = 0; i < y_actual - aux.m; ++i) qym *= q;
        residue = (1 + qym * s) % d;
        break;
    }
    default:
        throw ParseError("witness item must be 1..4");
    }
    // p with p^{-1} = residue (mod d), i.e. p * residue = 1
    unsigned long p = prime_in_class(d, residue, bound);
    Rational image = dwork_op(x, p);

    auto ok = [&]() -> bool {
        switch (item) {
        case 1:
            return image == 1 - x;
        case 2:
            // image = q x - i for some i = 0..q-1
            return is_nonneg_integer_in(Rational(q) * x - image, 0, static_cast<long>(q) - 1);
        case 3: {
            // image = q x + r/q^y - i,  r = 0..q^y - 1, i = 0..q
            Rational base = Rational(q) * x - image;
            for (unsigned long r = 0; r < qy; ++r) {
                if (is_nonneg_integer_in(base + Rational(Integer(r), Integer(qy)), 0,
                                         static_cast<long>(q))) {
                    return true;
                }
            }
            return false;
        }
        case 4: {
            if (image == x) return true;
            // image = x + r/q^m - i,  r = 1..q^m - 1, i = 0..1
            unsigned long qm = 1;
            for (unsigned i = 0; i < aux.m; ++i) qm *= q;
            Rational base = x - image;
            for (unsigned long r = 1; r < qm; ++r) {
                if (is_nonneg_integer_in(base + Rational(Integer(r), Integer(qm)), 0, 1)) {
                    return true;
                }
            }
            return false;
        }
        default:
            return false;
        }
    }();
    if (!ok) {
        throw FormViolation("dwork image " + rational_str(image) + " matches no allowed shape for item " +
                            std::to_string(item));
    }
    return {p, image};
}

IntegralityReport integrality_report(const HGParams& a, const Series& q, unsigned long p,
                                     std::size_t order, const CellChecks& checks)
{
    IntegralityReport rep;
    rep.p = p;
    rep.checked_order = order;
    if (checks.condition) rep.condition_holds = condition_check(a, p);
    if (checks.q_integrality) rep.q_first_failure = series_p_integral(truncate(q, order + 1), p);
    if (checks.fast_congruence) {
        auto fc = fast_congruence(a, p, order);
        rep.fast_congruence_failure = fc.first_failure;
        rep.fast_is_equality = fc.is_equality;
    }
    if (checks.dieudonne && order >= p && q.order() > order) {
        rep.dieudonne_ran = true;
        rep.dieudonne_failure = dieudonne_test(shift_down(truncate(q, order + 1)), p);
    }
    return rep;
}

} // namespace mirrorlab
