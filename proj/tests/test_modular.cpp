#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mirrorlab/errors.hpp"
#include "mirrorlab/modular_type.hpp"

#include "corpus.hpp"
#include "properties.hpp"
#include "test_util.hpp"

using namespace mirrorlab;

namespace {

const HGParams quintic = HGParams::parse("1/5,2/5,3/5,4/5");

// (5k)! / (k!)^5
Rational rescaled_quintic_coeff(unsigned long k)
{
    Integer num, kf;
    mpz_fac_ui(num.get_mpz_t(), 5 * k);
    mpz_fac_ui(kf.get_mpz_t(), k);
    Rational r(num, kf * kf * kf * kf * kf);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("n_constant on the classified cases")
{
    CHECK(n_constant(quintic) == 3125);
    CHECK(n_constant(HGParams::parse("1/2,1/2,1/2,1/2")) == 256);
    CHECK(n_constant(HGParams::parse("1/3,1/3,2/3,2/3")) == 729);

    const std::pair<const char*, long> expected[] = {
        {"1/2,1/2,1/2,1/2", 256},       {"1/3,1/3,2/3,2/3", 729},
        {"1/4,1/2,1/2,3/4", 1024},      {"1/4,1/4,3/4,3/4", 4096},
        {"1/5,2/5,3/5,4/5", 3125},      {"1/8,3/8,5/8,7/8", 65536},
        {"1/10,3/10,7/10,9/10", 800000},{"1/6,1/2,1/2,5/6", 6912},
        {"1/3,1/2,1/2,2/3", 432},       {"1/6,1/3,2/3,5/6", 11664},
        {"1/6,1/6,5/6,5/6", 186624},    {"1/4,1/3,2/3,3/4", 1728},
        {"1/6,1/4,3/4,5/6", 27648},     {"1/12,5/12,7/12,11/12", 2985984},
    };
    for (const auto& [params, N] : expected) {
        CHECK(n_constant(HGParams::parse(params)) == N);
    }

    CHECK_THROWS_AS(n_constant(HGParams::parse("1/5,2/5,3/5,1/2")), IncompleteOrbit);
}

TEST_CASE("quintic N is the smallest sufficient 5-power")
{
    Series F = series_F(quintic, 30);
    Integer P(1);
    for (int e = 0; e < 5; ++e) {
        CHECK(!all_integer(rescale(F, Rational(P))));
        P *= 5;
    }
    CHECK(all_integer(rescale(F, Rational(P))));
    // and the rescaled coefficients match the factorial-ratio oracle
    Series FN = rescale(F, Rational(3125));
    for (unsigned long k = 0; k < 30; ++k) {
        CHECK(FN[k] == rescaled_quintic_coeff(k));
    }
}

TEST_CASE("minimality probe")
{
    auto probe = n_minimality_probe(quintic, Integer(3125), 30);
    CHECK(probe.f_rescaled_integer);
    REQUIRE(probe.divided_failures.size() == 1);
    CHECK(probe.divided_failures[0].first == 5);
    CHECK(probe.divided_failures[0].second.has_value());
}

TEST_CASE("case construction")
{
    CYCase c(quintic);
    CHECK(c.N() == 3125);
    CHECK(c.n0() == 5);
    CYCase other(HGParams::parse("1/2,1/2,1/2,1/2"));
    CHECK(other.N() == 256);
    CHECK(other.n0() == 0); // no shipped normalization outside the quintic
    CHECK_THROWS_AS(CYCase(HGParams::parse("1/7,2/7,3/7,4/7")), ParseError);
    CHECK_THROWS_AS(CYCase(HGParams::parse("1/2,1/2")), ParseError);
}

TEST_CASE("u_series structure")
{
    CYCase c(quintic);
    auto u = u_series(c, 12);
    CHECK(u[0] == Series::identity(12));
    CHECK(u[1][0] == 1);
    CHECK(u[2][0] == 0);
    CHECK(u[3][0] == 0);
    CHECK(u[4][0] == 0);

    Series w = u[5] / (u[1] * u[1]);
    CHECK(w[1] == 770);

    for (const auto& a : testutil::cy_cases()) {
        CYCase cc(a);
        auto uu = u_series(cc, 10);
        Series ratio_at_N = rescale(ratio_GF(a, 10), Rational(cc.N()));
        CHECK(uu[5] == uu[1] * uu[1] * theta(ratio_at_N));
        // F(Nz) integral implies the theta tower stays integral
        CHECK(all_integer(uu[1]));
        CHECK(all_integer(uu[2]));
        CHECK(all_integer(uu[3]));
        CHECK(all_integer(uu[4]));
    }
}

TEST_CASE("rescaled mirror map and its inverse")
{
    Series q = rescaled_mirror_q(quintic, Integer(3125), 12);
    CHECK(q[1] == 1);
    CHECK(q[2] == 770);
    CHECK(all_integer(q));
    Series z_of_q = revert(truncate(q, 9));
    CHECK(z_of_q[2] == -770);
    CHECK(z_of_q[3] == 171525);
    CHECK(all_integer(z_of_q));
}

TEST_CASE("integrality suite")
{
    CYCase c(quintic);
    auto rep = integrality_suite(c, 18, 8);
    CHECK(rep.all_integral);
    CHECK(!rep.first_failure.has_value());

    CHECK_THROWS_AS(integrality_suite(c, 8, 8), ParseError);
}

TEST_CASE("integrality suite passes on every classified case")
{
    for (const auto& a : testutil::cy_cases()) {
        CYCase c(a);
        auto rep = integrality_suite(c, 14, 6);
        CAPTURE(a.str());
        CHECK(rep.all_integral);
    }
}

TEST_CASE("yukawa coupling of the quintic")
{
    CYCase c(quintic);
    Series Y = yukawa(c, 4);
    REQUIRE(Y.order() == 5);
    CHECK(Y[0] == 5);
    CHECK(Y[1] == 2875);
    CHECK(Y[2] == Rational(Integer("4876875")));
    auto nd = instanton_numbers(Y, 3);
    CHECK(nd[0] == 2875);
    CHECK(nd[1] == 609250);
    CHECK(nd[2] == Rational(Integer("317206375")));
}

TEST_CASE("instanton extraction")
{
    Series constant = Series::monomial(Rational(5), 0, 6);
    auto nd = instanton_numbers(constant, 5);
    for (const auto& v : nd) CHECK(v == 0);

    CHECK_THROWS_AS(instanton_numbers(constant, 6), ParseError);

    CHECK(testutil::prop_lambert_roundtrip(901, 200));
}

TEST_CASE("quintic q-expansion stays integral to order 20")
{
    Series q = rescaled_mirror_q(quintic, Integer(3125), 21);
    CHECK(all_integer(q));
}
