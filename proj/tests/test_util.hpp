#pragma once

#include "mirrorlab/hypergeom.hpp"
#include "mirrorlab/rational.hpp"
#include "mirrorlab/series.hpp"

#include <random>
#include <vector>

namespace testutil {

using mirrorlab::HGParams;
using mirrorlab::Rational;
using mirrorlab::Series;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long num_bound = 9, long den_bound = 12)
{
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    Rational x(num(rng), den(rng));
    x.canonicalize();
    return x;
}

// uniformly from { j/m : 0 < j < m <= den_bound }
inline Rational random_unit_interval(Rng& rng, long den_bound = 12)
{
    std::uniform_int_distribution<long> den(2, den_bound);
    long m = den(rng);
    std::uniform_int_distribution<long> num(1, m - 1);
    Rational x(num(rng), m);
    x.canonicalize();
    return x;
}

inline Series random_series(Rng& rng, std::size_t order)
{
    std::vector<Rational> c(order);
    for (auto& x : c) x = random_rational(rng);
    return Series(std::move(c));
}

// f with f(0) = 1
inline Series random_unit_series(Rng& rng, std::size_t order)
{
    auto c = random_series(rng, order).coeffs();
    if (order > 0) c[0] = 1;
    return Series(std::move(c));
}

// f = z + higher terms
inline Series random_reversible_series(Rng& rng, std::size_t order)
{
    auto c = random_series(rng, order).coeffs();
    if (order > 0) c[0] = 0;
    if (order > 1) c[1] = 1;
    return Series(std::move(c));
}

inline HGParams random_params(Rng& rng, std::size_t n, long den_bound = 12)
{
    std::vector<Rational> vals;
    for (std::size_t i = 0; i < n; ++i) vals.push_back(random_unit_interval(rng, den_bound));
    return HGParams(std::move(vals));
}

} // namespace testutil
