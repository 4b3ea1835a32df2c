#pragma once

// Seeded random inputs for property checks.

#include "iterlog/series.hpp"

#include <random>

namespace iterlog {

using Rng = std::mt19937_64;

// p/q with |p| <= 9, 1 <= q <= 9.
inline Rational random_rational(Rng& rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng)
{
    Rational q;
    do {
        q = random_rational(rng);
    } while (sgn(q) == 0);
    return q;
}

// z + random terms of degree 2..order.
inline Series<Rational> random_unitary(Rng& rng, int order)
{
    Series<Rational> f = Series<Rational>::identity(order);
    for (int k = 2; k <= order; ++k) {
        f.set_coeff(k, random_rational(rng));
    }
    return f;
}

// Random series in z^{v} Q[[z]] with a nonzero z^v coefficient.
inline Series<Rational> random_from_degree(Rng& rng, int v, int order)
{
    Series<Rational> f(order);
    if (v > order) {
        return f;
    }
    f.set_coeff(v, random_nonzero_rational(rng));
    for (int k = v + 1; k <= order; ++k) {
        f.set_coeff(k, random_rational(rng));
    }
    return f;
}

}  // namespace iterlog
