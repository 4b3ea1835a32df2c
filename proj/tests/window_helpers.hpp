#pragma once

#include "iterlog/random.hpp"
#include "iterlog/trimat.hpp"

namespace testing_helpers {

using iterlog::Rational;
using iterlog::Rng;
using iterlog::TriWindow;

// Random window in tr^k (entries with j - i >= k), optionally plus the identity.
inline TriWindow<Rational> random_window(Rng& rng, int size, int k, bool unipotent = false)
{
    TriWindow<Rational> m(size);
    for (int i = 0; i < size; ++i) {
        for (int j = i + k; j < size; ++j) {
            m.set(i, j, iterlog::random_rational(rng));
        }
        if (unipotent) {
            m.set(i, i, 1);
        }
    }
    return m;
}

}  // namespace testing_helpers
