#pragma once

// Windows and expansions as printed in the source text, transcribed by hand.
// Entries below the diagonal are ignored. Known misprints are kept as printed;
// the tests that read them say which entries are skipped.

#include "iterlog/diffpoly.hpp"
#include "iterlog/rational.hpp"
#include "iterlog/trimat.hpp"

#include <vector>

namespace printed {

using iterlog::Rational;
using Grid = std::vector<std::vector<Rational>>;

inline Rational q(long p, long d = 1) { return iterlog::make_rational(p, d); }

inline iterlog::TriWindow<Rational> window(const Grid& g)
{
    iterlog::TriWindow<Rational> m(static_cast<int>(g.size()));
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i; j < m.size(); ++j) {
            m.set(i, j, g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    return m;
}

inline Grid stirling()
{
    return {{1, 0, 0, 0, 0, 0},
            {0, 1, 1, 1, 1, 1},
            {0, 0, 1, 3, 7, 15},
            {0, 0, 0, 1, 6, 25},
            {0, 0, 0, 0, 1, 10},
            {0, 0, 0, 0, 0, 1}};
}

inline Grid stirling_inverse()
{
    return {{1, 0, 0, 0, 0, 0},
            {0, 1, -1, 2, -6, 24},
            {0, 0, 1, -3, 11, -50},
            {0, 0, 0, 1, -6, 35},
            {0, 0, 0, 0, 1, -10},
            {0, 0, 0, 0, 0, 1}};
}

// (4,6) and (5,6) are printed with the wrong sign.
inline Grid log_stirling()
{
    return {{0, 0, 0, 0, 0, 0, 0},
            {0, 0, 1, q(-1, 2), q(1, 2), q(-2, 3), q(11, 12)},
            {0, 0, 0, 3, -2, q(5, 2), -4},
            {0, 0, 0, 0, 6, -5, q(15, 2)},
            {0, 0, 0, 0, 0, 10, 10},
            {0, 0, 0, 0, 0, 0, -15},
            {0, 0, 0, 0, 0, 0, 0}};
}

inline Grid lambda_stirling()
{
    return {{1, 0, 0, 0, 0, 0},
            {0, 1, q(-1, 2), q(1, 2), q(-2, 3), q(11, 12)},
            {0, 0, 1, q(-3, 2), q(5, 2), q(-25, 6)},
            {0, 0, 0, 1, -3, q(15, 2)},
            {0, 0, 0, 0, 1, -5},
            {0, 0, 0, 0, 0, 1}};
}

// A = log(S)+; (3,5) and (4,5) inherit the sign misprint.
inline Grid alpha()
{
    return {{0, 1, q(-1, 2), q(1, 2), q(-2, 3), q(11, 12)},
            {0, 0, 3, -2, q(5, 2), -4},
            {0, 0, 0, 6, -5, q(15, 2)},
            {0, 0, 0, 0, 10, 10},
            {0, 0, 0, 0, 0, -15},
            {0, 0, 0, 0, 0, 0}};
}

// [z/(1-z)] with Omega_n = 1/n
inline Grid pascal()
{
    return {{1, 0, 0, 0, 0, 0},
            {0, 1, 2, 3, 4, 5},
            {0, 0, 1, 3, 6, 10},
            {0, 0, 0, 1, 4, 10},
            {0, 0, 0, 0, 1, 5},
            {0, 0, 0, 0, 0, 1}};
}

// (log(S)+ entry misprints) as (row, col) pairs in the log(S) and A windows.
inline std::vector<std::pair<int, int>> log_stirling_misprints() { return {{4, 6}, {5, 6}}; }
inline std::vector<std::pair<int, int>> alpha_misprints() { return {{3, 5}, {4, 5}}; }

// psi-expansions of the defining sum for d = 0, 1, 2: coefficients of psi^0..psi^4.
inline std::vector<std::vector<Rational>> psi_series()
{
    return {{1, 1, 1}, {0, 1, 3, 7}, {0, 0, 1, 6, 25}};
}

using iterlog::DiffPoly;

inline DiffPoly X(int r) { return DiffPoly::x(r); }

// G_{mn} for 0 <= m <= n <= 3.
inline std::vector<std::vector<DiffPoly>> g()
{
    const DiffPoly z;
    const DiffPoly one(Rational(1));
    return {{DiffPoly::inv_xprime(), z, z, z},
            {z, one, -X(2), (X(2) * X(2)).scaled(3) - X(1) * X(3)},
            {z, z, X(1), (X(1) * X(2)).scaled(-3)},
            {z, z, z, X(1) * X(1)}};
}

// H_{kn} for 0 <= k <= n <= 3.
inline std::vector<std::vector<DiffPoly>> h()
{
    const DiffPoly z;
    const DiffPoly one(Rational(1));
    const DiffPoly x1 = X(1), x2 = X(2), x3 = X(3), x4 = X(4);
    return {{one, x2, x1 * x3 - x2 * x2, x1 * x1 * x4 - (x1 * x2 * x3).scaled(4) + (x2 * x2 * x2).scaled(3)},
            {z, x1, x1 * x2, (x1 * x2 * x2).scaled(-3) + (x1 * x1 * x3).scaled(2)},
            {z, z, x1 * x1, z},
            {z, z, z, x1 * x1 * x1}};
}

}  // namespace printed
