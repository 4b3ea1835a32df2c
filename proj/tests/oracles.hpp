#pragma once

// Independent reference computations used only by the tests.

#include "iterlog/rational.hpp"
#include "iterlog/series.hpp"

#include <vector>

namespace oracle {

using iterlog::Integer;
using iterlog::Rational;

// [z^n] 1/(1 - c z)^m = binom(n + m - 1, m - 1) c^n
inline Rational inv_power_coeff(const Rational& c, int m, int n)
{
    Rational p = 1;
    for (int i = 0; i < n; ++i) {
        p *= c;
    }
    return Rational(iterlog::binomial(n + m - 1, m - 1)) * p;
}

// z / (1 - c z) truncated to order n.
inline iterlog::Series<Rational> moebius(const Rational& c, int n)
{
    std::vector<Rational> v;
    for (int k = 1; k <= n; ++k) {
        v.push_back(inv_power_coeff(c, 1, k - 1));
    }
    return iterlog::Series<Rational>::from_coeffs(v);
}

// {j brace i} = (1/i!) sum_b (-1)^(i-b) binom(i, b) b^j
inline Integer stirling2_explicit(int j, int i)
{
    if (i < 0 || j < 0 || i > j) {
        return 0;
    }
    Integer acc = 0;
    for (int b = 0; b <= i; ++b) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(j));
        Integer term = iterlog::binomial(i, b) * p;
        acc += ((i - b) % 2 == 0) ? term : Integer(-term);
    }
    return acc / iterlog::factorial(i);
}

// [j brack i] as the x^i coefficient of x (x+1) ... (x+j-1).
inline Integer stirling1_rising(int j, int i)
{
    std::vector<Integer> p{1};
    for (int k = 0; k < j; ++k) {
        std::vector<Integer> q(p.size() + 1, Integer(0));
        for (std::size_t d = 0; d < p.size(); ++d) {
            q[d + 1] += p[d];
            q[d] += k * p[d];
        }
        p = q;
    }
    return (i >= 0 && static_cast<std::size_t>(i) < p.size()) ? p[static_cast<std::size_t>(i)] : Integer(0);
}

inline Integer lah(int i, int j)
{
    if (i == 0) {
        return j == 0 ? 1 : 0;
    }
    if (i > j) {
        return 0;
    }
    return iterlog::binomial(j - 1, i - 1) * iterlog::factorial(j) / iterlog::factorial(i);
}

// Chains 1 < n_1 < ... < n_k = end enumerated as bitmasks over {2, ..., end-1}.
template <class Fn>
void for_each_chain(int end, Fn&& fn)
{
    if (end < 2) {
        return;
    }
    const int inner = end - 2;
    for (unsigned long mask = 0; mask < (1ul << inner); ++mask) {
        std::vector<int> chain;
        for (int b = 0; b < inner; ++b) {
            if (mask & (1ul << b)) {
                chain.push_back(b + 2);
            }
        }
        chain.push_back(end);
        fn(chain);
    }
}

inline Rational c_pathsum_bruteforce(int n)
{
    Rational acc = 0;
    for_each_chain(n, [&](const std::vector<int>& ch) {
        Integer p = 1;
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
            p *= stirling2_explicit(ch[i + 1], ch[i]);
        }
        const int k = static_cast<int>(ch.size());
        acc += Rational(k % 2 == 1 ? p : Integer(-p), k);
    });
    acc.canonicalize();
    return acc;
}

// Lambda(S)_{1,m} as a chain sum from 1 (empty chain for m = 1).
inline Rational lambda_row1_bruteforce(int m)
{
    if (m == 1) {
        return 1;
    }
    Rational acc = 0;
    for_each_chain(m, [&](const std::vector<int>& ch) {
        Integer p = 1;
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
            p *= stirling2_explicit(ch[i + 1], ch[i]);
        }
        const int k = static_cast<int>(ch.size());
        acc += Rational(k % 2 == 0 ? p : Integer(-p), k + 1);
    });
    acc.canonicalize();
    return acc;
}

// The sequence as printed, c_1..c_13.
inline std::vector<Rational> printed_c()
{
    return {Rational(0),          Rational(1),           Rational(-1, 2),    Rational(1, 2),        Rational(-2, 3),
            Rational(11, 12),     Rational(-3, 4),       Rational(-11, 6),   Rational(29, 4),       Rational(493, 12),
            Rational(-2711, 6),   Rational(-12406, 15),  Rational(2636317, 60)};
}

}  // namespace oracle
