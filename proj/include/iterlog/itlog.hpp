#pragma once

// Iterative logarithm and fractional iterates of unitary series over Q.

#include "iterlog/itermat.hpp"
#include "iterlog/poly.hpp"
#include "iterlog/series.hpp"

namespace iterlog {

using QSeries = Series<Rational>;
using TSeries = Series<UPoly>;   // coefficients in Q[t]
using STSeries = Series<BPoly>;  // coefficients in Q[s,t]

// h with log [f]^Omega = <h>^Omega, read off the matrix logarithm. The
// result is computed with Omega = Phi and cross-checked against Omega = 1;
// a disagreement throws std::logic_error.
QSeries itlog_via_matrix(const QSeries& f, int order);
QSeries itlog_via_matrix(const QSeries& f, int order, const RefSeq& omega);

// sum_{n>=1} (-1)^{n-1}/n h[n] with h[0] = z, h[n+1] = h[n] o f - h[n].
QSeries itlog_via_series(const QSeries& f, int order);

struct FractionalIterate {
    TSeries series;  // f^[t]
    QSeries base;    // f

    // f^[a]
    QSeries at(const Rational& a) const;
};

// Row 1 of sum_n binom(t, n) ([f] - 1)^n.
FractionalIterate fractional_iterate_binomial(const QSeries& f, int order);
// Row 1 of exp(t <itlog f>).
FractionalIterate fractional_iterate_exp(const QSeries& f, int order);

// itlog(f) * f' - itlog(f) o f, valid to order N-1.
QSeries julia_residual(const QSeries& f, int order);

struct AczelJabotinskyResidual {
    TSeries loewner;      // d/dt f^[t] - f_* * d/dz f^[t]
    TSeries composition;  // d/dt f^[t] - f_* o f^[t]
};
AczelJabotinskyResidual aczel_jabotinsky_residual(const QSeries& f, int order);

// f^[s+t] - f^[s] o f^[t] over Q[s,t].
STSeries translation_residual(const QSeries& f, int order);

// Helpers for moving between coefficient rings.
TSeries lift_to_t(const QSeries& f);
STSeries lift_t_to_st(const TSeries& f);   // p(t) -> p(t)
STSeries lift_t_as_s(const TSeries& f);    // p(t) -> p(s)
STSeries substitute_s_plus_t(const TSeries& f);  // p(t) -> p(s+t)
TSeries d_dt(const TSeries& f);
QSeries evaluate_t(const TSeries& f, const Rational& a);

}  // namespace iterlog
