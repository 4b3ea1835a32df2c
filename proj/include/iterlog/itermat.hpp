#pragma once

// Iteration matrices [f]^Omega and infinitesimal iteration matrices <h>^Omega.
//
// Row i of [f]^Omega holds the coefficients of Omega_i f^i in the basis
// Omega_j z^j. Rows are built by repeated series multiplication, so the
// entries are the Bell polynomials B^Omega_{ij} evaluated at f.

#include "iterlog/errors.hpp"
#include "iterlog/format.hpp"
#include "iterlog/refseq.hpp"
#include "iterlog/series.hpp"
#include "iterlog/trimat.hpp"

#include <optional>
#include <string>

namespace iterlog {

template <CoeffRing T>
struct IterationMatrix {
    TriWindow<T> window;
    Series<T> source;
    RefSeq omega;
};

template <CoeffRing T>
struct InfinitesimalMatrix {
    TriWindow<T> window;
    Series<T> source;
    RefSeq omega;
};

namespace detail {

template <CoeffRing T>
Series<T> require_order(const Series<T>& f, int order, const char* what)
{
    if (!f.has_zero_constant()) {
        throw DomainError(std::string(what) + " needs a series with zero constant term");
    }
    if (order < 0 || f.order() < order) {
        throw OrderError(std::string(what) + ": series of order " + std::to_string(f.order()) +
                         " cannot fill a window up to index " + std::to_string(order));
    }
    return f.truncated(order);
}

}  // namespace detail

// Window of [f]^Omega with rows and columns 0..order.
template <CoeffRing T>
IterationMatrix<T> iteration_matrix(const Series<T>& f, const RefSeq& omega, int order)
{
    using R = RingTraits<T>;
    const Series<T> g = detail::require_order(f, order, "iteration_matrix");
    const int size = order + 1;
    std::vector<Rational> om;
    om.reserve(static_cast<std::size_t>(size));
    for (int j = 0; j < size; ++j) {
        om.push_back(omega(j));
    }
    TriWindow<T> w(size);
    w.set(0, 0, R::one());
    Series<T> power = g;
    for (int i = 1; i < size; ++i) {
        if (i > 1) {
            power = power * g;
        }
        for (int j = i; j < size; ++j) {
            w.at(i, j) = R::scale(power.coeff(j), om[static_cast<std::size_t>(i)] / om[static_cast<std::size_t>(j)]);
        }
    }
    return {std::move(w), g, omega};
}

// Row 1 read back as a series: f_j = Omega_j * M(1, j).
template <CoeffRing T>
Series<T> series_from_row(const TriWindow<T>& m, const RefSeq& omega)
{
    if (m.size() < 2) {
        throw DimensionError("series_from_row needs a window of size at least 2");
    }
    std::vector<T> c;
    for (int j = 1; j < m.size(); ++j) {
        c.push_back(RingTraits<T>::scale(m(1, j), omega(j)));
    }
    return Series<T>::from_coeffs(std::move(c));
}

template <CoeffRing T>
Series<T> series_from_row(const IterationMatrix<T>& m)
{
    return series_from_row(m.window, m.omega);
}

// <h>^Omega: entry (i,j) = (Omega_i / Omega_j) * i * h_{j-i+1}.
template <CoeffRing T>
InfinitesimalMatrix<T> infinitesimal_matrix(const Series<T>& h, const RefSeq& omega, int order)
{
    const Series<T> g = detail::require_order(h, order, "infinitesimal_matrix");
    const int size = order + 1;
    TriWindow<T> w(size);
    for (int i = 1; i < size; ++i) {
        const Rational oi = omega(i);
        for (int j = i; j < size; ++j) {
            w.at(i, j) = RingTraits<T>::scale(g.coeff(j - i + 1), oi * i / omega(j));
        }
    }
    return {std::move(w), g, omega};
}

// e_n^Omega = <z^{n+1}>^Omega = diag_n(Omega_i / Omega_{i+n} * i).
template <CoeffRing T = Rational>
InfinitesimalMatrix<T> e_basis(int n, const RefSeq& omega, int order)
{
    if (n < 0 || n > order) {
        throw DimensionError("e_basis index outside the window");
    }
    std::vector<T> a;
    for (int i = 0; i + n <= order; ++i) {
        a.push_back(RingTraits<T>::from_rational(omega(i) * i / omega(i + n)));
    }
    return {diag_n(n, a, order + 1), Series<T>::monomial(RingTraits<T>::one(), n + 1, order), omega};
}

template <CoeffRing T>
struct Violation {
    int row = 0;
    int col = 0;
    T expected;
    T actual;
};

template <CoeffRing T>
struct Decomposition {
    std::optional<Series<T>> series;
    std::optional<Violation<T>> violation;

    bool ok() const { return series.has_value(); }
};

// Finds h with <h>^Omega = M, reading h from row 1 and checking every other
// entry. A mismatch is reported with the first offending entry in row-major
// order rather than thrown.
template <CoeffRing T>
Decomposition<T> decompose_infinitesimal(const TriWindow<T>& m, const RefSeq& omega)
{
    if (!m.in_tr(1)) {
        throw DomainError("decompose_infinitesimal needs a strictly triangular window");
    }
    if (m.size() < 2) {
        throw DimensionError("decompose_infinitesimal needs a window of size at least 2");
    }
    const Series<T> h = series_from_row(m, omega);
    const TriWindow<T> rebuilt = infinitesimal_matrix(h, omega, m.size() - 1).window;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i; j < m.size(); ++j) {
            if (!(rebuilt(i, j) == m(i, j))) {
                return {std::nullopt, Violation<T>{i, j, rebuilt(i, j), m(i, j)}};
            }
        }
    }
    return {h, std::nullopt};
}

template <CoeffRing T>
nlohmann::json to_json(const IterationMatrix<T>& m)
{
    nlohmann::json j = window_to_json(m.window);
    j["provenance"] = {{"kind", "iteration"}, {"series", to_list_string(m.source)}, {"refseq", m.omega.name()}};
    return j;
}

template <CoeffRing T>
nlohmann::json to_json(const InfinitesimalMatrix<T>& m)
{
    nlohmann::json j = window_to_json(m.window);
    j["provenance"] = {{"kind", "infinitesimal"}, {"series", to_list_string(m.source)}, {"refseq", m.omega.name()}};
    return j;
}

}  // namespace iterlog
