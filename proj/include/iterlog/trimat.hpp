#pragma once

// Finite windows of upper-triangular matrices over a coefficient ring.
//
// A window of size N+1 holds rows and columns 0..N of a bi-infinite
// triangular matrix. Products, powers, exp, log and Lambda of triangular
// matrices are compatible with taking the leading window, so every
// operation here is exact on the window.

#include "iterlog/errors.hpp"
#include "iterlog/exec.hpp"
#include "iterlog/poly.hpp"
#include "iterlog/refseq.hpp"
#include "iterlog/ring.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace iterlog {

template <CoeffRing T>
class TriWindow {
public:
    using coeff_type = T;
    using R = RingTraits<T>;

    explicit TriWindow(int size = 0) : n_(size), a_(checked_area(size), R::zero()) {}

    static TriWindow identity(int size)
    {
        TriWindow m(size);
        for (int i = 0; i < size; ++i) {
            m.at(i, i) = R::one();
        }
        return m;
    }

    int size() const { return n_; }

    const T& operator()(int i, int j) const
    {
        check_index(i, j);
        return a_[idx(i, j)];
    }

    void set(int i, int j, T value)
    {
        check_index(i, j);
        if (i > j && !R::is_zero(value)) {
            throw DomainError("nonzero entry below the diagonal at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        }
        a_[idx(i, j)] = std::move(value);
    }

    bool is_zero() const
    {
        return std::all_of(a_.begin(), a_.end(), [](const T& x) { return R::is_zero(x); });
    }

    // M in tr^k: entry (i,j) vanishes whenever j - i < k.
    bool in_tr(int k) const
    {
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_ && j - i < k; ++j) {
                if (!R::is_zero(a_[idx(i, j)])) {
                    return false;
                }
            }
        }
        return true;
    }

    // Largest k <= size with M in tr^k.
    int strictness() const
    {
        int k = 0;
        while (k < n_ && in_tr(k + 1)) {
            ++k;
        }
        return k;
    }

    bool is_unipotent() const
    {
        for (int i = 0; i < n_; ++i) {
            if (!(a_[idx(i, i)] == R::one())) {
                return false;
            }
        }
        return true;
    }

    template <class Fn>
    auto map(Fn&& fn) const -> TriWindow<decltype(fn(std::declval<const T&>()))>
    {
        using U = decltype(fn(std::declval<const T&>()));
        TriWindow<U> out(n_);
        for (int i = 0; i < n_; ++i) {
            for (int j = i; j < n_; ++j) {
                out.set(i, j, fn(a_[idx(i, j)]));
            }
        }
        return out;
    }

    friend bool operator==(const TriWindow& a, const TriWindow& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    TriWindow operator-() const
    {
        TriWindow r = *this;
        for (auto& x : r.a_) {
            x = T(-x);
        }
        return r;
    }
    friend TriWindow operator+(const TriWindow& a, const TriWindow& b) { return combine(a, b, false); }
    friend TriWindow operator-(const TriWindow& a, const TriWindow& b) { return combine(a, b, true); }

    TriWindow scaled(const T& x) const
        requires(!std::same_as<T, Rational>)
    {
        TriWindow r = *this;
        for (auto& v : r.a_) {
            v = T(v * x);
        }
        return r;
    }
    TriWindow scaled(const Rational& q) const
    {
        TriWindow r = *this;
        for (auto& v : r.a_) {
            v = R::scale(v, q);
        }
        return r;
    }

    // Unchecked mutable access for kernels; only (i <= j) may be written.
    T& at(int i, int j) { return a_[idx(i, j)]; }
    const T& at(int i, int j) const { return a_[idx(i, j)]; }

private:
    static std::size_t checked_area(int size)
    {
        if (size < 0) {
            throw DimensionError("negative window size");
        }
        return static_cast<std::size_t>(size) * static_cast<std::size_t>(size);
    }
    std::size_t idx(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    void check_index(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= n_ || j >= n_) {
            throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") outside a window of size " + std::to_string(n_));
        }
    }
    static TriWindow combine(const TriWindow& a, const TriWindow& b, bool subtract)
    {
        require_same_size(a, b);
        TriWindow r(a.n_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) {
            r.a_[k] = subtract ? T(a.a_[k] - b.a_[k]) : T(a.a_[k] + b.a_[k]);
        }
        return r;
    }

public:
    static void require_same_size(const TriWindow& a, const TriWindow& b)
    {
        if (a.n_ != b.n_) {
            throw DimensionError("window sizes differ: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
        }
    }

private:
    int n_ = 0;
    std::vector<T> a_;
};

namespace kernels {

// Row i of M*N only reads row i of M, so rows are independent.
template <CoeffRing T>
void mat_mul_row(const TriWindow<T>& m, const TriWindow<T>& n, TriWindow<T>& out, int i)
{
    const int size = m.size();
    for (int j = i; j < size; ++j) {
        T acc = RingTraits<T>::zero();
        for (int k = i; k <= j; ++k) {
            const T& a = m.at(i, k);
            if (RingTraits<T>::is_zero(a)) {
                continue;
            }
            acc = T(acc + T(a * n.at(k, j)));
        }
        out.at(i, j) = std::move(acc);
    }
}

template <CoeffRing T>
TriWindow<T> mat_mul_serial(const TriWindow<T>& m, const TriWindow<T>& n)
{
    TriWindow<T>::require_same_size(m, n);
    TriWindow<T> out(m.size());
    for (int i = 0; i < m.size(); ++i) {
        mat_mul_row(m, n, out, i);
    }
    return out;
}

template <CoeffRing T>
TriWindow<T> mat_mul_parallel(const TriWindow<T>& m, const TriWindow<T>& n)
{
    TriWindow<T>::require_same_size(m, n);
    TriWindow<T> out(m.size());
    const int size = m.size();
#pragma omp parallel for schedule(dynamic, 1) if (size >= 12)
    for (int i = 0; i < size; ++i) {
        mat_mul_row(m, n, out, i);
    }
    return out;
}

}  // namespace kernels

template <CoeffRing T>
TriWindow<T> mat_mul(const TriWindow<T>& m, const TriWindow<T>& n, Exec exec = Exec::parallel)
{
    return exec == Exec::parallel ? kernels::mat_mul_parallel(m, n) : kernels::mat_mul_serial(m, n);
}

template <CoeffRing T>
TriWindow<T> operator*(const TriWindow<T>& m, const TriWindow<T>& n)
{
    return mat_mul(m, n);
}

// [M, N] = MN - NM
template <CoeffRing T>
TriWindow<T> commutator(const TriWindow<T>& m, const TriWindow<T>& n)
{
    return m * n - n * m;
}

// n-diagonal window: entry (i, i+n) = a_i.
template <CoeffRing T>
TriWindow<T> diag_n(int n, const std::vector<T>& a, int size)
{
    if (n < 0 || n > size) {
        throw DimensionError("diagonal offset " + std::to_string(n) + " outside a window of size " +
                             std::to_string(size));
    }
    TriWindow<T> m(size);
    const int count = size - n;
    if (static_cast<int>(a.size()) < count) {
        throw DimensionError("diag_n needs " + std::to_string(count) + " entries, got " + std::to_string(a.size()));
    }
    for (int i = 0; i < count; ++i) {
        m.set(i, i + n, a[static_cast<std::size_t>(i)]);
    }
    return m;
}

template <CoeffRing T>
TriWindow<T> mat_pow(const TriWindow<T>& m, int k);

// Inverse of a triangular window with invertible diagonal, by back-substitution.
template <CoeffRing T>
TriWindow<T> mat_inverse(const TriWindow<T>& m)
{
    using R = RingTraits<T>;
    const int size = m.size();
    TriWindow<T> x(size);
    std::vector<T> diag_inv;
    diag_inv.reserve(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        if (!R::is_unit(m(i, i))) {
            throw NotInvertibleError("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                                     ") is not a unit");
        }
        diag_inv.push_back(R::inverse(m(i, i)));
    }
    for (int i = 0; i < size; ++i) {
        x.at(i, i) = diag_inv[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) {
            T acc = R::zero();
            for (int k = i; k < j; ++k) {
                acc = T(acc + T(x.at(i, k) * m.at(k, j)));
            }
            x.at(i, j) = T(-T(acc * diag_inv[static_cast<std::size_t>(j)]));
        }
    }
    return x;
}

// M^k for any integer k (negative powers need an invertible diagonal).
template <CoeffRing T>
TriWindow<T> mat_pow(const TriWindow<T>& m, int k)
{
    if (k < 0) {
        return mat_pow(mat_inverse(m), -k);
    }
    TriWindow<T> r = TriWindow<T>::identity(m.size());
    for (int i = 0; i < k; ++i) {
        r = r * m;
    }
    return r;
}

namespace detail {

template <CoeffRing T>
void require_strict(const TriWindow<T>& m, const char* what)
{
    if (!m.in_tr(1)) {
        throw DomainError(std::string(what) + " needs a strictly triangular window");
    }
}

template <CoeffRing T>
void require_unipotent(const TriWindow<T>& m, const char* what)
{
    if (!m.is_unipotent()) {
        throw DomainError(std::string(what) + " needs a unipotent window (1 + strictly triangular)");
    }
}

// sum_{k=0}^{size} weight(k) * X^k for strictly triangular X. X^size = 0 on
// the window, so the truncated sum is exact.
template <CoeffRing T, class Weight>
TriWindow<T> nilpotent_series(const TriWindow<T>& x, Weight&& weight)
{
    const int size = x.size();
    TriWindow<T> power = TriWindow<T>::identity(size);
    TriWindow<T> acc = TriWindow<T>::identity(size).scaled(weight(0));
    for (int k = 1; k <= size; ++k) {
        power = power * x;
        acc = acc + power.scaled(weight(k));
    }
    return acc;
}

}  // namespace detail

// exp(M) = sum M^n / n! for strictly triangular M.
template <CoeffRing T>
TriWindow<T> mat_exp(const TriWindow<T>& m)
{
    detail::require_strict(m, "mat_exp");
    return detail::nilpotent_series(m, [](int k) { return Rational(Integer(1), factorial(k)); });
}

// log(M) = sum_{n>=1} (-1)^{n+1} (M-1)^n / n for unipotent M.
template <CoeffRing T>
TriWindow<T> mat_log(const TriWindow<T>& m)
{
    detail::require_unipotent(m, "mat_log");
    const TriWindow<T> x = m - TriWindow<T>::identity(m.size());
    return detail::nilpotent_series(x, [](int k) {
        return k == 0 ? Rational(0) : make_rational(k % 2 == 1 ? 1 : -1, k);
    });
}

// Lambda(M) = sum_{n>=0} (-1)^n (M-1)^n / (n+1); Lambda(M)(M-1) = log(M).
template <CoeffRing T>
TriWindow<T> lambda_op(const TriWindow<T>& m)
{
    detail::require_unipotent(m, "lambda_op");
    const TriWindow<T> x = m - TriWindow<T>::identity(m.size());
    return detail::nilpotent_series(x, [](int k) { return make_rational(k % 2 == 0 ? 1 : -1, k + 1); });
}

// M+ = (M_{i+1,j+1}); one size smaller.
template <CoeffRing T>
TriWindow<T> shift_plus(const TriWindow<T>& m)
{
    if (m.size() < 2) {
        throw DimensionError("shift_plus needs a window of size at least 2");
    }
    TriWindow<T> r(m.size() - 1);
    for (int i = 0; i < r.size(); ++i) {
        for (int j = i; j < r.size(); ++j) {
            r.at(i, j) = m(i + 1, j + 1);
        }
    }
    return r;
}

// D M D^{-1} with D = diag(Omega): entry (i,j) scaled by Omega_i / Omega_j.
template <CoeffRing T>
TriWindow<T> diag_conjugate(const TriWindow<T>& m, const RefSeq& omega)
{
    TriWindow<T> r(m.size());
    for (int i = 0; i < m.size(); ++i) {
        const Rational oi = omega(i);
        for (int j = i; j < m.size(); ++j) {
            r.at(i, j) = RingTraits<T>::scale(m(i, j), oi / omega(j));
        }
    }
    return r;
}

// Conjugation by an arbitrary invertible diagonal D = diag(d): entry (i,j) * d_i / d_j.
template <CoeffRing T>
TriWindow<T> diag_conjugate(const TriWindow<T>& m, const std::vector<Rational>& d)
{
    if (static_cast<int>(d.size()) < m.size()) {
        throw DimensionError("diagonal too short for conjugation");
    }
    TriWindow<T> r(m.size());
    for (int i = 0; i < m.size(); ++i) {
        for (int j = i; j < m.size(); ++j) {
            if (sgn(d[static_cast<std::size_t>(j)]) == 0) {
                throw NotInvertibleError("zero diagonal entry in conjugation");
            }
            r.at(i, j) = RingTraits<T>::scale(m(i, j), d[static_cast<std::size_t>(i)] / d[static_cast<std::size_t>(j)]);
        }
    }
    return r;
}

// exp(t M) over T[t] for strictly triangular M: sum t^k M^k / k!.
template <CoeffRing T>
TriWindow<Poly<T>> exp_time(const TriWindow<T>& m)
{
    detail::require_strict(m, "exp_time");
    const int size = m.size();
    TriWindow<Poly<T>> out = TriWindow<Poly<T>>::identity(size);
    TriWindow<T> power = TriWindow<T>::identity(size);
    for (int k = 1; k <= size; ++k) {
        power = power * m;
        const Rational w(Integer(1), factorial(k));
        for (int i = 0; i < size; ++i) {
            for (int j = i; j < size; ++j) {
                out.at(i, j) = out.at(i, j) + Poly<T>::monomial(RingTraits<T>::scale(power.at(i, j), w), k);
            }
        }
    }
    return out;
}

// sum_k binom(t, k) (M - 1)^k over Q[t] for unipotent M; specialises to M^n at t = n.
inline TriWindow<UPoly> binomial_power(const TriWindow<Rational>& m)
{
    detail::require_unipotent(m, "binomial_power");
    const int size = m.size();
    const TriWindow<Rational> x = m - TriWindow<Rational>::identity(size);
    TriWindow<UPoly> out = TriWindow<UPoly>::identity(size);
    TriWindow<Rational> power = TriWindow<Rational>::identity(size);
    for (int k = 1; k <= size; ++k) {
        power = power * x;
        const UPoly b = binomial_poly(k);
        for (int i = 0; i < size; ++i) {
            for (int j = i; j < size; ++j) {
                if (sgn(power.at(i, j)) != 0) {
                    out.at(i, j) = out.at(i, j) + b.scaled(power.at(i, j));
                }
            }
        }
    }
    return out;
}

// Evaluate a window over Q[t] at t = a.
inline TriWindow<Rational> evaluate_at(const TriWindow<UPoly>& m, const Rational& a)
{
    return m.map([&a](const UPoly& p) { return p.eval(a); });
}

}  // namespace iterlog
