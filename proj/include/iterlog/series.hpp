#pragma once

// Truncated formal power series over a pluggable coefficient ring.
//
// A Series<T> of order N stores the coefficients of z^0 .. z^N and is exact
// up to and including z^N. Every binary operation truncates its result to
// the smaller of the operand orders. The constant term is zero unless the
// series was built with `with_constant`; composition f o g is defined only
// when g has zero constant term.

#include "iterlog/errors.hpp"
#include "iterlog/poly.hpp"
#include "iterlog/ring.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iterlog {

template <CoeffRing T>
class Series {
public:
    using coeff_type = T;
    using R = RingTraits<T>;

    // Zero series of the given order.
    explicit Series(int order = 1, bool allow_constant = false)
        : c_(checked_size(order), R::zero()), with_constant_(allow_constant)
    {
    }

    // From c_1..c_N; the constant term is zero.
    static Series from_coeffs(std::vector<T> c1_to_cn)
    {
        if (c1_to_cn.empty()) {
            throw OrderError("series needs at least one coefficient");
        }
        Series s(static_cast<int>(c1_to_cn.size()));
        std::move(c1_to_cn.begin(), c1_to_cn.end(), s.c_.begin() + 1);
        return s;
    }

    // From c_0..c_N, constant term allowed.
    static Series with_constant(std::vector<T> c0_to_cn)
    {
        if (c0_to_cn.size() < 1) {
            throw OrderError("series needs at least one coefficient");
        }
        Series s(std::max(0, static_cast<int>(c0_to_cn.size()) - 1), true);
        s.c_ = std::move(c0_to_cn);
        return s;
    }

    static Series identity(int order)
    {
        Series s(order);
        if (order >= 1) {
            s.c_[1] = R::one();
        }
        return s;
    }

    static Series monomial(T coeff, int degree, int order)
    {
        if (degree == 0) {
            Series s(order, true);
            s.c_[0] = std::move(coeff);
            return s;
        }
        Series s(order);
        if (degree <= order) {
            s.c_[static_cast<std::size_t>(degree)] = std::move(coeff);
        }
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool allows_constant() const { return with_constant_; }

    const T& coeff(int n) const
    {
        if (n < 0 || n > order()) {
            throw OrderError("coefficient z^" + std::to_string(n) + " requested from a series of order " +
                             std::to_string(order()));
        }
        return c_[static_cast<std::size_t>(n)];
    }
    const T& operator[](int n) const { return coeff(n); }

    void set_coeff(int n, T value)
    {
        if (n == 0 && !with_constant_ && !R::is_zero(value)) {
            throw DomainError("nonzero constant term on a series without the with_constant flag");
        }
        if (n < 0 || n > order()) {
            throw OrderError("coefficient index out of range");
        }
        c_[static_cast<std::size_t>(n)] = std::move(value);
    }

    // c_1..c_N.
    std::vector<T> coeffs() const { return std::vector<T>(c_.begin() + 1, c_.end()); }
    const std::vector<T>& all_coeffs() const { return c_; }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const T& x) { return R::is_zero(x); });
    }
    bool has_zero_constant() const { return R::is_zero(c_[0]); }
    bool is_unitary() const { return has_zero_constant() && order() >= 1 && c_[1] == R::one(); }

    Series truncated(int new_order) const
    {
        if (new_order > order()) {
            throw OrderError("cannot extend a series of order " + std::to_string(order()) + " to order " +
                             std::to_string(new_order));
        }
        Series s(new_order, with_constant_);
        std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
        return s;
    }

    // Coefficient-wise image under a ring map T -> U.
    template <class Fn>
    auto map(Fn&& fn) const -> Series<decltype(fn(std::declval<const T&>()))>
    {
        using U = decltype(fn(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& x : c_) {
            out.push_back(fn(x));
        }
        auto s = Series<U>::with_constant(std::move(out));
        if (!with_constant_ && s.has_zero_constant()) {
            s.drop_constant_flag();
        }
        return s;
    }

    void drop_constant_flag()
    {
        if (!has_zero_constant()) {
            throw DomainError("series has a nonzero constant term");
        }
        with_constant_ = false;
    }

    // Equal as truncated series: same order and same coefficients.
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    Series operator-() const
    {
        Series r = *this;
        for (auto& x : r.c_) {
            x = T(-x);
        }
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
    friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }

    friend Series operator*(const Series& a, const Series& b)
    {
        const int n = std::min(a.order(), b.order());
        Series r(n, a.with_constant_ || b.with_constant_);
        for (int i = 0; i <= n; ++i) {
            const T& ai = a.c_[static_cast<std::size_t>(i)];
            if (R::is_zero(ai)) {
                continue;
            }
            for (int j = 0; i + j <= n; ++j) {
                auto& dst = r.c_[static_cast<std::size_t>(i + j)];
                dst = T(dst + T(ai * b.c_[static_cast<std::size_t>(j)]));
            }
        }
        return r;
    }

    Series scaled(const T& x) const
        requires(!std::same_as<T, Rational>)
    {
        Series r = *this;
        for (auto& c : r.c_) {
            c = T(c * x);
        }
        return r;
    }
    Series scaled(const Rational& q) const
    {
        Series r = *this;
        for (auto& c : r.c_) {
            c = R::scale(c, q);
        }
        return r;
    }

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0) {
            throw OrderError("negative series order");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    static Series combine(const Series& a, const Series& b, bool subtract)
    {
        const int n = std::min(a.order(), b.order());
        Series r(n, a.with_constant_ || b.with_constant_);
        for (int i = 0; i <= n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            r.c_[k] = subtract ? T(a.c_[k] - b.c_[k]) : T(a.c_[k] + b.c_[k]);
        }
        return r;
    }

    std::vector<T> c_;
    bool with_constant_ = false;
};

template <CoeffRing T>
Series<T> series_mul(const Series<T>& f, const Series<T>& g)
{
    return f * g;
}

// f o g by Horner's scheme, valid to min(order f, order g).
template <CoeffRing T>
Series<T> series_compose(const Series<T>& f, const Series<T>& g)
{
    if (!g.has_zero_constant()) {
        throw CompositionDomainError("inner series of a composition must have zero constant term");
    }
    const int n = std::min(f.order(), g.order());
    const Series<T> inner = g.truncated(n);
    Series<T> acc = Series<T>::monomial(f.coeff(n), 0, n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * inner;
        Series<T> c = Series<T>::monomial(f.coeff(k), 0, n);
        acc = acc + c;
    }
    if (!f.allows_constant() && acc.has_zero_constant()) {
        acc.drop_constant_flag();
    }
    return acc;
}

// Compositional inverse by coefficient-wise back-substitution.
template <CoeffRing T>
Series<T> series_comp_inverse(const Series<T>& f)
{
    using R = RingTraits<T>;
    if (!f.has_zero_constant()) {
        throw CompositionDomainError("compositional inverse needs zero constant term");
    }
    const int n = f.order();
    if (!R::is_unit(f.coeff(1))) {
        throw NotInvertibleError("leading coefficient " + R::to_string(f.coeff(1)) + " is not a unit");
    }
    const T lead_inv = R::inverse(f.coeff(1));
    Series<T> g(n);
    g.set_coeff(1, lead_inv);
    for (int k = 2; k <= n; ++k) {
        // f(g + d z^k) = f(g) + f_1 d z^k + O(z^{k+1})
        const Series<T> fg = series_compose(f.truncated(k), g.truncated(k));
        const T excess = fg.coeff(k);
        g.set_coeff(k, T(g.coeff(k) - T(excess * lead_inv)));
    }
    return g;
}

// d/dz; the result has order N-1 and may carry a constant term.
template <CoeffRing T>
Series<T> series_derivative(const Series<T>& f)
{
    if (f.order() < 1) {
        throw OrderError("cannot differentiate a series of order 0");
    }
    const int n = f.order() - 1;
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c.push_back(RingTraits<T>::scale(f.coeff(k + 1), Rational(k + 1)));
    }
    return Series<T>::with_constant(std::move(c));
}

// 1/f for f with unit constant term.
template <CoeffRing T>
Series<T> series_reciprocal(const Series<T>& f)
{
    using R = RingTraits<T>;
    if (!R::is_unit(f.coeff(0))) {
        throw NotInvertibleError("series reciprocal needs a unit constant term");
    }
    const int n = f.order();
    const T c0_inv = R::inverse(f.coeff(0));
    std::vector<T> g(static_cast<std::size_t>(n) + 1, R::zero());
    g[0] = c0_inv;
    for (int k = 1; k <= n; ++k) {
        T acc = R::zero();
        for (int i = 1; i <= k; ++i) {
            acc = T(acc + T(f.coeff(i) * g[static_cast<std::size_t>(k - i)]));
        }
        g[static_cast<std::size_t>(k)] = T(-T(acc * c0_inv));
    }
    return Series<T>::with_constant(std::move(g));
}

template <CoeffRing T>
Series<T> series_pow(const Series<T>& f, int k)
{
    if (k < 0) {
        throw DomainError("negative series power");
    }
    Series<T> r = Series<T>::monomial(RingTraits<T>::one(), 0, f.order());
    for (int i = 0; i < k; ++i) {
        r = r * f;
    }
    return r;
}

// Iterative valuation of a unitary series: the n with f in z + z^{n+1}K[[z]]
// and nonzero z^{n+1} coefficient. std::nullopt means f = z to the known
// order, i.e. the valuation exceeds N-1 and cannot be determined.
template <CoeffRing T>
std::optional<int> itval(const Series<T>& f)
{
    if (!f.is_unitary()) {
        throw DomainError("iterative valuation needs a unitary series");
    }
    for (int k = 2; k <= f.order(); ++k) {
        if (!RingTraits<T>::is_zero(f.coeff(k))) {
            return k - 1;
        }
    }
    return std::nullopt;
}

namespace presets {

template <CoeffRing T = Rational>
Series<T> identity(int order)
{
    return Series<T>::identity(order);
}

// e^z - 1
template <CoeffRing T = Rational>
Series<T> exp_minus_one(int order)
{
    std::vector<T> c;
    for (int k = 1; k <= order; ++k) {
        c.push_back(RingTraits<T>::from_rational(Rational(1) / Rational(factorial(k))));
    }
    return Series<T>::from_coeffs(std::move(c));
}

// log(1 + z)
template <CoeffRing T = Rational>
Series<T> log_one_plus(int order)
{
    std::vector<T> c;
    for (int k = 1; k <= order; ++k) {
        c.push_back(RingTraits<T>::from_rational(make_rational(k % 2 == 1 ? 1 : -1, k)));
    }
    return Series<T>::from_coeffs(std::move(c));
}

// z / (1 - c z) = sum c^{n-1} z^n
template <CoeffRing T = Rational>
Series<T> geometric(const Rational& c, int order)
{
    std::vector<T> coeffs;
    Rational p(1);
    for (int k = 1; k <= order; ++k) {
        coeffs.push_back(RingTraits<T>::from_rational(p));
        p *= c;
    }
    return Series<T>::from_coeffs(std::move(coeffs));
}

}  // namespace presets

// "[c1, c2, ..., cN]" (or "[c0, c1, ...]" when a constant is allowed).
template <CoeffRing T>
std::string to_list_string(const Series<T>& f)
{
    std::string out = "[";
    const int start = f.allows_constant() ? 0 : 1;
    for (int k = start; k <= f.order(); ++k) {
        if (k > start) {
            out += ", ";
        }
        out += RingTraits<T>::to_string(f.coeff(k));
    }
    return out + "]";
}

// "z + 1/2*z^2 + ... + O(z^{N+1})"
template <CoeffRing T>
std::string to_poly_string(const Series<T>& f)
{
    using R = RingTraits<T>;
    std::string out;
    for (int k = 0; k <= f.order(); ++k) {
        const T& a = f.coeff(k);
        if (R::is_zero(a)) {
            continue;
        }
        std::string coeff = R::to_string(a);
        const bool atomic = R::is_atomic(a);
        const bool negative = atomic && coeff.front() == '-';
        if (negative) {
            coeff.erase(0, 1);
        }
        if (!out.empty()) {
            out += negative ? " - " : " + ";
        } else if (negative) {
            out += "-";
        }
        if (!atomic) {
            coeff = "(" + coeff + ")";
        }
        if (k == 0) {
            out += coeff;
            continue;
        }
        if (coeff != "1") {
            out += coeff + "*";
        }
        out += "z";
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(z^" + std::to_string(f.order() + 1) + ")";
}

}  // namespace iterlog
