#pragma once

#include "iterlog/ring.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iterlog {

template <CoeffRing C>
class Poly;

namespace detail {

template <class C>
struct PolyDepth {
    static constexpr int value = 0;
};
template <class C>
struct PolyDepth<Poly<C>> {
    static constexpr int value = 1 + PolyDepth<C>::value;
};

// Q[t] prints in t; the outer variable of Q[t][s] prints as s.
inline std::string_view poly_var_name(int depth)
{
    return depth <= 1 ? "t" : "s";
}

}  // namespace detail

template <CoeffRing C>
struct RingTraits<Poly<C>> {
    using P = Poly<C>;
    static P zero() { return P(); }
    static P one() { return P(RingTraits<C>::one()); }
    static P from_rational(const Rational& q) { return P(RingTraits<C>::from_rational(q)); }
    static bool is_zero(const P& x) { return x.is_zero(); }
    static bool is_unit(const P& x) { return x.degree() == 0 && RingTraits<C>::is_unit(x.coeff(0)); }
    static P inverse(const P& x)
    {
        if (!is_unit(x)) {
            throw NotInvertibleError("polynomial is not a unit: " + to_string(x));
        }
        return P(RingTraits<C>::inverse(x.coeff(0)));
    }
    static P scale(const P& x, const Rational& q) { return x.scaled(q); }
    static std::string to_string(const P& x)
    {
        return x.to_string(detail::poly_var_name(detail::PolyDepth<P>::value));
    }
    static bool is_atomic(const P& x) { return x.degree() <= 0 || x.coeffs().size() == 1; }
};

// Dense univariate polynomial over a coefficient ring C.
//
// Poly<Rational> is Q[t]; Poly<Poly<Rational>> is Q[t][s] = Q[s,t], the
// outer variable being s. Coefficients are stored lowest degree first with no
// trailing zeros, so the zero polynomial has an empty coefficient vector.
template <CoeffRing C>
class Poly {
public:
    using coeff_type = C;
    using CR = RingTraits<C>;

    Poly() = default;
    Poly(C constant)  // NOLINT(google-explicit-constructor): constants embed as polynomials
    {
        if (!CR::is_zero(constant)) {
            c_.push_back(std::move(constant));
        }
    }
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(CR::one(), 1); }
    static Poly monomial(C coeff, int degree)
    {
        if (CR::is_zero(coeff)) {
            return Poly();
        }
        std::vector<C> c(static_cast<std::size_t>(degree) + 1, CR::zero());
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    C coeff(int k) const
    {
        if (k < 0 || k > degree()) {
            return CR::zero();
        }
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<C>& coeffs() const { return c_; }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& x : r.c_) {
            x = C(-x);
        }
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), CR::zero());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] = C(c_[k] + o.c_[k]);
        }
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), CR::zero());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] = C(c_[k] - o.c_[k]);
        }
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, CR::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (CR::is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] = C(r[i + j] + C(a.c_[i] * b.c_[j]));
            }
        }
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const Rational& q) const
    {
        Poly r = *this;
        for (auto& x : r.c_) {
            x = CR::scale(x, q);
        }
        r.trim();
        return r;
    }

    // Value at x in C.
    C eval(const C& x) const
    {
        C acc = CR::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = C(C(acc * x) + *it);
        }
        return acc;
    }

    // Substitute a value from a larger ring R; `lift` embeds C into R.
    template <class R, class Lift>
    R substitute(const R& x, Lift&& lift) const
    {
        R acc = RingTraits<R>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = R(R(acc * x) + lift(*it));
        }
        return acc;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) {
            return Poly();
        }
        std::vector<C> r(c_.size() - 1, CR::zero());
        for (std::size_t k = 1; k < c_.size(); ++k) {
            r[k - 1] = CR::scale(c_[k], Rational(static_cast<long>(k)));
        }
        return Poly(std::move(r));
    }

    // Human-readable form in the named variable, highest degree first.
    std::string to_string(std::string_view var) const;

private:
    void trim()
    {
        while (!c_.empty() && CR::is_zero(c_.back())) {
            c_.pop_back();
        }
    }

    std::vector<C> c_;
};

using UPoly = Poly<Rational>;
using BPoly = Poly<UPoly>;

template <CoeffRing C>
std::string Poly<C>::to_string(std::string_view var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const C& a = c_[static_cast<std::size_t>(k)];
        if (CR::is_zero(a)) {
            continue;
        }
        std::string coeff = CR::to_string(a);
        const bool atomic = CR::is_atomic(a);
        bool negative = atomic && !coeff.empty() && coeff.front() == '-';
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
        out += var;
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

// t(t-1)...(t-k+1)/k! in Q[t].
inline UPoly binomial_poly(int k)
{
    UPoly r(Rational(1));
    for (int i = 0; i < k; ++i) {
        r = r * UPoly(std::vector<Rational>{Rational(-i), Rational(1)});
    }
    return r.scaled(Rational(1) / Rational(factorial(k)));
}

}  // namespace iterlog
