#pragma once

#include "iterlog/errors.hpp"
#include "iterlog/rational.hpp"

#include <concepts>
#include <string>

namespace iterlog {

// Per-type description of a commutative coefficient ring containing Q.
// Specialised for Rational here and for Poly<C> in poly.hpp.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static bool is_unit(const Rational& x) { return sgn(x) != 0; }
    static Rational inverse(const Rational& x)
    {
        if (sgn(x) == 0) {
            throw NotInvertibleError("0 is not invertible in Q");
        }
        return Rational(1) / x;
    }
    static Rational scale(const Rational& x, const Rational& q) { return x * q; }
    static std::string to_string(const Rational& x) { return iterlog::to_string(x); }
    // Printed without surrounding parentheses when used as a coefficient.
    static bool is_atomic(const Rational&) { return true; }
};

template <class T>
concept CoeffRing = requires(const T& a, const T& b, const Rational& q) {
    { T(a + b) } -> std::same_as<T>;
    { T(a - b) } -> std::same_as<T>;
    { T(a * b) } -> std::same_as<T>;
    { T(-a) } -> std::same_as<T>;
    { a == b } -> std::convertible_to<bool>;
    { RingTraits<T>::zero() } -> std::same_as<T>;
    { RingTraits<T>::one() } -> std::same_as<T>;
    { RingTraits<T>::from_rational(q) } -> std::same_as<T>;
    { RingTraits<T>::is_zero(a) } -> std::same_as<bool>;
    { RingTraits<T>::is_unit(a) } -> std::same_as<bool>;
    { RingTraits<T>::inverse(a) } -> std::same_as<T>;
    { RingTraits<T>::scale(a, q) } -> std::same_as<T>;
    { RingTraits<T>::to_string(a) } -> std::same_as<std::string>;
};

}  // namespace iterlog
