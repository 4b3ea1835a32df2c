#pragma once

// Differential polynomials in one indeterminate X with rational coefficients,
// localised at X' only (numerator / (X')^e), and the G, B, H triangles.

#include "iterlog/ring.hpp"
#include "iterlog/series.hpp"
#include "iterlog/trimat.hpp"

#include <map>
#include <string>
#include <vector>

namespace iterlog {

class DiffPoly {
public:
    // (i_0, i_1, ..., i_r) for X^{i_0} (X')^{i_1} ... (X^{(r)})^{i_r}, no trailing zeros.
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rational>;

    DiffPoly() = default;
    DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    DiffPoly(Terms numerator, int den);

    // X^{(r)}
    static DiffPoly x(int r);
    // (X')^{-1}
    static DiffPoly inv_xprime();

    const Terms& terms() const { return terms_; }
    // Power of X' in the denominator.
    int den() const { return den_; }
    bool is_zero() const { return terms_.empty(); }

    // Of the numerator. order() is 0 for constants and for zero.
    int order() const;
    int degree() const;
    int weight() const;
    bool is_homogeneous() const;
    bool is_isobaric() const;

    DiffPoly operator-() const;
    friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend bool operator==(const DiffPoly& a, const DiffPoly& b) = default;
    DiffPoly scaled(const Rational& q) const;

    // d/dz with X^{(r)}' = X^{(r+1)}.
    DiffPoly derivative() const;

    std::string to_string() const;

private:
    void normalize();

    Terms terms_;
    int den_ = 0;
};

template <>
struct RingTraits<DiffPoly> {
    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly one() { return DiffPoly(Rational(1)); }
    static DiffPoly from_rational(const Rational& q) { return DiffPoly(q); }
    static bool is_zero(const DiffPoly& p) { return p.is_zero(); }
    // Only nonzero constants and powers of X' are units.
    static bool is_unit(const DiffPoly& p);
    static DiffPoly inverse(const DiffPoly& p);
    static DiffPoly scale(const DiffPoly& p, const Rational& q) { return p.scaled(q); }
    static std::string to_string(const DiffPoly& p) { return p.to_string(); }
    static bool is_atomic(const DiffPoly& p) { return p.terms().size() <= 1 && p.den() == 0; }
};

// G_{mn}; zero for m > n and for m = 0 < n, G_00 = (X')^{-1}.
DiffPoly gmn(int m, int n);
// H_{kn} = sum_{m=k}^{n} binom(m, k) X^{(m-k+1)} G_{mn}.
DiffPoly hkn(int k, int n);

// Rows and columns 0..n.
TriWindow<DiffPoly> g_triangle(int n);
TriWindow<DiffPoly> b_triangle(int n);
TriWindow<DiffPoly> h_triangle(int n);  // from hkn

// P(f, f', f'', ...); a denominator needs f_1 invertible. The result is valid
// to order N - max(order(P), 1 if P has a denominator).
Series<Rational> diffpoly_eval(const DiffPoly& p, const Series<Rational>& f);

// (h^{(n)} o f) (f')^{2n-1} - sum_m G_{mn}(f) (h o f)^{(m)}
Series<Rational> chain_identity_residual(const Series<Rational>& f, const Series<Rational>& h, int n);

// (h^{(n)} o f) (f')^{2n-1} - sum_k H_{kn}(f) h^{(k)}. Throws PreconditionFailure
// if h f' != h o f, naming the first offending coefficient.
Series<Rational> julia_transform_residual(const Series<Rational>& f, const Series<Rational>& h, int n);

}  // namespace iterlog
