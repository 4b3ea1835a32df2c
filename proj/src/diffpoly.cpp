#include "iterlog/diffpoly.hpp"

#include "iterlog/errors.hpp"

#include <algorithm>
#include <mutex>

namespace iterlog {

namespace {

using Exps = DiffPoly::Exponents;

void trim(Exps& e)
{
    while (!e.empty() && e.back() == 0) {
        e.pop_back();
    }
}

int at(const Exps& e, std::size_t r)
{
    return r < e.size() ? e[r] : 0;
}

void bump(Exps& e, std::size_t r, int by)
{
    if (e.size() <= r) {
        e.resize(r + 1, 0);
    }
    e[r] += by;
    trim(e);
}

void add_term(DiffPoly::Terms& t, const Exps& e, const Rational& c)
{
    if (sgn(c) == 0) {
        return;
    }
    auto [it, fresh] = t.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) {
            t.erase(it);
        }
    }
}

// Numerator of p rewritten over (X')^den, den >= p.den().
DiffPoly::Terms lifted(const DiffPoly& p, int den)
{
    DiffPoly::Terms out;
    for (const auto& [e, c] : p.terms()) {
        Exps f = e;
        bump(f, 1, den - p.den());
        out.emplace(std::move(f), c);
    }
    return out;
}

}  // namespace

DiffPoly::DiffPoly(const Rational& c)
{
    add_term(terms_, {}, c);
}

DiffPoly::DiffPoly(Terms numerator, int den) : den_(den)
{
    if (den < 0) {
        throw DomainError("negative denominator power");
    }
    for (const auto& [e, c] : numerator) {
        Exps f = e;
        trim(f);
        add_term(terms_, f, c);
    }
    normalize();
}

DiffPoly DiffPoly::x(int r)
{
    if (r < 0) {
        throw DomainError("derivative order must be non-negative");
    }
    Exps e(static_cast<std::size_t>(r) + 1, 0);
    e.back() = 1;
    return DiffPoly(Terms{{e, Rational(1)}}, 0);
}

DiffPoly DiffPoly::inv_xprime()
{
    return DiffPoly(Terms{{{}, Rational(1)}}, 1);
}

void DiffPoly::normalize()
{
    if (terms_.empty()) {
        den_ = 0;
        return;
    }
    int common = den_;
    for (const auto& [e, c] : terms_) {
        common = std::min(common, at(e, 1));
    }
    if (common == 0) {
        return;
    }
    Terms t;
    for (const auto& [e, c] : terms_) {
        Exps f = e;
        bump(f, 1, -common);
        t.emplace(std::move(f), c);
    }
    terms_ = std::move(t);
    den_ -= common;
}

int DiffPoly::order() const
{
    int r = 0;
    for (const auto& [e, c] : terms_) {
        r = std::max(r, static_cast<int>(e.size()) - 1);
    }
    return r;
}

int DiffPoly::degree() const
{
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) {
            s += x;
        }
        d = std::max(d, s);
    }
    return d;
}

int DiffPoly::weight() const
{
    int w = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (std::size_t r = 0; r < e.size(); ++r) {
            s += static_cast<int>(r) * e[r];
        }
        w = std::max(w, s);
    }
    return w;
}

bool DiffPoly::is_homogeneous() const
{
    const int d = degree();
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) {
            s += x;
        }
        if (s != d) {
            return false;
        }
    }
    return true;
}

bool DiffPoly::is_isobaric() const
{
    const int w = weight();
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (std::size_t r = 0; r < e.size(); ++r) {
            s += static_cast<int>(r) * e[r];
        }
        if (s != w) {
            return false;
        }
    }
    return true;
}

DiffPoly DiffPoly::operator-() const
{
    return scaled(Rational(-1));
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b)
{
    const int den = std::max(a.den_, b.den_);
    DiffPoly::Terms t = lifted(a, den);
    for (const auto& [e, c] : lifted(b, den)) {
        add_term(t, e, c);
    }
    return DiffPoly(std::move(t), den);
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b)
{
    return a + (-b);
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b)
{
    DiffPoly::Terms t;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exps e = ea;
            for (std::size_t r = 0; r < eb.size(); ++r) {
                bump(e, r, eb[r]);
            }
            add_term(t, e, ca * cb);
        }
    }
    return DiffPoly(std::move(t), a.den_ + b.den_);
}

DiffPoly DiffPoly::scaled(const Rational& q) const
{
    Terms t;
    for (const auto& [e, c] : terms_) {
        add_term(t, e, c * q);
    }
    return DiffPoly(std::move(t), den_);
}

DiffPoly DiffPoly::derivative() const
{
    // Leibniz on each monomial of the numerator.
    Terms num;
    for (const auto& [e, c] : terms_) {
        for (std::size_t r = 0; r < e.size(); ++r) {
            if (e[r] == 0) {
                continue;
            }
            Exps f = e;
            bump(f, r, -1);
            bump(f, r + 1, 1);
            add_term(num, f, c * e[r]);
        }
    }
    if (den_ == 0) {
        return DiffPoly(std::move(num), 0);
    }
    // (N / X'^e)' = (N' X' - e N X'') / X'^{e+1}
    const DiffPoly n_prime(std::move(num), 0);
    const DiffPoly n(terms_, 0);
    const DiffPoly top = n_prime * x(1) - (n * x(2)).scaled(Rational(den_));
    return DiffPoly(top.terms_, den_ + 1 + top.den_);
}

namespace {

std::string factor_name(std::size_t r)
{
    switch (r) {
    case 0: return "X";
    case 1: return "X'";
    case 2: return "X''";
    default: return "X^(" + std::to_string(r) + ")";
    }
}

std::string monomial_name(const Exps& e)
{
    std::string s;
    for (std::size_t r = 0; r < e.size(); ++r) {
        if (e[r] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += e[r] == 1 ? factor_name(r) : "(" + factor_name(r) + ")^" + std::to_string(e[r]);
    }
    return s;
}

}  // namespace

std::string DiffPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    // Highest weight and degree first reads closest to the usual display.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coeff = iterlog::to_string(c);
        const bool neg = coeff.front() == '-';
        if (neg) {
            coeff.erase(0, 1);
        }
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const std::string mono = monomial_name(e);
        if (mono.empty()) {
            s += coeff;
        } else {
            s += (coeff == "1" ? "" : coeff + "*") + mono;
        }
    }
    if (den_ > 0) {
        const std::string d = den_ == 1 ? "X'" : "(X')^" + std::to_string(den_);
        s = (terms_.size() == 1 ? s : "(" + s + ")") + "/" + d;
    }
    return s;
}

bool RingTraits<DiffPoly>::is_unit(const DiffPoly& p)
{
    if (p.terms().size() != 1) {
        return false;
    }
    const auto& e = p.terms().begin()->first;
    return e.empty() || (e.size() == 2 && e[0] == 0);
}

DiffPoly RingTraits<DiffPoly>::inverse(const DiffPoly& p)
{
    if (!is_unit(p)) {
        throw NotInvertibleError("differential polynomial is not a unit: " + p.to_string());
    }
    const auto& [e, c] = *p.terms().begin();
    const int k = e.size() == 2 ? e[1] : 0;
    // c^{-1} X'^{den - k}
    DiffPoly::Exponents f;
    if (p.den() > k) {
        f = {0, p.den() - k};
    }
    return DiffPoly(DiffPoly::Terms{{f, Rational(1) / c}}, std::max(k - p.den(), 0));
}

namespace {

std::mutex g_mu;
std::vector<std::vector<DiffPoly>> g_rows;  // g_rows[n][m] = G_{mn}

void grow_g(int n)
{
    if (g_rows.empty()) {
        g_rows.push_back({DiffPoly::inv_xprime()});
    }
    const DiffPoly x1 = DiffPoly::x(1);
    const DiffPoly x2 = DiffPoly::x(2);
    while (static_cast<int>(g_rows.size()) <= n) {
        const int k = static_cast<int>(g_rows.size()) - 1;  // building column k + 1
        const auto& prev = g_rows.back();
        auto get = [&](int m) { return m <= k ? prev[static_cast<std::size_t>(m)] : DiffPoly(); };
        std::vector<DiffPoly> next(static_cast<std::size_t>(k) + 2);
        for (int m = 1; m <= k + 1; ++m) {
            const DiffPoly g = get(m);
            next[static_cast<std::size_t>(m)] =
                (g * x2).scaled(Rational(1 - 2 * k)) + (g.derivative() + get(m - 1)) * x1;
        }
        g_rows.push_back(std::move(next));
    }
}

}  // namespace

DiffPoly gmn(int m, int n)
{
    if (m < 0 || n < 0) {
        throw DomainError("gmn needs m, n >= 0");
    }
    if (m > n || (m == 0 && n > 0)) {
        return DiffPoly();
    }
    std::lock_guard lock(g_mu);
    grow_g(n);
    return g_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

DiffPoly hkn(int k, int n)
{
    if (k < 0 || n < 0) {
        throw DomainError("hkn needs k, n >= 0");
    }
    DiffPoly acc;
    for (int m = k; m <= n; ++m) {
        acc = acc + (DiffPoly::x(m - k + 1) * gmn(m, n)).scaled(Rational(binomial(m, k)));
    }
    return acc;
}

TriWindow<DiffPoly> g_triangle(int n)
{
    TriWindow<DiffPoly> w(n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            w.at(i, j) = gmn(i, j);
        }
    }
    return w;
}

TriWindow<DiffPoly> b_triangle(int n)
{
    TriWindow<DiffPoly> w(n + 1);
    for (int k = 0; k <= n; ++k) {
        for (int m = k; m <= n; ++m) {
            w.at(k, m) = DiffPoly::x(m - k + 1).scaled(Rational(binomial(m, k)));
        }
    }
    return w;
}

TriWindow<DiffPoly> h_triangle(int n)
{
    TriWindow<DiffPoly> w(n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            w.at(i, j) = hkn(i, j);
        }
    }
    return w;
}

Series<Rational> diffpoly_eval(const DiffPoly& p, const Series<Rational>& f)
{
    const int r = p.order();
    const int loss = std::max(r, p.den() > 0 ? 1 : 0);
    if (f.order() - loss < 0) {
        throw OrderError("series order too small to evaluate a differential polynomial of order " +
                         std::to_string(r));
    }
    const int out_order = f.order() - loss;
    std::vector<Series<Rational>> ders{f.truncated(out_order)};
    Series<Rational> d = f;
    for (int k = 1; k <= r; ++k) {
        d = series_derivative(d);
        ders.push_back(d.truncated(out_order));
    }
    Series<Rational> acc = Series<Rational>::monomial(Rational(0), 0, out_order);
    for (const auto& [e, c] : p.terms()) {
        Series<Rational> term = Series<Rational>::monomial(c, 0, out_order);
        for (std::size_t k = 0; k < e.size(); ++k) {
            for (int i = 0; i < e[k]; ++i) {
                term = term * ders[k];
            }
        }
        acc = acc + term;
    }
    if (p.den() > 0) {
        const Series<Rational> fp = series_derivative(f).truncated(out_order);
        if (sgn(fp.coeff(0)) == 0) {
            throw NotInvertibleError("X' evaluates to a non-invertible series");
        }
        acc = acc * series_pow(series_reciprocal(fp), p.den());
    }
    return acc;
}

namespace {

Series<Rational> nth_derivative(Series<Rational> s, int n)
{
    for (int i = 0; i < n; ++i) {
        s = series_derivative(s);
    }
    return s;
}

Series<Rational> lhs_term(const Series<Rational>& f, const Series<Rational>& h, int n)
{
    if (n < 1) {
        throw DomainError("the transformation identities need n >= 1");
    }
    if (std::min(f.order(), h.order()) <= n) {
        throw OrderError("series orders too small for derivative order " + std::to_string(n));
    }
    if (!f.is_unitary()) {
        throw DomainError("the transformation identities need a unitary f");
    }
    return series_compose(nth_derivative(h, n), f) * series_pow(series_derivative(f), 2 * n - 1);
}

}  // namespace

Series<Rational> chain_identity_residual(const Series<Rational>& f, const Series<Rational>& h, int n)
{
    Series<Rational> lhs = lhs_term(f, h, n);
    const Series<Rational> hf = series_compose(h, f);
    for (int m = 1; m <= n; ++m) {
        lhs = lhs - diffpoly_eval(gmn(m, n), f) * nth_derivative(hf, m);
    }
    return lhs;
}

Series<Rational> julia_transform_residual(const Series<Rational>& f, const Series<Rational>& h, int n)
{
    if (!f.is_unitary()) {
        throw DomainError("the transformation identities need a unitary f");
    }
    const Series<Rational> julia = h * series_derivative(f) - series_compose(h, f);
    for (int k = 0; k <= julia.order(); ++k) {
        if (sgn(julia.coeff(k)) != 0) {
            throw PreconditionFailure("Julia's equation h*f' = h o f fails at z^" + std::to_string(k) +
                                      ": coefficient " + to_string(julia.coeff(k)));
        }
    }
    Series<Rational> lhs = lhs_term(f, h, n);
    for (int k = 0; k <= n; ++k) {
        lhs = lhs - diffpoly_eval(hkn(k, n), f) * nth_derivative(h, k);
    }
    return lhs;
}

}  // namespace iterlog
