#include "iterlog/errors.hpp"
#include "iterlog/itlog.hpp"
#include "iterlog/random.hpp"
#include "iterlog/series.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace iterlog;
using QS = Series<Rational>;

namespace {

QS from(std::initializer_list<Rational> c) { return QS::from_coeffs(std::vector<Rational>(c)); }

}  // namespace

TEST_CASE("rational formatting and parsing")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(binomial(6, 3) == 20);
    CHECK(factorial(5) == 120);
}

TEST_CASE("products")
{
    const int n = 8;
    CHECK(QS::identity(n) * QS::identity(n) == QS::monomial(1, 2, n));

    const QS e = presets::exp_minus_one(n);
    CHECK((e * e).coeff(3) == 1);

    const QS g = presets::geometric(1, n);
    const QS g2 = g * g;
    for (int k = 0; k <= n; ++k) {
        // z^2 / (1-z)^2
        CHECK(g2.coeff(k) == (k >= 2 ? oracle::inv_power_coeff(1, 2, k - 2) : Rational(0)));
    }
}

TEST_CASE("truncation takes the minimum order")
{
    const QS a = presets::exp_minus_one(5);
    const QS b = presets::geometric(1, 9);
    CHECK((a * b).order() == 5);
    CHECK((a + b).order() == 5);
    CHECK(series_compose(b, a).order() == 5);
    CHECK_THROWS_AS(a.coeff(6), OrderError);
    CHECK_THROWS_AS(a.truncated(7), OrderError);
}

TEST_CASE("constant terms need the flag")
{
    QS f(4);
    CHECK_THROWS_AS(f.set_coeff(0, 1), DomainError);
    QS g(4, true);
    g.set_coeff(0, 1);
    CHECK(g.coeff(0) == 1);
}

TEST_CASE("composition")
{
    const int n = 10;
    Rng rng(3);
    const QS f = random_from_degree(rng, 1, n);
    CHECK(series_compose(f, QS::identity(n)) == f);
    CHECK(series_compose(presets::log_one_plus(n), presets::exp_minus_one(n)) == QS::identity(n));

    const QS g = presets::geometric(1, n);
    CHECK(series_compose(g, g) == oracle::moebius(2, n));

    QS c(n, true);
    c.set_coeff(0, 1);
    c.set_coeff(1, 1);
    CHECK_THROWS_AS(series_compose(f, c), CompositionDomainError);
}

TEST_CASE("compositional inverse")
{
    const int n = 10;
    CHECK(series_comp_inverse(QS::identity(n)) == QS::identity(n));
    CHECK(series_comp_inverse(presets::exp_minus_one(n)) == presets::log_one_plus(n));
    const QS g = presets::geometric(1, n);
    const QS gi = series_comp_inverse(g);
    CHECK(gi == oracle::moebius(-1, n));
    CHECK(series_compose(g, gi) == QS::identity(n));
    CHECK(series_compose(gi, g) == QS::identity(n));

    QS z2(n);
    z2.set_coeff(2, 1);
    CHECK_THROWS_AS(series_comp_inverse(z2), NotInvertibleError);

    // over Q[t] the leading coefficient t is not a unit
    TSeries tz = TSeries::monomial(UPoly::variable(), 1, 4);
    CHECK_THROWS_AS(series_comp_inverse(tz), NotInvertibleError);
    TSeries two = TSeries::monomial(UPoly(Rational(2)), 1, 4);
    CHECK(series_comp_inverse(two).coeff(1) == UPoly(make_rational(1, 2)));
}

TEST_CASE("derivative")
{
    const QS d = series_derivative(QS::identity(5));
    CHECK(d.allows_constant());
    CHECK(d.coeff(0) == 1);
    CHECK(d.order() == 4);

    const QS e = series_derivative(presets::exp_minus_one(6));
    for (int k = 0; k <= 5; ++k) {
        CHECK(e.coeff(k) == Rational(1) / Rational(factorial(k)));
    }

    const QS p = series_derivative(from({0, make_rational(1, 2), make_rational(-1, 12)}));
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(2) == make_rational(-1, 4));
}

TEST_CASE("iterative valuation")
{
    CHECK(itval(presets::exp_minus_one(6)) == 1);
    CHECK(itval(from({1, 0, 1, 0})) == 2);
    CHECK_FALSE(itval(QS::identity(6)).has_value());
    CHECK_THROWS_AS(itval(from({2, 1})), DomainError);
    CHECK_THROWS_AS(itval(QS::monomial(1, 2, 4)), DomainError);
}

TEST_CASE("printing")
{
    const QS f = from({1, make_rational(-1, 2), make_rational(1, 3)});
    CHECK(to_list_string(f) == "[1, -1/2, 1/3]");
    CHECK(to_poly_string(f) == "z - 1/2*z^2 + 1/3*z^3 + O(z^4)");
    CHECK(to_poly_string(QS(2)) == "0 + O(z^3)");
}

TEST_CASE("polynomial coefficients")
{
    const UPoly t = UPoly::variable();
    const UPoly p = t * t - UPoly(Rational(1));
    CHECK(p.degree() == 2);
    CHECK(p.eval(3) == 8);
    CHECK(p.derivative() == t.scaled(2));
    // evaluation is a ring morphism
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        const UPoly a({random_rational(rng), random_rational(rng), random_rational(rng)});
        const UPoly b({random_rational(rng), random_rational(rng)});
        const Rational x = random_rational(rng);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
    CHECK(binomial_poly(3).eval(5) == 10);
    CHECK(binomial_poly(2).eval(-1) == 1);
}

TEST_CASE("composition is associative")
{
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const QS f = random_from_degree(rng, 1, 9);
        const QS g = random_from_degree(rng, 1, 9);
        const QS h = random_from_degree(rng, 1 + i % 2, 9);
        CHECK(series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h)));
    }
}

TEST_CASE("group laws for unitary series")
{
    Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        const QS f = random_unitary(rng, 10);
        const QS g = random_unitary(rng, 10);
        const QS fi = series_comp_inverse(f);
        CHECK(series_compose(f, fi) == QS::identity(10));
        CHECK(series_compose(fi, f) == QS::identity(10));
        CHECK(fi.is_unitary());
        CHECK(series_compose(f, g).is_unitary());
    }
}

TEST_CASE("chain rule")
{
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        const QS f = random_from_degree(rng, 1, 9);
        const QS g = random_from_degree(rng, 1, 9);
        const QS lhs = series_derivative(series_compose(f, g));
        const QS rhs = series_compose(series_derivative(f), g) * series_derivative(g);
        CHECK(lhs == rhs);
    }
}
