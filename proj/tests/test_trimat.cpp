#include "iterlog/errors.hpp"
#include "iterlog/itermat.hpp"
#include "iterlog/stirling.hpp"
#include "iterlog/trimat.hpp"
#include "printed.hpp"
#include "window_helpers.hpp"

#include <doctest.h>

using namespace iterlog;
using testing_helpers::random_window;
using W = TriWindow<Rational>;

namespace {

std::vector<Rational> ramp(int count, int from)
{
    std::vector<Rational> v;
    for (int i = 0; i < count; ++i) {
        v.push_back(i == 0 ? Rational(0) : Rational(from + i - 1));
    }
    return v;
}

W strict_part_of(const W& m) { return m - W::identity(m.size()); }

}  // namespace

TEST_CASE("triangular storage")
{
    W m(3);
    CHECK_THROWS_AS(m.set(2, 1, 1), DomainError);
    m.set(2, 1, 0);
    CHECK_THROWS_AS(m(3, 3), DimensionError);
    CHECK_THROWS_AS(W(-1), DimensionError);
    CHECK(m.is_zero());
    CHECK(m.strictness() == 3);
}

TEST_CASE("products")
{
    Rng rng(1);
    const W m = random_window(rng, 6, 0);
    CHECK(W::identity(6) * m == m);
    CHECK(m * W::identity(6) == m);

    const W s = printed::window(printed::stirling());
    const W si = printed::window(printed::stirling_inverse());
    CHECK(s * si == W::identity(6));
    CHECK(si * s == W::identity(6));

    std::vector<Rational> a, b;
    for (int i = 0; i < 6; ++i) {
        a.push_back(random_rational(rng));
        b.push_back(random_rational(rng));
    }
    std::vector<Rational> ab;
    for (int i = 0; i < 5; ++i) {
        ab.push_back(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i + 1)]);
    }
    CHECK(diag_n(1, a, 7) * diag_n(1, b, 7) == diag_n(2, ab, 7));

    CHECK_THROWS_AS(W(3) * W(4), DimensionError);
    CHECK_THROWS_AS(W(3) + W(4), DimensionError);
}

TEST_CASE("serial and parallel products agree")
{
    Rng rng(2);
    for (int size : {1, 5, 17, 33}) {
        const W a = random_window(rng, size, 0);
        const W b = random_window(rng, size, 0);
        CHECK(mat_mul(a, b, Exec::serial) == mat_mul(a, b, Exec::parallel));
    }
}

TEST_CASE("commutator")
{
    Rng rng(3);
    const W m = random_window(rng, 6, 1);
    CHECK(commutator(m, m).is_zero());

    for (const RefSeq& om : {RefSeq::phi(), RefSeq::ones(), RefSeq::harmonic()}) {
        const W e1 = e_basis(1, om, 8).window;
        const W e2 = e_basis(2, om, 8).window;
        const W e3 = e_basis(3, om, 8).window;
        CHECK(commutator(e1, e2) == -e3);
    }

    std::vector<Rational> a, b, c;
    for (int i = 0; i < 6; ++i) {
        a.push_back(random_rational(rng));
        b.push_back(random_rational(rng));
    }
    for (std::size_t i = 0; i < 5; ++i) {
        c.push_back(a[i] * b[i + 1] - b[i] * a[i + 1]);
    }
    CHECK(commutator(diag_n(1, a, 7), diag_n(1, b, 7)) == diag_n(2, c, 7));
}

TEST_CASE("diagonal constructors")
{
    CHECK(diag_n(0, std::vector<Rational>(5, Rational(1)), 5) == W::identity(5));
    // <z^2> with Omega_n = 1/n
    CHECK(diag_n(1, ramp(5, 2), 6) == infinitesimal_matrix(Series<Rational>::monomial(1, 2, 5), RefSeq::harmonic(), 5).window);

    Rng rng(4);
    std::vector<Rational> a;
    for (int i = 0; i < 8; ++i) {
        a.push_back(random_rational(rng));
    }
    const W d = diag_n(1, a, 9);
    for (int k = 1; k <= 4; ++k) {
        std::vector<Rational> prod;
        for (int i = 0; i + k < 9; ++i) {
            Rational p = 1;
            for (int r = 0; r < k; ++r) {
                p *= a[static_cast<std::size_t>(i + r)];
            }
            prod.push_back(p);
        }
        CHECK(mat_pow(d, k) == diag_n(k, prod, 9));
    }
    CHECK_THROWS_AS(diag_n(1, std::vector<Rational>(2), 6), DimensionError);
    CHECK_THROWS_AS(diag_n(7, a, 6), DimensionError);
}

TEST_CASE("exponential")
{
    CHECK(mat_exp(W(5)) == W::identity(5));
    CHECK(mat_exp(diag_n(1, ramp(5, 2), 6)) == printed::window(printed::pascal()));
    CHECK(mat_exp(diag_n(1, ramp(5, 2), 6))(1, 3) == 3);
    CHECK(mat_exp(alpha_window(7)) == shift_plus(stirling_window(8)));
    CHECK_THROWS_AS(mat_exp(W::identity(3)), DomainError);
}

TEST_CASE("logarithm")
{
    CHECK(mat_log(W::identity(5)).is_zero());
    const W l = mat_log(stirling_window(6));
    const std::vector<Rational> row1{0, 1, printed::q(-1, 2), printed::q(1, 2), printed::q(-2, 3), printed::q(11, 12)};
    for (int j = 1; j <= 6; ++j) {
        CHECK(l(1, j) == row1[static_cast<std::size_t>(j - 1)]);
    }
    CHECK(mat_log(printed::window(printed::pascal())) == diag_n(1, ramp(5, 2), 6));
    CHECK_THROWS_AS(mat_log(W(3)), DomainError);
    CHECK_THROWS_AS(mat_log(stirling_window(3).scaled(2)), DomainError);
}

TEST_CASE("Lambda")
{
    CHECK(lambda_op(W::identity(4)) == W::identity(4));
    const W lam = lambda_op(stirling_window(5));
    const auto want = printed::lambda_stirling();
    for (int i = 0; i < 6; ++i) {
        for (int j = i; j < 6; ++j) {
            CHECK(lam(i, j) == want[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    CHECK_THROWS_AS(lambda_op(W(3)), DomainError);
}

TEST_CASE("shift")
{
    CHECK(shift_plus(W::identity(5)) == W::identity(4));
    const W a = shift_plus(mat_log(stirling_window(6)));
    CHECK(a(0, 1) == 1);
    CHECK(a(0, 5) == printed::q(11, 12));
    CHECK(a(2, 4) == -5);
    CHECK_THROWS_AS(shift_plus(W(1)), DimensionError);

    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        const W m = random_window(rng, 8, 1);
        CHECK(mat_exp(shift_plus(m)) == shift_plus(mat_exp(m)));
    }
}

TEST_CASE("diagonal conjugation")
{
    Rng rng(6);
    const W m = random_window(rng, 6, 0);
    CHECK(diag_conjugate(m, RefSeq::ones()) == m);
    for (int i = 0; i < 10; ++i) {
        const Series<Rational> f = random_unitary(rng, 8);
        const W f1 = iteration_matrix(f, RefSeq::ones(), 8).window;
        const W fphi = iteration_matrix(f, RefSeq::phi(), 8).window;
        const W fh = iteration_matrix(f, RefSeq::harmonic(), 8).window;
        CHECK(diag_conjugate(f1, RefSeq::phi()) == fphi);
        // (Omega_j / Omega_i) [f]^Omega_ij is the same for every Omega
        for (int a = 0; a <= 8; ++a) {
            for (int b = a; b <= 8; ++b) {
                const Rational x = fphi(a, b) * RefSeq::phi()(b) / RefSeq::phi()(a);
                CHECK(x == fh(a, b) * RefSeq::harmonic()(b) / RefSeq::harmonic()(a));
                CHECK(x == f1(a, b));
            }
        }
    }
    CHECK_THROWS_AS(diag_conjugate(m, std::vector<Rational>{1, 0, 1, 1, 1, 1}), NotInvertibleError);
    CHECK_THROWS_AS(diag_conjugate(m, std::vector<Rational>{1, 1}), DimensionError);
}

TEST_CASE("exp and log are inverse")
{
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        const W u = random_window(rng, 9, 0, true);
        CHECK(mat_exp(mat_log(u)) == u);
        const W m = random_window(rng, 9, 1);
        CHECK(mat_log(mat_exp(m)) == m);
    }
}

TEST_CASE("exp of commuting sums")
{
    Rng rng(8);
    for (int i = 0; i < 10; ++i) {
        const W m = random_window(rng, 8, 1);
        const W n = m.scaled(random_rational(rng)) + (m * m).scaled(random_rational(rng));
        CHECK(mat_exp(m) * mat_exp(n) == mat_exp(m + n));
        for (int k = -3; k <= 3; ++k) {
            CHECK(mat_exp(m.scaled(k)) == mat_pow(mat_exp(m), k));
        }
    }
}

TEST_CASE("Lambda identities")
{
    Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        const W u = random_window(rng, 8, 0, true);
        const W lam = lambda_op(u);
        const W lg = mat_log(u);
        CHECK(lam * strict_part_of(u) == lg);
        for (int j = 1; j + 1 < 8; ++j) {
            Rational acc = 0;
            for (int k = 1; k <= j; ++k) {
                acc += lam(1, k) * u(k, j + 1);
            }
            CHECK(acc == lg(1, j + 1));
        }
    }
}

TEST_CASE("conjugating exp by a diagonal")
{
    Rng rng(10);
    for (int i = 0; i < 10; ++i) {
        const W m = random_window(rng, 7, 1);
        std::vector<Rational> d;
        for (int k = 0; k < 7; ++k) {
            d.push_back(random_nonzero_rational(rng));
        }
        CHECK(diag_conjugate(mat_exp(m), d) == mat_exp(diag_conjugate(m, d)));
        const W u = random_window(rng, 7, 0, true);
        CHECK(diag_conjugate(mat_log(u), d) == mat_log(diag_conjugate(u, d)));
    }
}

TEST_CASE("strictness filtration")
{
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const int a = 1 + i % 3;
        const int b = 1 + (i / 3) % 3;
        const W m = random_window(rng, 10, a);
        const W n = random_window(rng, 10, b);
        CHECK(m.in_tr(a));
        CHECK(m.in_tr(a - 1));
        CHECK(m.strictness() >= a);
        CHECK((m * n).in_tr(a + b));
        CHECK(commutator(m, n).in_tr(a + b));
        CHECK((m + n).in_tr(std::min(a, b)));
    }
    // exactly n-diagonal windows have strictness n
    CHECK(diag_n(2, std::vector<Rational>(4, Rational(1)), 6).strictness() == 2);
}

TEST_CASE("inverse and powers")
{
    Rng rng(12);
    const W u = random_window(rng, 7, 0, true);
    CHECK(mat_inverse(u) * u == W::identity(7));
    CHECK(mat_pow(u, -2) * mat_pow(u, 2) == W::identity(7));
    CHECK(mat_inverse(stirling_window(5)) == stirling_inverse_window(5));
    CHECK_THROWS_AS(mat_inverse(W(3)), NotInvertibleError);
}
