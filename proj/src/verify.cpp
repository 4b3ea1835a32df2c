#include "iterlog/verify.hpp"

#include "iterlog/diffpoly.hpp"
#include "iterlog/errors.hpp"
#include "iterlog/itermat.hpp"
#include "iterlog/itlog.hpp"
#include "iterlog/random.hpp"
#include "iterlog/stirling.hpp"
#include "iterlog/sz_operators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace iterlog {

bool SuiteReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

// Empty when equal, else the first differing entry in row-major order.
template <CoeffRing T>
std::string window_diff(const TriWindow<T>& want, const TriWindow<T>& got)
{
    if (want.size() != got.size()) {
        return "window sizes differ: " + std::to_string(want.size()) + " vs " + std::to_string(got.size());
    }
    for (int i = 0; i < want.size(); ++i) {
        for (int j = i; j < want.size(); ++j) {
            if (!(want(i, j) == got(i, j))) {
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): expected " +
                       RingTraits<T>::to_string(want(i, j)) + ", got " + RingTraits<T>::to_string(got(i, j));
            }
        }
    }
    return {};
}

template <CoeffRing T>
std::string series_diff(const Series<T>& want, const Series<T>& got)
{
    const int n = std::min(want.order(), got.order());
    for (int k = 0; k <= n; ++k) {
        if (!(want.coeff(k) == got.coeff(k))) {
            return "z^" + std::to_string(k) + ": expected " + RingTraits<T>::to_string(want.coeff(k)) + ", got " +
                   RingTraits<T>::to_string(got.coeff(k));
        }
    }
    if (want.order() != got.order()) {
        return "orders differ: " + std::to_string(want.order()) + " vs " + std::to_string(got.order());
    }
    return {};
}

template <CoeffRing T>
std::string nonzero(const Series<T>& s)
{
    for (int k = 0; k <= s.order(); ++k) {
        if (!RingTraits<T>::is_zero(s.coeff(k))) {
            return "z^" + std::to_string(k) + " coefficient " + RingTraits<T>::to_string(s.coeff(k));
        }
    }
    return {};
}

// Runs cases 0..count-1; each returns an empty string on success.
Check tally(std::string name, std::string ref, int count, const std::function<std::string(int)>& one)
{
    for (int i = 0; i < count; ++i) {
        std::string bad = one(i);
        if (!bad.empty()) {
            return {std::move(name), std::move(ref), false, "case " + std::to_string(i) + ": " + bad};
        }
    }
    return {std::move(name), std::move(ref), true, std::to_string(count) + " cases"};
}

Check single(std::string name, std::string ref, const std::string& bad, std::string ok_detail = {})
{
    if (bad.empty()) {
        return {std::move(name), std::move(ref), true, std::move(ok_detail)};
    }
    return {std::move(name), std::move(ref), false, bad};
}

std::vector<RefSeq> refseqs()
{
    return {RefSeq::phi(), RefSeq::ones(), RefSeq::harmonic()};
}

using Q = Rational;
using QS = Series<Rational>;

SuiteReport suite_jabotinsky(const VerifyOptions& o)
{
    SuiteReport r{"jabotinsky", {}, {}, {}};
    const int n = o.n;
    Rng rng(o.seed);
    const auto phi = RefSeq::phi();
    r.checks.push_back(single("[e^z-1] = S", "Stirling numbers as an iteration matrix",
                              window_diff(stirling_window(n), iteration_matrix(presets::exp_minus_one(n), phi, n).window)));
    r.checks.push_back(single("[log(1+z)] = S^-1", "inverse Stirling matrix",
                              window_diff(stirling_inverse_window(n),
                                          iteration_matrix(presets::log_one_plus(n), phi, n).window)));
    {
        TriWindow<Q> lah(n + 1);
        lah.set(0, 0, Q(1));
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                lah.set(i, j, Q(binomial(j - 1, i - 1) * factorial(j) / factorial(i)));
            }
        }
        r.checks.push_back(single("[z/(1-z)] = Lah", "Lah numbers",
                                  window_diff(lah, iteration_matrix(presets::geometric(Q(1), n), phi, n).window)));
    }
    for (const auto& om : refseqs()) {
        r.checks.push_back(single("[z]^" + om.name() + " = 1", "identity iteration matrix",
                                  window_diff(TriWindow<Q>::identity(n + 1),
                                              iteration_matrix(presets::identity(n), om, n).window)));
        r.checks.push_back(tally("[f o g]^" + om.name() + " = [f][g]", "Jabotinsky homomorphism", 50, [&](int) {
            const QS f = random_unitary(rng, n);
            const QS g = random_unitary(rng, n);
            return window_diff(iteration_matrix(f, om, n).window * iteration_matrix(g, om, n).window,
                               iteration_matrix(series_compose(f, g), om, n).window);
        }));
        r.checks.push_back(tally("[f^-1]^" + om.name() + " = ([f]^" + om.name() + ")^-1", "group embedding", 10, [&](int) {
            const QS f = random_unitary(rng, n);
            return window_diff(mat_inverse(iteration_matrix(f, om, n).window),
                               iteration_matrix(series_comp_inverse(f), om, n).window);
        }));
    }
    return r;
}

SuiteReport suite_schippers(const VerifyOptions& o)
{
    SuiteReport r{"schippers", {}, {}, {}};
    const int n = o.n;
    Rng rng(o.seed + 1);
    r.checks.push_back(tally("log[f] = <itlog f> for every Omega", "iteration matrices and their logarithms", 50, [&](int) {
        const QS f = random_unitary(rng, n);
        std::optional<QS> first;
        for (const auto& om : refseqs()) {
            const auto dec = decompose_infinitesimal(mat_log(iteration_matrix(f, om, n).window), om);
            if (!dec.ok()) {
                const auto& v = *dec.violation;
                return "log[f]^" + om.name() + " is not infinitesimal at (" + std::to_string(v.row) + "," +
                       std::to_string(v.col) + ")";
            }
            if (!first) {
                first = *dec.series;
            } else if (!(*first == *dec.series)) {
                return "itlog depends on Omega: " + series_diff(*first, *dec.series);
            }
        }
        return std::string();
    }));
    r.checks.push_back(tally("exp<h> = [g] with itval(g) = v(h) - 1", "exponential of the Lie algebra filtration", 50, [&](int) {
        std::uniform_int_distribution<int> vd(2, n);
        const int v = vd(rng);
        const QS h = random_from_degree(rng, v, n);
        for (const auto& om : refseqs()) {
            const auto m = mat_exp(infinitesimal_matrix(h, om, n).window);
            const QS g = series_from_row(m, om);
            if (auto bad = window_diff(m, iteration_matrix(g, om, n).window); !bad.empty()) {
                return "exp<h>^" + om.name() + " is not an iteration matrix: " + bad;
            }
            const auto iv = itval(g);
            if (!iv || *iv != v - 1) {
                return "itval(g) = " + (iv ? std::to_string(*iv) : std::string("identity")) + ", expected " +
                       std::to_string(v - 1);
            }
            if (auto bad = series_diff(h, itlog_via_matrix(g, n, om)); !bad.empty()) {
                return "itlog(g) != h: " + bad;
            }
        }
        return std::string();
    }));
    r.checks.push_back(tally("[e_m, e_n] = (m-n) e_{m+n}", "bracket of the basis e_n", 1, [&](int) {
        for (const auto& om : refseqs()) {
            for (int a = 1; a < n; ++a) {
                for (int b = 1; a + b <= n; ++b) {
                    const auto lhs = commutator(e_basis(a, om, n).window, e_basis(b, om, n).window);
                    const auto rhs = e_basis(a + b, om, n).window.scaled(Q(a - b));
                    if (auto bad = window_diff(rhs, lhs); !bad.empty()) {
                        return "m=" + std::to_string(a) + " n=" + std::to_string(b) + " " + om.name() + ": " + bad;
                    }
                }
            }
        }
        return std::string();
    }));
    r.checks.push_back(tally("(exp<h>)_{1j} responds to h_j by 1/Omega_j", "structure of exp<h> row 1", 20, [&](int) {
        std::uniform_int_distribution<int> jd(2, n);
        const int j = jd(rng);
        const QS h = random_from_degree(rng, 2, n);
        QS h2 = h;
        const Q delta = random_nonzero_rational(rng);
        h2.set_coeff(j, h.coeff(j) + delta);
        for (const auto& om : refseqs()) {
            const auto a = mat_exp(infinitesimal_matrix(h, om, n).window);
            const auto b = mat_exp(infinitesimal_matrix(h2, om, n).window);
            for (int i = 1; i < j; ++i) {
                if (a(1, i) != b(1, i)) {
                    return "entry (1," + std::to_string(i) + ") moved when h_" + std::to_string(j) + " changed";
                }
            }
            if (b(1, j) - a(1, j) != delta / om(j)) {
                return "response at (1," + std::to_string(j) + ") is " + to_string(Q(b(1, j) - a(1, j)));
            }
        }
        return std::string();
    }));
    return r;
}

std::vector<std::pair<std::string, QS>> julia_family(Rng& rng, int n, int randoms)
{
    std::vector<std::pair<std::string, QS>> fs{{"e^z-1", presets::exp_minus_one(n)},
                                               {"z/(1-z)", presets::geometric(Q(1), n)}};
    for (int i = 0; i < randoms; ++i) {
        fs.emplace_back("random #" + std::to_string(i), random_unitary(rng, n));
    }
    return fs;
}

SuiteReport suite_julia(const VerifyOptions& o)
{
    SuiteReport r{"julia", {}, {}, {}};
    const int n = o.n;
    Rng rng(o.seed + 2);
    for (const auto& [name, f] : julia_family(rng, n, 10)) {
        r.checks.push_back(single("itlog(f) f' = itlog(f) o f, f = " + name, "Julia's equation", nonzero(julia_residual(f, n))));
        r.checks.push_back(single("itlog via matrix = via series, f = " + name, "alternating series for itlog",
                                  series_diff(itlog_via_matrix(f, n), itlog_via_series(f, n))));
    }
    for (int c : {1, 2}) {
        r.checks.push_back(single("itlog(z/(1-" + std::to_string(c) + "z)) = " + std::to_string(c) + "z^2",
                                  "itlog of a Moebius map",
                                  series_diff(QS::monomial(Q(c), 2, n), itlog_via_matrix(presets::geometric(Q(c), n), n))));
    }
    {
        const QS h = itlog_via_matrix(presets::exp_minus_one(n), n);
        const QS hp = series_derivative(h);
        r.checks.push_back(single("h' o (e^z-1) = h + h'", "functional equation for h'",
                                  series_diff(h + hp, series_compose(hp, presets::exp_minus_one(n)))));
    }
    return r;
}

SuiteReport suite_aczel(const VerifyOptions& o)
{
    SuiteReport r{"aczel", {}, {}, {}};
    const int n = std::min(o.n, 12);
    Rng rng(o.seed + 3);
    const auto fam = julia_family(rng, n, 3);
    for (const auto& [name, f] : fam) {
        const auto bin = fractional_iterate_binomial(f, n);
        const auto ex = fractional_iterate_exp(f, n);
        r.checks.push_back(single("binomial f^[t] = exponential f^[t], f = " + name, "two constructions of f^[t]",
                                  series_diff(bin.series, ex.series)));
        const auto aj = aczel_jabotinsky_residual(f, n);
        r.checks.push_back(single("d/dt f^[t] = f_* df^[t]/dz, f = " + name, "Aczel-Jabotinsky equation", nonzero(aj.loewner)));
        r.checks.push_back(single("d/dt f^[t] = f_* o f^[t], f = " + name, "Aczel-Jabotinsky equation", nonzero(aj.composition)));
        r.checks.push_back(single("d/dt f^[t] at t=0 = itlog f, f = " + name, "itlog as a derivative",
                                  series_diff(itlog_via_matrix(f, n), evaluate_t(d_dt(ex.series), Q(0)))));
        std::string bad;
        QS power = QS::identity(n);
        for (int k = 0; k <= 4 && bad.empty(); ++k) {
            if (auto d = series_diff(power, ex.at(Q(k))); !d.empty()) {
                bad = "t=" + std::to_string(k) + ": " + d;
            }
            power = series_compose(power, f);
        }
        if (bad.empty()) {
            if (auto d = series_diff(series_comp_inverse(f), ex.at(Q(-1))); !d.empty()) {
                bad = "t=-1: " + d;
            }
        }
        r.checks.push_back(single("f^[k] = k-fold composite, k = -1..4, f = " + name, "integer iterates", bad));
        const QS h = itlog_via_matrix(f, n);
        std::string sbad;
        for (const Q& a : {Q(2), Q(-1), make_rational(1, 2)}) {
            if (auto d = series_diff(h.scaled(a), itlog_via_matrix(ex.at(a), n)); !d.empty() && sbad.empty()) {
                sbad = "a=" + to_string(a) + ": " + d;
            }
        }
        r.checks.push_back(single("itlog(f^[a]) = a itlog(f), f = " + name, "itlog of fractional iterates", sbad));
    }
    {
        const QS f = presets::geometric(Q(1), n);
        std::vector<UPoly> c;
        for (int k = 1; k <= n; ++k) {
            c.push_back(UPoly::monomial(Q(1), k - 1));
        }
        r.checks.push_back(single("(z/(1-z))^[t] = z/(1-tz)", "iterates of a Moebius map",
                                  series_diff(Series<UPoly>::from_coeffs(c), fractional_iterate_exp(f, n).series)));
    }
    {
        const int m = std::min(n, 8);
        const QS f = presets::exp_minus_one(m);
        const auto ft = fractional_iterate_exp(f, m).series;
        const auto lhs = iteration_matrix(ft, RefSeq::phi(), m).window;
        const auto rhs = exp_time(infinitesimal_matrix(itlog_via_matrix(f, m), RefSeq::phi(), m).window);
        r.checks.push_back(single("[f^[t]] = exp(t <f_*>), f = e^z-1", "formal Loewner equation", window_diff(rhs, lhs)));
    }
    for (const auto& [name, f] : {fam[0], fam[2]}) {
        r.checks.push_back(single("f^[s+t] = f^[s] o f^[t], f = " + name, "translation law", nonzero(translation_residual(f, n))));
    }
    r.checks.push_back(tally("itval(f) = v implies itlog(f), f^[t] - z in z^{v+1}", "iterative valuation", 10, [&](int) {
        std::uniform_int_distribution<int> vd(1, n - 1);
        const int v = vd(rng);
        QS f = QS::identity(n) + random_from_degree(rng, v + 1, n);
        const QS h = itlog_via_matrix(f, n);
        const auto ft = fractional_iterate_exp(f, n).series;
        for (int k = 0; k <= v; ++k) {
            if (sgn(h.coeff(k)) != 0) {
                return "itlog has a z^" + std::to_string(k) + " term";
            }
            if (k >= 2 && !ft.coeff(k).is_zero()) {
                return "f^[t] has a z^" + std::to_string(k) + " term";
            }
        }
        return sgn(h.coeff(v + 1)) != 0 ? std::string() : std::string("itlog misses its z^{v+1} term");
    }));
    return r;
}

SuiteReport suite_conjecture(const VerifyOptions& o)
{
    SuiteReport r{"conjecture", {}, {"i", "j", "log(S)+", "c_{j-i+1} C(j+1,i)"}, {}};
    const int n = o.n;
    const auto a = alpha_window(n);
    const auto c = c_store().get(CRoute::logS, n + 1);
    std::string bad;
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Q closed = c[static_cast<std::size_t>(j - i)] * Q(binomial(j + 1, i));
            r.table.push_back({std::to_string(i), std::to_string(j), to_string(a(i, j)), to_string(closed)});
            if (a(i, j) != closed && bad.empty()) {
                bad = "(" + std::to_string(i) + "," + std::to_string(j) + "): matrix " + to_string(a(i, j)) +
                      ", closed form " + to_string(closed);
            }
        }
    }
    r.checks.push_back(single("alpha_{ij} = c_{j-i+1} binom(j+1, i), 0 <= i < j <= " + std::to_string(n),
                              "Shadrin-Zvonkine conjecture", bad, std::to_string(r.table.size()) + " entries"));
    std::string diag;
    for (int i = 0; i <= n; ++i) {
        if (sgn(a(i, i)) != 0) {
            diag = "alpha_{" + std::to_string(i) + std::to_string(i) + "} = " + to_string(a(i, i));
            break;
        }
    }
    r.checks.push_back(single("A = log(S)+ is strictly triangular", "matrix form of the add+k identity", diag));
    return r;
}

SuiteReport suite_convolution(const VerifyOptions& o)
{
    SuiteReport r{"convolution", {}, {}, {}};
    const int n = std::max(o.n, 2);
    auto& store = c_store();
    const auto p = store.get(CRoute::pathsum, n);
    const auto s = store.get(CRoute::shifted, n);
    std::string bad;
    for (int m = 2; m <= n && bad.empty(); ++m) {
        if (p[static_cast<std::size_t>(m - 1)] != s[static_cast<std::size_t>(m - 1)]) {
            bad = "n=" + std::to_string(m) + ": " + to_string(p[static_cast<std::size_t>(m - 1)]) + " vs " +
                  to_string(s[static_cast<std::size_t>(m - 1)]);
        }
    }
    r.checks.push_back(single("pathsum = shifted chain sum, n = 2.." + std::to_string(n), "Stirling convolution identity", bad));
    bad.clear();
    for (const auto& row : store.compare(n)) {
        if (!row.agree) {
            bad = "n=" + std::to_string(row.n) + " routes disagree";
            break;
        }
    }
    r.checks.push_back(single("logS = pathsum = firstkind = shifted, n <= " + std::to_string(n), "four formulas for c_n", bad));
    {
        const auto lam = lambda_stirling_window(n);
        const auto lg = log_stirling_window(n);
        bad.clear();
        for (int j = 1; j < n && bad.empty(); ++j) {
            if (lam(1, j) != lg(1, j + 1)) {
                bad = "j=" + std::to_string(j) + ": " + to_string(lam(1, j)) + " vs " + to_string(lg(1, j + 1));
            }
        }
        r.checks.push_back(single("Lambda(S)_{1j} = log(S)_{1,j+1}", "row shift of Lambda(S)", bad));
    }
    bad.clear();
    for (const auto& row : c_recurrence_check(n - 1)) {
        if (!row.ok()) {
            bad = "j=" + std::to_string(row.j) + ": " + to_string(row.lhs) + " vs " + to_string(row.rhs);
            break;
        }
    }
    r.checks.push_back(single("sum_k c_{k+1} {j+1 brace k} = c_{j+1}", "recurrence for c_n", bad));
    return r;
}

SuiteReport suite_sz(const VerifyOptions& o)
{
    const int v = std::min(o.n, 8);
    SuiteReport r{"sz", {}, {"monomial", "v", "L hash", "exp(l) hash", "match"}, {}};
    const auto rows = verify_sz(v, v);
    std::string bad;
    for (const auto& row : rows) {
        std::ostringstream hl;
        std::ostringstream he;
        hl << std::hex << row.hash_L;
        he << std::hex << row.hash_exp;
        r.table.push_back({row.monomial, std::to_string(row.valuation), hl.str(), he.str(), row.match ? "yes" : "NO"});
        if (!row.match && bad.empty()) {
            bad = "monomial " + row.monomial;
        }
    }
    r.checks.push_back(single("exp(l)(m) = L(m), ||m|| <= " + std::to_string(v) + ", z-degree <= " + std::to_string(v),
                              "L = exp(l)", bad, std::to_string(rows.size()) + " monomials"));
    {
        const int cap = 6;
        const SZContext ctx(2 * cap + 2, cap);
        bad.clear();
        for (int d = 0; d <= cap && bad.empty(); ++d) {
            const auto e = exp_l(ctx, MultiElem::t(d, ctx.vcap(), cap));
            for (int k = 1; k <= cap; ++k) {
                DiffPoly::Exponents ex(static_cast<std::size_t>(d + k) + 1, 0);
                ex.back() = 1;
                const Q coef = e.coeff(ex, k);
                const Q sum = add_k_sum(d, k);
                const Q brace(stirling2(d + k + 1, d + 1));
                if (coef != sum || sum != brace) {
                    bad = "d=" + std::to_string(d) + " k=" + std::to_string(k) + ": exp(l) " + to_string(coef) +
                          ", composition sum " + to_string(sum) + ", Stirling " + to_string(brace);
                    break;
                }
            }
        }
        r.checks.push_back(single("[z^k t_{d+k}] exp(l)(t_d) = add+k sum = {d+k+1 brace d+1}, d,k <= 6",
                                  "add+k identity", bad));
    }
    {
        const int cap = 8;
        const SZContext ctx(cap + 4, 4);
        Rng rng(o.seed + 4);
        const auto monos = monomials_up_to(4);
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        r.checks.push_back(tally("l(xy) = l(x) y + x l(y)", "l is a derivation", 20, [&](int) {
            const auto x = MultiElem::monomial(monos[pick(rng)], 0, random_nonzero_rational(rng), ctx.vcap(), 4);
            const auto y = MultiElem::monomial(monos[pick(rng)], 0, random_nonzero_rational(rng), ctx.vcap(), 4);
            const auto lhs = apply_l(ctx, x * y);
            const auto rhs = apply_l(ctx, x) * y + x * apply_l(ctx, y);
            return lhs == rhs ? std::string() : "x=" + x.to_string() + " y=" + y.to_string();
        }));
        r.checks.push_back(tally("v(L_k m) = v(m) + k", "valuation of L_k", static_cast<int>(monos.size()), [&](int i) {
            const auto m = MultiElem::monomial(monos[static_cast<std::size_t>(i)], 0, Q(1), ctx.vcap(), 4);
            for (int k = 1; k <= 4; ++k) {
                const auto y = apply_Lk(ctx, k, m);
                for (const auto& [key, c] : y.terms()) {
                    if (weight(key.e) != weight(monos[static_cast<std::size_t>(i)]) + k) {
                        return "k=" + std::to_string(k) + " term " + monomial_string(key.e);
                    }
                }
            }
            return std::string();
        }));
    }
    return r;
}

SuiteReport suite_diffpoly(const VerifyOptions& o)
{
    SuiteReport r{"diffpoly", {}, {}, {}};
    const int top = 8;
    Rng rng(o.seed + 5);
    std::string bad;
    for (int n = 1; n <= top && bad.empty(); ++n) {
        for (int m = 1; m <= n; ++m) {
            const auto g = gmn(m, n);
            // G_11 = 1 is a constant, so its order is 0 rather than 1.
            const int order = (m == 1 && n == 1) ? 0 : n - m + 1;
            if (g.order() != order || g.degree() != n - 1 || !g.is_homogeneous() || !g.is_isobaric() ||
                g.weight() != 2 * n - m - 1) {
                bad = "G_{" + std::to_string(m) + std::to_string(n) + "} = " + g.to_string();
                break;
            }
        }
    }
    r.checks.push_back(single("G_{mn}: order n-m+1 (0 for G_11), degree n-1, weight 2n-m-1", "structure of G", bad));
    bad.clear();
    for (int n = 1; n <= top && bad.empty(); ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto h = hkn(k, n);
            if (h.is_zero()) {
                continue;
            }
            if (h.order() > n - k + 1 || h.degree() != n || !h.is_homogeneous() || !h.is_isobaric() ||
                h.weight() != 2 * n - k) {
                bad = "H_{" + std::to_string(k) + std::to_string(n) + "} = " + h.to_string();
                break;
            }
        }
        const auto h0 = hkn(0, n);
        const auto lead = (DiffPoly::x(1) * gmn(n, n)) * DiffPoly::x(n + 1) * DiffPoly::inv_xprime();
        const auto rest = h0 - lead;
        if (bad.empty() && (h0.order() != n + 1 || rest.order() > n)) {
            bad = "H_{0" + std::to_string(n) + "} = " + h0.to_string();
        }
    }
    r.checks.push_back(single("H_{kn}: degree n, weight 2n-k, order(H_{0n}) = n+1", "structure of H", bad));
    r.checks.push_back(single("H = B G", "H as a matrix product", window_diff(h_triangle(top), mat_mul(b_triangle(top), g_triangle(top)))));
    r.checks.push_back(tally("eval(P', f) = eval(P, f)'", "symbolic derivative", 10, [&](int) {
        const QS f = random_unitary(rng, 12);
        std::uniform_int_distribution<int> pick(1, 5);
        const int n = pick(rng);
        const int m = std::uniform_int_distribution<int>(1, n)(rng);
        const auto p = gmn(m, n) + hkn(0, n);
        return series_diff(series_derivative(diffpoly_eval(p, f)), diffpoly_eval(p.derivative(), f));
    }));
    r.checks.push_back(tally("chain identity with G, n <= 6", "transformation formula", 12, [&](int i) {
        const int n = i % 6 + 1;
        const QS f = random_unitary(rng, 14);
        const QS h = random_from_degree(rng, 1, 14) + QS::monomial(random_rational(rng), 0, 14);
        return nonzero(chain_identity_residual(f, h, n));
    }));
    r.checks.push_back(tally("Julia transform with H, n <= 6", "transformation formula under Julia's equation", 12, [&](int i) {
        const int n = i % 6 + 1;
        const QS f = i < 6 ? presets::exp_minus_one(14) : random_unitary(rng, 14);
        return nonzero(julia_transform_residual(f, itlog_via_matrix(f, 14), n));
    }));
    return r;
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::map<std::string, SuiteFn, std::less<>>& suites()
{
    static const std::map<std::string, SuiteFn, std::less<>> m{
        {"jabotinsky", suite_jabotinsky}, {"schippers", suite_schippers}, {"julia", suite_julia},
        {"aczel", suite_aczel},           {"conjecture", suite_conjecture}, {"convolution", suite_convolution},
        {"sz", suite_sz},                 {"diffpoly", suite_diffpoly}};
    return m;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"jabotinsky", "schippers", "julia", "aczel",
                                                "conjecture", "convolution", "sz", "diffpoly"};
    return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opt)
{
    if (opt.n < 2) {
        throw DomainError("verify needs n >= 2");
    }
    if (name == "all") {
        const auto& names = suite_names();
        std::vector<SuiteReport> parts(names.size());
        const long count = static_cast<long>(names.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            parts[static_cast<std::size_t>(i)] = suites().at(names[static_cast<std::size_t>(i)])(opt);
        }
        SuiteReport all{"all", {}, {}, {}};
        for (auto& p : parts) {
            for (auto& c : p.checks) {
                c.name = p.suite + ": " + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    auto it = suites().find(name);
    if (it == suites().end()) {
        throw ParseError("unknown suite '" + std::string(name) + "'");
    }
    return it->second(opt);
}

nlohmann::json to_json(const SuiteReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back(
            {{"name", c.name}, {"paper_ref", c.paper_ref}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
    }
    return {{"suite", r.suite}, {"checks", checks}};
}

std::string to_text(const SuiteReport& r)
{
    std::ostringstream out;
    if (!r.table.empty()) {
        std::vector<std::size_t> w(r.table_header.size());
        for (std::size_t k = 0; k < w.size(); ++k) {
            w[k] = r.table_header[k].size();
            for (const auto& row : r.table) {
                w[k] = std::max(w[k], row[k].size());
            }
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t k = 0; k < cells.size(); ++k) {
                out << (k ? "  " : "") << std::string(w[k] - cells[k].size(), ' ') << cells[k];
            }
            out << '\n';
        };
        line(r.table_header);
        for (const auto& row : r.table) {
            line(row);
        }
        out << '\n';
    }
    for (const auto& c : r.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.paper_ref << "]";
        if (!c.detail.empty()) {
            out << "  " << c.detail;
        }
        out << '\n';
    }
    out << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace iterlog
