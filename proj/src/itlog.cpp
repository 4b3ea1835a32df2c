#include "iterlog/itlog.hpp"

#include <stdexcept>

namespace iterlog {

namespace {

void require_unitary(const QSeries& f, const char* what)
{
    if (!f.is_unitary()) {
        throw DomainError(std::string(what) + " needs a unitary series (f_0 = 0, f_1 = 1)");
    }
}

}  // namespace

QSeries itlog_via_matrix(const QSeries& f, int order, const RefSeq& omega)
{
    require_unitary(f, "itlog_via_matrix");
    const auto m = iteration_matrix(f, omega, order);
    const auto log_m = mat_log(m.window);
    auto dec = decompose_infinitesimal(log_m, omega);
    if (!dec.ok()) {
        const auto& v = *dec.violation;
        throw std::logic_error("log [f] is not an infinitesimal iteration matrix at (" + std::to_string(v.row) +
                               "," + std::to_string(v.col) + ")");
    }
    return *dec.series;
}

QSeries itlog_via_matrix(const QSeries& f, int order)
{
    QSeries h = itlog_via_matrix(f, order, RefSeq::phi());
    if (!(itlog_via_matrix(f, order, RefSeq::ones()) == h)) {
        throw std::logic_error("iterative logarithm depends on the reference sequence");
    }
    return h;
}

QSeries itlog_via_series(const QSeries& f, int order)
{
    require_unitary(f, "itlog_via_series");
    const QSeries g = f.truncated(order);
    QSeries h = QSeries::identity(order);
    QSeries acc(order);
    // h[n] lies in z^{n+1} Q[[z]], so terms with n >= order vanish.
    for (int n = 1; n <= order; ++n) {
        h = series_compose(h, g) - h;
        acc = acc + h.scaled(make_rational(n % 2 == 1 ? 1 : -1, n));
    }
    return acc;
}

QSeries FractionalIterate::at(const Rational& a) const
{
    return evaluate_t(series, a);
}

namespace {

FractionalIterate iterate_from_row(const TriWindow<UPoly>& m, const QSeries& f)
{
    // Phi-normalised row: coefficient of z^j is M(1,j) / j!.
    return {series_from_row(m, RefSeq::phi()), f};
}

}  // namespace

FractionalIterate fractional_iterate_binomial(const QSeries& f, int order)
{
    require_unitary(f, "fractional_iterate_binomial");
    const auto m = iteration_matrix(f, RefSeq::phi(), order);
    return iterate_from_row(binomial_power(m.window), m.source);
}

FractionalIterate fractional_iterate_exp(const QSeries& f, int order)
{
    require_unitary(f, "fractional_iterate_exp");
    const QSeries h = itlog_via_matrix(f, order);
    const auto gen = infinitesimal_matrix(h, RefSeq::phi(), order);
    return iterate_from_row(exp_time(gen.window), f.truncated(order));
}

QSeries julia_residual(const QSeries& f, int order)
{
    require_unitary(f, "julia_residual");
    const QSeries g = f.truncated(order);
    const QSeries h = itlog_via_matrix(g, order);
    return h * series_derivative(g) - series_compose(h, g);
}

AczelJabotinskyResidual aczel_jabotinsky_residual(const QSeries& f, int order)
{
    require_unitary(f, "aczel_jabotinsky_residual");
    const QSeries h = itlog_via_matrix(f, order);
    const TSeries ft = fractional_iterate_exp(f, order).series;
    const TSeries hs = lift_to_t(h);
    const TSeries dt = d_dt(ft);
    return {dt - hs * series_derivative(ft), dt - series_compose(hs, ft)};
}

STSeries translation_residual(const QSeries& f, int order)
{
    require_unitary(f, "translation_residual");
    const TSeries ft = fractional_iterate_exp(f, order).series;
    const STSeries lhs = substitute_s_plus_t(ft);
    const STSeries rhs = series_compose(lift_t_as_s(ft), lift_t_to_st(ft));
    return lhs - rhs;
}

TSeries lift_to_t(const QSeries& f)
{
    return f.map([](const Rational& q) { return UPoly(q); });
}

STSeries lift_t_to_st(const TSeries& f)
{
    return f.map([](const UPoly& p) { return BPoly(p); });
}

STSeries lift_t_as_s(const TSeries& f)
{
    return f.map([](const UPoly& p) {
        std::vector<UPoly> c;
        for (const auto& q : p.coeffs()) {
            c.emplace_back(q);
        }
        return BPoly(std::move(c));
    });
}

STSeries substitute_s_plus_t(const TSeries& f)
{
    // s + t as an element of Q[t][s]: outer coefficients (t, 1).
    const BPoly s_plus_t(std::vector<UPoly>{UPoly::variable(), UPoly(Rational(1))});
    return f.map([&s_plus_t](const UPoly& p) {
        return p.substitute(s_plus_t, [](const Rational& q) { return BPoly(UPoly(q)); });
    });
}

TSeries d_dt(const TSeries& f)
{
    return f.map([](const UPoly& p) { return p.derivative(); });
}

QSeries evaluate_t(const TSeries& f, const Rational& a)
{
    return f.map([&a](const UPoly& p) { return p.eval(a); });
}

}  // namespace iterlog
