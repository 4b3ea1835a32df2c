#include "cli.hpp"

#include "iterlog/bfile.hpp"
#include "iterlog/diffpoly.hpp"
#include "iterlog/errors.hpp"
#include "iterlog/format.hpp"
#include "iterlog/itlog.hpp"
#include "iterlog/stirling.hpp"
#include "iterlog/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace iterlog {

namespace {

struct Config {
    int n = 16;
    std::string route = "logS";
    std::string format = "plain";
    std::string part;
    std::string suite;
    std::uint64_t seed = 1;
    std::string numerators;
    std::string denominators;
    int offset = 0;
    std::string matrix;
    std::string series = "exp";
    std::string method = "exp";
    std::string itlog_method = "matrix";
};

// exp, log, moebius, or a comma-separated coefficient list c1,c2,...
Series<Rational> parse_series(const std::string& spec, int n)
{
    if (spec == "exp") {
        return presets::exp_minus_one(n);
    }
    if (spec == "log") {
        return presets::log_one_plus(n);
    }
    if (spec == "moebius") {
        return presets::geometric(Rational(1), n);
    }
    std::vector<Rational> c;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        c.push_back(parse_rational(item));
    }
    if (c.empty()) {
        throw ParseError("empty coefficient list");
    }
    c.resize(static_cast<std::size_t>(std::max(n, static_cast<int>(c.size()))), Rational(0));
    return Series<Rational>::from_coeffs(std::move(c)).truncated(n);
}

int cmd_seq(const Config& c, std::ostream& out)
{
    const CRoute route = parse_route(c.route);
    const auto seq = c_store().get(route, c.n);
    std::string part = c.part;
    if (c.format == "bfile" && part.empty()) {
        part = "numerator";
    }
    auto value = [&](const Rational& q) {
        if (part == "numerator") {
            return q.get_num().get_str();
        }
        if (part == "denominator") {
            return q.get_den().get_str();
        }
        return to_string(q);
    };
    if (c.format == "json") {
        nlohmann::json terms = nlohmann::json::array();
        for (std::size_t k = 0; k < seq.size(); ++k) {
            terms.push_back({{"n", k + 1}, {"value", value(seq[k])}});
        }
        out << nlohmann::json{{"route", c.route}, {"terms", terms}}.dump(2) << '\n';
        return 0;
    }
    if (c.format == "csv") {
        out << "n,numerator,denominator\n";
        for (std::size_t k = 0; k < seq.size(); ++k) {
            out << k + 1 << ',' << seq[k].get_num().get_str() << ',' << seq[k].get_den().get_str() << '\n';
        }
        return 0;
    }
    for (std::size_t k = 0; k < seq.size(); ++k) {
        out << k + 1 << ' ' << value(seq[k]) << '\n';
    }
    return 0;
}

int cmd_verify(const Config& c, std::ostream& out)
{
    const SuiteReport r = run_suite(c.suite, {c.n, c.seed});
    if (c.format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        out << to_text(r);
    }
    return r.ok() ? 0 : 1;
}

int cmd_oeis(const Config& c, std::ostream& out)
{
    if (c.numerators.empty() && c.denominators.empty()) {
        throw CLI::ValidationError("oeis-check", "needs --numerators and/or --denominators");
    }
    struct Job {
        std::string label;
        BFile file;
        bool numerator;
    };
    std::vector<Job> jobs;
    if (!c.numerators.empty()) {
        jobs.push_back({"numerators", read_bfile(c.numerators), true});
    }
    if (!c.denominators.empty()) {
        jobs.push_back({"denominators", read_bfile(c.denominators), false});
    }
    long top = 1;
    for (const auto& j : jobs) {
        for (const auto& e : j.file.entries) {
            top = std::max(top, e.index + 1 + std::abs(c.offset));
        }
    }
    const auto seq = c_store().get(CRoute::logS, static_cast<int>(top));
    std::vector<Integer> num;
    std::vector<Integer> den;
    for (const auto& q : seq) {
        num.push_back(q.get_num());
        den.push_back(q.get_den());
    }
    bool ok = true;
    for (const auto& j : jobs) {
        const auto cmp = compare_bfile(j.numerator ? num : den, j.file, c.offset);
        for (const auto& m : cmp.mismatches) {
            out << j.label << ": index " << m.index << ": computed " << m.computed.get_str() << ", file "
                << m.file.get_str() << '\n';
        }
        out << j.label << ": " << (cmp.compared - static_cast<long>(cmp.mismatches.size())) << '/' << cmp.compared
            << " terms agree";
        if (c.offset != 0) {
            out << " (offset " << c.offset << ")";
        }
        out << '\n';
        for (int o : cmp.agreeing_offsets) {
            if (o != c.offset) {
                out << j.label << ": note: all terms agree at offset " << (o > 0 ? "+" : "") << o
                    << " (not applied; pass --offset to use it)\n";
            }
        }
        ok = ok && cmp.ok();
    }
    return ok ? 0 : 1;
}

int cmd_matrix(const Config& c, std::ostream& out)
{
    const bool json = c.format == "json";
    if (c.matrix == "gh") {
        const auto g = g_triangle(c.n);
        const auto h = h_triangle(c.n);
        if (json) {
            out << nlohmann::json{{"G", window_to_json(g)}, {"H", window_to_json(h)}}.dump(2) << '\n';
        } else {
            out << "G\n" << window_to_text(g) << "\nH\n" << window_to_text(h);
        }
        return 0;
    }
    TriWindow<Rational> w;
    if (c.matrix == "stirling") {
        w = stirling_window(c.n);
    } else if (c.matrix == "stirling-inverse") {
        w = stirling_inverse_window(c.n);
    } else if (c.matrix == "logS") {
        w = log_stirling_window(c.n);
    } else if (c.matrix == "lambda") {
        w = lambda_stirling_window(c.n);
    } else if (c.matrix == "alpha") {
        w = alpha_window(c.n);
    } else {
        throw CLI::ValidationError("matrix", "unknown matrix '" + c.matrix + "'");
    }
    if (json) {
        auto j = window_to_json(w);
        j["provenance"] = {{"kind", c.matrix}};
        out << j.dump(2) << '\n';
    } else {
        out << window_to_text(w);
    }
    return 0;
}

int cmd_itlog(const Config& c, std::ostream& out)
{
    const auto f = parse_series(c.series, c.n);
    const auto h = c.itlog_method == "series" ? itlog_via_series(f, c.n) : itlog_via_matrix(f, c.n);
    for (int k = 1; k <= c.n; ++k) {
        out << k << ' ' << to_string(h.coeff(k)) << '\n';
    }
    return 0;
}

int cmd_iterate(const Config& c, std::ostream& out)
{
    const auto f = parse_series(c.series, c.n);
    const auto it = c.method == "binomial" ? fractional_iterate_binomial(f, c.n) : fractional_iterate_exp(f, c.n);
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 1; k <= c.n; ++k) {
        arr.push_back(RingTraits<UPoly>::to_string(it.series.coeff(k)));
    }
    out << arr.dump() << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Iteration matrices, iterative logarithms and the sequence c_n", "iterlog"};
    app.require_subcommand(1);

    auto add_n = [&c](CLI::App* sub) {
        sub->add_option("--n", c.n, "truncation order (at least 2)")->check(CLI::Range(2, 1000));
    };
    auto add_format = [&c](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(std::move(allowed)));
    };

    auto* seq = app.add_subcommand("seq", "print c_1..c_n");
    add_n(seq);
    seq->add_option("--route", c.route, "logS, pathsum, firstkind or shifted")
        ->check(CLI::IsMember({"logS", "pathsum", "firstkind", "shifted"}));
    add_format(seq, {"plain", "json", "csv", "bfile"});
    seq->add_option("--part", c.part, "numerator or denominator")->check(CLI::IsMember({"numerator", "denominator"}));

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", c.suite, "suite name")->required()->check(CLI::IsMember(suites));
    add_n(verify);
    verify->add_option("--seed", c.seed, "seed for random inputs");
    add_format(verify, {"plain", "json"});

    auto* oeis = app.add_subcommand("oeis-check", "compare against local OEIS b-files");
    oeis->add_option("--numerators", c.numerators, "b-file of numerators");
    oeis->add_option("--denominators", c.denominators, "b-file of denominators");
    oeis->add_option("--offset", c.offset, "compare file term n with computed term n + offset")
        ->check(CLI::Range(-1, 1));

    auto* matrix = app.add_subcommand("matrix", "print a triangular window");
    matrix->add_option("name", c.matrix, "gh, stirling, stirling-inverse, logS, lambda or alpha")
        ->required()
        ->check(CLI::IsMember({"gh", "stirling", "stirling-inverse", "logS", "lambda", "alpha"}));
    add_n(matrix);
    add_format(matrix, {"plain", "json"});

    auto* itlog = app.add_subcommand("itlog", "iterative logarithm coefficients");
    add_n(itlog);
    itlog->add_option("--f", c.series, "exp, log, moebius, or coefficients c1,c2,...");
    itlog->add_option("--method", c.itlog_method, "matrix or series")->check(CLI::IsMember({"matrix", "series"}));

    auto* iterate = app.add_subcommand("iterate", "fractional iterate f^[t] as t-polynomials");
    add_n(iterate);
    iterate->add_option("--f", c.series, "exp, log, moebius, or coefficients c1,c2,...");
    iterate->add_option("--method", c.method, "exp or binomial")->check(CLI::IsMember({"exp", "binomial"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (seq->parsed()) {
            return cmd_seq(c, out);
        }
        if (verify->parsed()) {
            return cmd_verify(c, out);
        }
        if (oeis->parsed()) {
            return cmd_oeis(c, out);
        }
        if (matrix->parsed()) {
            return cmd_matrix(c, out);
        }
        if (itlog->parsed()) {
            return cmd_itlog(c, out);
        }
        return cmd_iterate(c, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace iterlog
