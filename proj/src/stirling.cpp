#include "iterlog/stirling.hpp"

#include "iterlog/errors.hpp"
#include "iterlog/kernels.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace iterlog {

StirlingTable::StirlingTable(int bound) : bound_(bound)
{
    if (bound < 0) {
        throw DimensionError("Stirling table bound must be non-negative");
    }
    const auto n = static_cast<std::size_t>(bound + 1);
    s2_.assign(n * n, Integer(0));
    s1_.assign(n * n, Integer(0));
    s2_[0] = 1;
    s1_[0] = 1;
    for (int j = 1; j <= bound; ++j) {
        for (int i = 1; i <= j; ++i) {
            s2_[idx(j, i)] = s2_[idx(j - 1, i - 1)] + i * s2_[idx(j - 1, i)];
            s1_[idx(j, i)] = s1_[idx(j - 1, i - 1)] + (j - 1) * s1_[idx(j - 1, i)];
        }
    }
}

std::size_t StirlingTable::idx(int j, int i) const
{
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(bound_ + 1) + static_cast<std::size_t>(i);
}

const Integer& StirlingTable::second(int j, int i) const
{
    if (j > bound_ || i > bound_) {
        throw DimensionError("Stirling index beyond table bound " + std::to_string(bound_));
    }
    if (i < 0 || j < 0 || i > j) {
        return zero_;
    }
    return s2_[idx(j, i)];
}

const Integer& StirlingTable::first(int j, int i) const
{
    if (j > bound_ || i > bound_) {
        throw DimensionError("Stirling index beyond table bound " + std::to_string(bound_));
    }
    if (i < 0 || j < 0 || i > j) {
        return zero_;
    }
    return s1_[idx(j, i)];
}

namespace {

std::mutex table_mu;

// Caller holds table_mu.
const StirlingTable& shared_table(int need)
{
    static std::unique_ptr<StirlingTable> table;
    if (!table || table->bound() < need) {
        table = std::make_unique<StirlingTable>(std::max(need, 2 * (table ? table->bound() : 32)));
    }
    return *table;
}

Integer lookup(int j, int i, bool second)
{
    if (i < 0 || j < 0 || i > j) {
        return 0;
    }
    std::lock_guard lock(table_mu);
    const StirlingTable& t = shared_table(j);
    return second ? t.second(j, i) : t.first(j, i);
}

}  // namespace

Integer stirling2(int j, int i)
{
    return lookup(j, i, true);
}

Integer stirling1(int j, int i)
{
    return lookup(j, i, false);
}

Rational psi_coeff(int d, int m)
{
    if (d < 0 || m < 0) {
        throw DomainError("psi_coeff needs d, m >= 0");
    }
    Integer acc = 0;
    for (int b = 1; b <= d + 1; ++b) {
        Integer term = binomial(d, b - 1);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(m));
        term *= power;
        if ((d - b + 1) % 2 != 0) {
            term = -term;
        }
        acc += term;
    }
    Rational r(acc, factorial(d));
    r.canonicalize();
    return r;
}

Rational a_coeff(int d, int k)
{
    if (k < 0) {
        throw DomainError("a_coeff needs k >= 0");
    }
    return psi_coeff(d, d + k);
}

TriWindow<Rational> stirling_window(int order)
{
    const StirlingTable t(order);
    TriWindow<Rational> w(order + 1);
    for (int i = 0; i <= order; ++i) {
        for (int j = i; j <= order; ++j) {
            w.at(i, j) = Rational(t.second(j, i));
        }
    }
    return w;
}

TriWindow<Rational> stirling_inverse_window(int order)
{
    const StirlingTable t(order);
    TriWindow<Rational> w(order + 1);
    for (int i = 0; i <= order; ++i) {
        for (int j = i; j <= order; ++j) {
            w.at(i, j) = Rational((j - i) % 2 == 0 ? t.first(j, i) : Integer(-t.first(j, i)));
        }
    }
    return w;
}

namespace {

TriWindow<Rational> leading(const TriWindow<Rational>& m, int size)
{
    TriWindow<Rational> r(size);
    for (int i = 0; i < size; ++i) {
        for (int j = i; j < size; ++j) {
            r.at(i, j) = m.at(i, j);
        }
    }
    return r;
}

// Leading blocks of log(S) and Lambda(S) are log and Lambda of the leading
// block of S, so only the largest window is kept.
struct WindowCache {
    std::mutex mu;
    TriWindow<Rational> window;
};

TriWindow<Rational> cached(WindowCache& cache, int order,
                           const std::function<TriWindow<Rational>(const TriWindow<Rational>&)>& op)
{
    if (order < 0) {
        throw DimensionError("window order must be non-negative");
    }
    {
        std::lock_guard lock(cache.mu);
        if (cache.window.size() > order) {
            return leading(cache.window, order + 1);
        }
    }
    TriWindow<Rational> w = op(stirling_window(order));
    std::lock_guard lock(cache.mu);
    if (cache.window.size() < w.size()) {
        cache.window = w;
    }
    return w;
}

}  // namespace

TriWindow<Rational> log_stirling_window(int order)
{
    static WindowCache cache;
    return cached(cache, order, [](const TriWindow<Rational>& s) { return mat_log(s); });
}

TriWindow<Rational> lambda_stirling_window(int order)
{
    static WindowCache cache;
    return cached(cache, order, [](const TriWindow<Rational>& s) { return lambda_op(s); });
}

TriWindow<Rational> alpha_window(int order)
{
    return shift_plus(log_stirling_window(order + 1));
}

std::string_view route_name(CRoute r)
{
    switch (r) {
    case CRoute::logS: return "logS";
    case CRoute::pathsum: return "pathsum";
    case CRoute::firstkind: return "firstkind";
    case CRoute::shifted: return "shifted";
    }
    return "?";
}

CRoute parse_route(std::string_view s)
{
    for (CRoute r : all_routes) {
        if (route_name(r) == s) {
            return r;
        }
    }
    throw ParseError("unknown route '" + std::string(s) + "' (expected logS, pathsum, firstkind or shifted)");
}

namespace {

kernels::ChainInput chain_input(int top, bool second_kind)
{
    const StirlingTable t(std::max(top, 0));
    kernels::ChainInput in;
    in.top = std::max(top, 0);
    const auto n = static_cast<std::size_t>(in.top + 1);
    in.start.assign(n, Integer(0));
    in.weight.assign(n * n, Integer(0));
    for (int a = 2; a <= in.top; ++a) {
        // The step out of 1 is {a brace 1} = 1 or [a brack 1] = (a-1)!.
        in.start[static_cast<std::size_t>(a)] = second_kind ? t.second(a, 1) : t.first(a, 1);
        for (int b = a + 1; b <= in.top; ++b) {
            in.weight[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] =
                second_kind ? t.second(b, a) : t.first(b, a);
        }
    }
    return in;
}

std::vector<Rational> seq_logS(int n)
{
    const auto w = log_stirling_window(n);
    std::vector<Rational> c;
    for (int m = 1; m <= n; ++m) {
        c.push_back(w(1, m));
    }
    return c;
}

std::vector<Rational> seq_pathsum(int n, Exec exec)
{
    const auto sums = kernels::chain_sums(chain_input(n, true), exec);
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    for (int m = 2; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k < m; ++k) {
            acc += Rational(k % 2 == 1 ? sums.at(m, k) : Integer(-sums.at(m, k)), k);
        }
        acc.canonicalize();
        c[static_cast<std::size_t>(m - 1)] = acc;
    }
    return c;
}

std::vector<Rational> seq_firstkind(int n, Exec exec)
{
    const auto sums = kernels::chain_sums(chain_input(n, false), exec);
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    for (int m = 2; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k < m; ++k) {
            const bool plus = (k + m + 1) % 2 == 0;
            acc += Rational(plus ? sums.at(m, k) : Integer(-sums.at(m, k)), k);
        }
        acc.canonicalize();
        c[static_cast<std::size_t>(m - 1)] = acc;
    }
    return c;
}

// c_1 is not reached by this route and is filled with its defining value 0.
std::vector<Rational> seq_shifted(int n, Exec exec)
{
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    if (n >= 2) {
        c[1] = 1;
    }
    const auto sums = kernels::chain_sums(chain_input(n - 1, true), exec);
    for (int m = 3; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k < m - 1; ++k) {
            acc += Rational(k % 2 == 0 ? sums.at(m - 1, k) : Integer(-sums.at(m - 1, k)), k + 1);
        }
        acc.canonicalize();
        c[static_cast<std::size_t>(m - 1)] = acc;
    }
    return c;
}

}  // namespace

std::vector<Rational> c_sequence(CRoute route, int n, Exec exec)
{
    if (n < 1) {
        throw DomainError("c_sequence needs n >= 1");
    }
    switch (route) {
    case CRoute::logS: return seq_logS(n);
    case CRoute::pathsum: return seq_pathsum(n, exec);
    case CRoute::firstkind: return seq_firstkind(n, exec);
    case CRoute::shifted: return seq_shifted(n, exec);
    }
    throw DomainError("unknown route");
}

namespace {

Rational single(CRoute route, int n)
{
    if (n < 1) {
        throw DomainError("c_n needs n >= 1");
    }
    return c_store().at(route, n);
}

}  // namespace

Rational c_via_logS(int n) { return single(CRoute::logS, n); }
Rational c_via_pathsum(int n) { return single(CRoute::pathsum, n); }
Rational c_via_firstkind(int n) { return single(CRoute::firstkind, n); }

Rational c_via_shifted(int n)
{
    if (n < 2) {
        throw DomainError("the shifted chain formula needs n >= 2");
    }
    return single(CRoute::shifted, n);
}

std::vector<Rational> CStore::get(CRoute route, int n, Exec exec)
{
    if (n < 1) {
        throw DomainError("c sequence length must be at least 1");
    }
    {
        std::lock_guard lock(mu_);
        auto it = seq_.find(route);
        if (it != seq_.end() && static_cast<int>(it->second.size()) >= n) {
            return {it->second.begin(), it->second.begin() + n};
        }
    }
    std::vector<Rational> c = c_sequence(route, n, exec);
    std::lock_guard lock(mu_);
    auto& slot = seq_[route];
    if (slot.size() < c.size()) {
        slot = c;
    }
    return c;
}

Rational CStore::at(CRoute route, int n)
{
    return get(route, n).back();
}

std::vector<CStore::Row> CStore::compare(int n)
{
    std::map<CRoute, std::vector<Rational>> all;
    for (CRoute r : all_routes) {
        all[r] = get(r, n);
    }
    std::vector<Row> rows;
    for (int m = 1; m <= n; ++m) {
        Row row;
        row.n = m;
        for (CRoute r : all_routes) {
            if (r == CRoute::shifted && m < 2) {
                continue;
            }
            row.values[r] = all[r][static_cast<std::size_t>(m - 1)];
        }
        const Rational& ref = row.values.begin()->second;
        for (const auto& [r, v] : row.values) {
            row.agree = row.agree && v == ref;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CStore& c_store()
{
    static CStore store;
    return store;
}

std::vector<RecurrenceRow> c_recurrence_check(int jmax)
{
    if (jmax < 1) {
        throw DomainError("c_recurrence_check needs jmax >= 1");
    }
    const auto c = c_store().get(CRoute::logS, jmax + 1);
    const StirlingTable t(jmax + 1);
    std::vector<RecurrenceRow> rows;
    for (int j = 1; j <= jmax; ++j) {
        RecurrenceRow row;
        row.j = j;
        for (int k = 1; k <= j; ++k) {
            row.lhs += c[static_cast<std::size_t>(k)] * Rational(t.second(j + 1, k));
        }
        row.rhs = c[static_cast<std::size_t>(j)];
        rows.push_back(std::move(row));
    }
    return rows;
}

AlphaValue alpha(int i, int j)
{
    if (i < 0 || j < 0) {
        throw DomainError("alpha needs i, j >= 0");
    }
    if (i > j) {
        return {Rational(0), Rational(0)};
    }
    AlphaValue v;
    v.closed_form = c_store().at(CRoute::logS, j - i + 1) * Rational(binomial(j + 1, i));
    v.matrix = alpha_window(j)(i, j);
    return v;
}

Rational add_k_sum(int d, int k, const TriWindow<Rational>& a)
{
    if (d < 0 || k < 1) {
        throw DomainError("add_k_sum needs d >= 0 and k >= 1");
    }
    if (a.size() <= d + k) {
        throw DimensionError("alpha window too small for add_k_sum");
    }
    Rational total = 0;
    // Walk every composition of k, tracking the product and the part count.
    std::function<void(int, int, const Rational&)> walk = [&](int pos, int parts, const Rational& prod) {
        if (pos == d + k) {
            total += prod / Rational(factorial(parts));
            return;
        }
        for (int next = pos + 1; next <= d + k; ++next) {
            walk(next, parts + 1, prod * a(pos, next));
        }
    };
    walk(d, 0, Rational(1));
    return total;
}

Rational add_k_sum(int d, int k)
{
    return add_k_sum(d, k, alpha_window(d + k));
}

}  // namespace iterlog
