#include "iterlog/sz_operators.hpp"

#include "iterlog/errors.hpp"
#include "iterlog/stirling.hpp"

#include <algorithm>
#include <functional>

namespace iterlog {

int weight(const Exponents& e)
{
    int w = 0;
    for (std::size_t n = 0; n < e.size(); ++n) {
        w += static_cast<int>(n + 1) * e[n];
    }
    return w;
}

bool MonoKeyLess::operator()(const MonoKey& a, const MonoKey& b) const
{
    const int wa = weight(a.e);
    const int wb = weight(b.e);
    if (wa != wb) {
        return wa < wb;
    }
    if (a.e != b.e) {
        return a.e < b.e;
    }
    return a.z < b.z;
}

bool operator==(const MonoKey& a, const MonoKey& b)
{
    return a.z == b.z && a.e == b.e;
}

namespace {

void trim(Exponents& e)
{
    while (!e.empty() && e.back() == 0) {
        e.pop_back();
    }
}

}  // namespace

MultiElem::MultiElem(int vcap, int zcap) : vcap_(vcap), zcap_(zcap)
{
    if (vcap < 0 || zcap < 0) {
        throw DomainError("MultiElem caps must be non-negative");
    }
}

MultiElem MultiElem::monomial(Exponents e, int z, const Rational& c, int vcap, int zcap)
{
    MultiElem m(vcap, zcap);
    for (int x : e) {
        if (x < 0) {
            throw DomainError("negative exponent in monomial");
        }
    }
    trim(e);
    m.add({std::move(e), z}, c);
    return m;
}

MultiElem MultiElem::t(int d, int vcap, int zcap)
{
    if (d < 0) {
        throw DomainError("t_d needs d >= 0");
    }
    Exponents e(static_cast<std::size_t>(d) + 1, 0);
    e.back() = 1;
    return monomial(std::move(e), 0, Rational(1), vcap, zcap);
}

MultiElem MultiElem::one(int vcap, int zcap)
{
    return monomial({}, 0, Rational(1), vcap, zcap);
}

int MultiElem::valuation() const
{
    // Terms are ordered by weight first.
    return terms_.empty() ? -1 : weight(terms_.begin()->first.e);
}

Rational MultiElem::coeff(const Exponents& e, int z) const
{
    Exponents k = e;
    trim(k);
    auto it = terms_.find({std::move(k), z});
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiElem::add(const MonoKey& key, const Rational& c)
{
    if (sgn(c) == 0 || key.z < 0 || key.z > zcap_ || weight(key.e) > vcap_) {
        return;
    }
    auto [it, fresh] = terms_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

MultiElem MultiElem::operator+(const MultiElem& o) const
{
    MultiElem r(std::min(vcap_, o.vcap_), std::min(zcap_, o.zcap_));
    for (const auto& [k, c] : terms_) {
        r.add(k, c);
    }
    for (const auto& [k, c] : o.terms_) {
        r.add(k, c);
    }
    return r;
}

MultiElem MultiElem::operator-(const MultiElem& o) const
{
    return *this + o.scaled(Rational(-1));
}

MultiElem MultiElem::operator*(const MultiElem& o) const
{
    MultiElem r(std::min(vcap_, o.vcap_), std::min(zcap_, o.zcap_));
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            MonoKey k{ka.e, ka.z + kb.z};
            if (k.e.size() < kb.e.size()) {
                k.e.resize(kb.e.size(), 0);
            }
            for (std::size_t n = 0; n < kb.e.size(); ++n) {
                k.e[n] += kb.e[n];
            }
            r.add(k, ca * cb);
        }
    }
    return r;
}

MultiElem MultiElem::scaled(const Rational& q) const
{
    MultiElem r(vcap_, zcap_);
    for (const auto& [k, c] : terms_) {
        r.add(k, c * q);
    }
    return r;
}

std::string monomial_string(const Exponents& e)
{
    std::string s;
    for (std::size_t n = 0; n < e.size(); ++n) {
        if (e[n] == 0) {
            continue;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += "t" + std::to_string(n);
        if (e[n] > 1) {
            s += "^" + std::to_string(e[n]);
        }
    }
    return s.empty() ? "1" : s;
}

std::string MultiElem::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto& [k, c] : terms_) {
        std::string coeff = iterlog::to_string(c);
        const bool neg = coeff.front() == '-';
        if (neg) {
            coeff.erase(0, 1);
        }
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        if (k.z > 0) {
            mono = k.z == 1 ? "z" : "z^" + std::to_string(k.z);
        }
        if (!k.e.empty()) {
            mono += (mono.empty() ? "" : "*") + monomial_string(k.e);
        }
        if (mono.empty()) {
            s += coeff;
        } else if (coeff == "1") {
            s += mono;
        } else {
            s += coeff + "*" + mono;
        }
    }
    return s;
}

std::uint64_t MultiElem::hash() const
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : to_string()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

SZContext::SZContext(int vcap, int zcap) : vcap_(vcap), zcap_(zcap)
{
    if (vcap < 1 || zcap < 0) {
        throw DomainError("SZContext needs vcap >= 1 and zcap >= 0");
    }
    // t_n with n <= vcap - 1 is the largest variable that fits under the cap.
    const int n = vcap;
    a_.resize(static_cast<std::size_t>(n * n));
    alpha_.resize(static_cast<std::size_t>(n * n));
    const auto A = alpha_window(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; i + k < n; ++k) {
            a_[static_cast<std::size_t>(i * n + k)] = a_coeff(i, k);
            alpha_[static_cast<std::size_t>(i * n + k)] = A(i, i + k);
        }
    }
}

const Rational& SZContext::a(int n, int k) const
{
    if (n < 0 || k < 0 || n + k >= vcap_) {
        throw DimensionError("a_{n,n+k} outside the context caps");
    }
    return a_[static_cast<std::size_t>(n * vcap_ + k)];
}

const Rational& SZContext::alpha(int n, int k) const
{
    if (n < 0 || k < 0 || n + k >= vcap_) {
        throw DimensionError("alpha_{n,n+k} outside the context caps");
    }
    return alpha_[static_cast<std::size_t>(n * vcap_ + k)];
}

namespace {

// Adds z^shift L_k(x) into out. The sum runs over r, ordered compositions
// (k_1..k_r) of k and ordered indices (n_1..n_r), divided by r!, exactly as
// the operator is written; no symmetrisation.
void add_Lk(const SZContext& ctx, int k, const MultiElem& x, int shift, MultiElem& out)
{
    for (const auto& [key, c] : x.terms()) {
        if (key.z + shift > out.zcap() || weight(key.e) + k > out.vcap()) {
            continue;
        }
        if (k == 0) {
            out.add({key.e, key.z + shift}, c);
            continue;
        }
        Exponents cur = key.e;
        std::vector<int> created;
        std::function<void(int, const Rational&)> rec = [&](int left, const Rational& coef) {
            if (left == 0) {
                Exponents e = cur;
                for (int m : created) {
                    if (static_cast<int>(e.size()) <= m) {
                        e.resize(static_cast<std::size_t>(m) + 1, 0);
                    }
                    ++e[static_cast<std::size_t>(m)];
                }
                trim(e);
                out.add({std::move(e), key.z + shift}, coef / Rational(factorial(static_cast<int>(created.size()))));
                return;
            }
            for (int ki = 1; ki <= left; ++ki) {
                for (std::size_t n = 0; n < cur.size(); ++n) {
                    if (cur[n] == 0) {
                        continue;
                    }
                    const Rational next = coef * cur[n] * ctx.a(static_cast<int>(n), ki);
                    --cur[n];
                    created.push_back(static_cast<int>(n) + ki);
                    rec(left - ki, next);
                    created.pop_back();
                    ++cur[n];
                }
            }
        };
        rec(k, c);
    }
}

void add_lk(const SZContext& ctx, int k, const MultiElem& x, int shift, MultiElem& out)
{
    for (const auto& [key, c] : x.terms()) {
        if (key.z + shift > out.zcap() || weight(key.e) + k > out.vcap()) {
            continue;
        }
        for (std::size_t n = 0; n < key.e.size(); ++n) {
            if (key.e[n] == 0) {
                continue;
            }
            Exponents e = key.e;
            --e[n];
            const std::size_t m = n + static_cast<std::size_t>(k);
            if (e.size() <= m) {
                e.resize(m + 1, 0);
            }
            ++e[m];
            trim(e);
            out.add({std::move(e), key.z + shift}, c * key.e[n] * ctx.alpha(static_cast<int>(n), k));
        }
    }
}

void require_fits(const SZContext& ctx, const MultiElem& x)
{
    if (x.vcap() > ctx.vcap()) {
        throw DimensionError("element valuation cap exceeds the operator context");
    }
}

}  // namespace

MultiElem apply_Lk(const SZContext& ctx, int k, const MultiElem& x)
{
    if (k < 0) {
        throw DomainError("L_k needs k >= 0");
    }
    require_fits(ctx, x);
    MultiElem out(x.vcap(), x.zcap());
    add_Lk(ctx, k, x, 0, out);
    return out;
}

MultiElem apply_L(const SZContext& ctx, const MultiElem& x)
{
    require_fits(ctx, x);
    MultiElem out(x.vcap(), x.zcap());
    for (int k = 0; k <= x.zcap(); ++k) {
        add_Lk(ctx, k, x, k, out);
    }
    return out;
}

MultiElem apply_lk(const SZContext& ctx, int k, const MultiElem& x)
{
    if (k < 1) {
        throw DomainError("l_k needs k >= 1");
    }
    require_fits(ctx, x);
    MultiElem out(x.vcap(), x.zcap());
    add_lk(ctx, k, x, 0, out);
    return out;
}

MultiElem apply_l(const SZContext& ctx, const MultiElem& x)
{
    require_fits(ctx, x);
    MultiElem out(x.vcap(), x.zcap());
    for (int k = 1; k <= x.zcap(); ++k) {
        add_lk(ctx, k, x, k, out);
    }
    return out;
}

MultiElem exp_l(const SZContext& ctx, const MultiElem& x)
{
    MultiElem acc = x;
    MultiElem term = x;
    // v(l^n x) >= v(x) + n, so the loop ends once the valuation cap is passed.
    for (int n = 1; !term.is_zero(); ++n) {
        term = apply_l(ctx, term).scaled(Rational(1, n));
        acc = acc + term;
    }
    return acc;
}

std::vector<Exponents> monomials_up_to(int vmax)
{
    std::vector<Exponents> out;
    Exponents cur;
    std::function<void(int, int)> rec = [&](int n, int left) {
        // Choose i_n for variables t_n, t_{n-1}, ..., t_0 in turn.
        if (n < 0) {
            Exponents e = cur;
            trim(e);
            out.push_back(std::move(e));
            return;
        }
        for (int i = 0; (n + 1) * i <= left; ++i) {
            cur[static_cast<std::size_t>(n)] = i;
            rec(n - 1, left - (n + 1) * i);
        }
        cur[static_cast<std::size_t>(n)] = 0;
    };
    if (vmax >= 1) {
        cur.assign(static_cast<std::size_t>(vmax), 0);
        rec(vmax - 1, vmax);
    } else {
        out.push_back({});
    }
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        return MonoKeyLess{}({a, 0}, {b, 0});
    });
    return out;
}

std::vector<SZRow> verify_sz(int vmax, int zcap, Exec exec)
{
    if (vmax < 0 || zcap < 0) {
        throw DomainError("verify_sz needs non-negative caps");
    }
    const int vcap = vmax + zcap;
    const SZContext ctx(std::max(vcap, 1), zcap);
    const auto monos = monomials_up_to(vmax);
    std::vector<SZRow> rows(monos.size());
    const auto count = static_cast<long>(monos.size());
    auto job = [&](long i) {
        const auto& e = monos[static_cast<std::size_t>(i)];
        const MultiElem m = MultiElem::monomial(e, 0, Rational(1), ctx.vcap(), zcap);
        const MultiElem lhs = apply_L(ctx, m);
        const MultiElem rhs = exp_l(ctx, m);
        rows[static_cast<std::size_t>(i)] = {monomial_string(e), weight(e), lhs.hash(), rhs.hash(), lhs == rhs};
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            job(i);
        }
    } else {
        for (long i = 0; i < count; ++i) {
            job(i);
        }
    }
    return rows;
}

}  // namespace iterlog
