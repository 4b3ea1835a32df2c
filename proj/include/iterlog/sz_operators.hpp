#pragma once

// Truncated elements of Q[z][[t_0, t_1, ...]] and the Shadrin-Zvonkine
// operators L_k, L = sum z^k L_k, l = sum z^k l_k and exp(l).

#include "iterlog/exec.hpp"
#include "iterlog/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace iterlog {

// Exponent vector (i_0, i_1, ...) without trailing zeros.
using Exponents = std::vector<int>;

// ||i|| = sum (n+1) i_n
int weight(const Exponents& e);

struct MonoKey {
    Exponents e;
    int z = 0;
};

// Graded by valuation, then lexicographic in the exponents, then by z-degree.
struct MonoKeyLess {
    bool operator()(const MonoKey& a, const MonoKey& b) const;
};

class MultiElem {
public:
    using Terms = std::map<MonoKey, Rational, MonoKeyLess>;

    MultiElem(int vcap, int zcap);

    static MultiElem monomial(Exponents e, int z, const Rational& c, int vcap, int zcap);
    static MultiElem t(int d, int vcap, int zcap);
    static MultiElem one(int vcap, int zcap);

    int vcap() const { return vcap_; }
    int zcap() const { return zcap_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Smallest ||i|| among the terms; -1 for zero.
    int valuation() const;
    Rational coeff(const Exponents& e, int z) const;

    // Terms beyond either cap are dropped.
    void add(const MonoKey& key, const Rational& c);

    MultiElem operator+(const MultiElem& o) const;
    MultiElem operator-(const MultiElem& o) const;
    MultiElem operator*(const MultiElem& o) const;
    MultiElem scaled(const Rational& q) const;
    friend bool operator==(const MultiElem& a, const MultiElem& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;
    // FNV-1a over to_string().
    std::uint64_t hash() const;

private:
    int vcap_;
    int zcap_;
    Terms terms_;
};

bool operator==(const MonoKey& a, const MonoKey& b);

std::string monomial_string(const Exponents& e);

// a_{n,n+k} from the psi expansion and alpha_{n,n+k} from log(S)+, for all
// indices the caps can reach.
class SZContext {
public:
    SZContext(int vcap, int zcap);
    int vcap() const { return vcap_; }
    int zcap() const { return zcap_; }
    const Rational& a(int n, int k) const;
    const Rational& alpha(int n, int k) const;

private:
    int vcap_;
    int zcap_;
    std::vector<Rational> a_;
    std::vector<Rational> alpha_;
};

MultiElem apply_Lk(const SZContext& ctx, int k, const MultiElem& x);
MultiElem apply_L(const SZContext& ctx, const MultiElem& x);
MultiElem apply_lk(const SZContext& ctx, int k, const MultiElem& x);
MultiElem apply_l(const SZContext& ctx, const MultiElem& x);
MultiElem exp_l(const SZContext& ctx, const MultiElem& x);

// All exponent vectors with weight <= vmax, in MonoKeyLess order.
std::vector<Exponents> monomials_up_to(int vmax);

struct SZRow {
    std::string monomial;
    int valuation = 0;
    std::uint64_t hash_L = 0;
    std::uint64_t hash_exp = 0;
    bool match = false;
};

// exp(l)(m) == L(m) for every monomial of weight <= vmax with z-degree cap
// zcap. The valuation cap is vmax + zcap, so only the z cap truncates.
std::vector<SZRow> verify_sz(int vmax, int zcap, Exec exec = Exec::parallel);

}  // namespace iterlog
