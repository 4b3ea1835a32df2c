#pragma once

// Stirling numbers, the Shadrin-Zvonkine coefficients a_{d,d+k}, the
// sequence c_n by four independent routes, and the alpha matrix.

#include "iterlog/exec.hpp"
#include "iterlog/rational.hpp"
#include "iterlog/trimat.hpp"

#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace iterlog {

// Triangles {j brace i} and [j brack i] (unsigned) for 0 <= i, j <= bound.
class StirlingTable {
public:
    explicit StirlingTable(int bound);
    int bound() const { return bound_; }
    // Zero outside 0 <= i <= j; throws DimensionError beyond the bound.
    const Integer& second(int j, int i) const;
    const Integer& first(int j, int i) const;

private:
    std::size_t idx(int j, int i) const;
    int bound_;
    std::vector<Integer> s2_;
    std::vector<Integer> s1_;
    Integer zero_;
};

Integer stirling2(int j, int i);
Integer stirling1(int j, int i);

// Coefficient of psi^m in sum_b binom(d, b-1) (-1)^(d-b+1) / d! * 1/(1 - b psi).
Rational psi_coeff(int d, int m);
// a_{d,d+k} = psi_coeff(d, d+k).
Rational a_coeff(int d, int k);

// S = ({j brace i}) and S^{-1} = ((-1)^(j-i) [j brack i]), rows 0..order.
TriWindow<Rational> stirling_window(int order);
TriWindow<Rational> stirling_inverse_window(int order);
// log(S) and Lambda(S); cached, so repeated calls are cheap.
TriWindow<Rational> log_stirling_window(int order);
TriWindow<Rational> lambda_stirling_window(int order);
// A = log(S)+, rows 0..order.
TriWindow<Rational> alpha_window(int order);

enum class CRoute { logS, pathsum, firstkind, shifted };

std::string_view route_name(CRoute r);
CRoute parse_route(std::string_view s);  // throws ParseError
inline constexpr CRoute all_routes[] = {CRoute::logS, CRoute::pathsum, CRoute::firstkind, CRoute::shifted};

// c_1..c_n by one route; element k holds c_{k+1}.
std::vector<Rational> c_sequence(CRoute route, int n, Exec exec = Exec::parallel);

Rational c_via_logS(int n);
Rational c_via_pathsum(int n);
Rational c_via_firstkind(int n);
// Needs n >= 2; c_2 comes from the empty chain.
Rational c_via_shifted(int n);

// Memoised sequences keyed by route.
class CStore {
public:
    // c_1..c_n, extending the stored prefix if needed.
    std::vector<Rational> get(CRoute route, int n, Exec exec = Exec::parallel);
    Rational at(CRoute route, int n);

    struct Row {
        int n = 0;
        std::map<CRoute, Rational> values;
        bool agree = true;
    };
    // All routes side by side for 1..n (shifted starts at n = 2).
    std::vector<Row> compare(int n);

private:
    std::mutex mu_;
    std::map<CRoute, std::vector<Rational>> seq_;
};

CStore& c_store();

struct RecurrenceRow {
    int j = 0;
    Rational lhs;  // sum_{k=1}^{j} c_{k+1} {j+1 brace k}
    Rational rhs;  // c_{j+1}
    bool ok() const { return lhs == rhs; }
};
std::vector<RecurrenceRow> c_recurrence_check(int jmax);

struct AlphaValue {
    Rational closed_form;  // c_{j-i+1} binom(j+1, i)
    Rational matrix;       // log(S)+ (i, j)
};
AlphaValue alpha(int i, int j);

// Right side of the add+k identity:
// sum over compositions k_1 + ... + k_n = k of 1/n! alpha_{d,d+k_1} ... alpha_{..,d+k}.
Rational add_k_sum(int d, int k);
Rational add_k_sum(int d, int k, const TriWindow<Rational>& a);

}  // namespace iterlog
