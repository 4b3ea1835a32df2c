#pragma once

// Chain-sum kernel shared by the Stirling chain formulas.
//
// For a weight table w(a, b) (a < b) and start weights s(n1), computes
//   sums(m, k) = sum over chains 2 <= n1 < ... < nk = m of s(n1) * prod w(n_i, n_{i+1})
// for every end point 2 <= m <= top and length k. Chains are enumerated
// depth first; there are 2^(top-2) of them.

#include "iterlog/exec.hpp"
#include "iterlog/rational.hpp"

#include <vector>

namespace iterlog::kernels {

struct ChainInput {
    int top = 0;
    std::vector<Integer> start;   // indexed by n1, size top + 1
    std::vector<Integer> weight;  // weight[a * (top + 1) + b]
};

class ChainSums {
public:
    explicit ChainSums(int top) : top_(top), s_(static_cast<std::size_t>((top + 1) * (top + 1))) {}
    int top() const { return top_; }
    Integer& at(int m, int k) { return s_[static_cast<std::size_t>(m * (top_ + 1) + k)]; }
    const Integer& at(int m, int k) const { return s_[static_cast<std::size_t>(m * (top_ + 1) + k)]; }
    std::vector<Integer>& raw() { return s_; }
    friend bool operator==(const ChainSums&, const ChainSums&) = default;

private:
    int top_;
    std::vector<Integer> s_;
};

ChainSums chain_sums_serial(const ChainInput& in);
ChainSums chain_sums_parallel(const ChainInput& in);
ChainSums chain_sums(const ChainInput& in, Exec exec = Exec::parallel);

}  // namespace iterlog::kernels
