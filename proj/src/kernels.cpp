#include "iterlog/kernels.hpp"

#include "iterlog/errors.hpp"

#include <omp.h>

#include <utility>

namespace iterlog::kernels {

namespace {

void check(const ChainInput& in)
{
    const auto n = static_cast<std::size_t>(in.top + 1);
    if (in.top < 0 || in.start.size() != n || in.weight.size() != n * n) {
        throw DimensionError("chain-sum input tables have the wrong shape");
    }
}

// Depth-first walk below a chain that currently ends at `last` with `len`
// elements and product stack[len]. Every visited node is one chain.
class Walker {
public:
    Walker(const ChainInput& in, ChainSums& out) : in_(in), out_(out), stack_(static_cast<std::size_t>(in.top + 2)) {}

    void from(int last, int len, const Integer& product)
    {
        stack_[static_cast<std::size_t>(len)] = product;
        descend(last, len);
    }

private:
    void descend(int last, int len)
    {
        const int t = in_.top;
        const Integer& p = stack_[static_cast<std::size_t>(len)];
        Integer& next = stack_[static_cast<std::size_t>(len + 1)];
        for (int m = last + 1; m <= t; ++m) {
            const Integer& w = in_.weight[static_cast<std::size_t>(last * (t + 1) + m)];
            if (w == 0) {
                continue;
            }
            mpz_mul(next.get_mpz_t(), p.get_mpz_t(), w.get_mpz_t());
            Integer& acc = out_.at(m, len + 1);
            mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), next.get_mpz_t());
            if (m < t) {
                descend(m, len + 1);
            }
        }
    }

    const ChainInput& in_;
    ChainSums& out_;
    std::vector<Integer> stack_;
};

}  // namespace

ChainSums chain_sums_serial(const ChainInput& in)
{
    check(in);
    ChainSums out(in.top);
    Walker walk(in, out);
    for (int n1 = 2; n1 <= in.top; ++n1) {
        const Integer& s = in.start[static_cast<std::size_t>(n1)];
        if (s == 0) {
            continue;
        }
        out.at(n1, 1) += s;
        walk.from(n1, 1, s);
    }
    return out;
}

ChainSums chain_sums_parallel(const ChainInput& in)
{
    check(in);
    const int t = in.top;
    ChainSums out(t);
    // Work items are chain prefixes (n1, n2); singletons are added up front.
    std::vector<std::pair<int, int>> items;
    for (int n1 = 2; n1 <= t; ++n1) {
        out.at(n1, 1) += in.start[static_cast<std::size_t>(n1)];
        for (int n2 = n1 + 1; n2 <= t; ++n2) {
            items.emplace_back(n1, n2);
        }
    }
    const auto count = static_cast<long>(items.size());
#pragma omp parallel if (t >= 12)
    {
        ChainSums local(t);
        Walker walk(in, local);
        Integer p;
#pragma omp for schedule(dynamic, 1) nowait
        for (long x = 0; x < count; ++x) {
            const auto [n1, n2] = items[static_cast<std::size_t>(x)];
            p = in.start[static_cast<std::size_t>(n1)] * in.weight[static_cast<std::size_t>(n1 * (t + 1) + n2)];
            if (p == 0) {
                continue;
            }
            local.at(n2, 2) += p;
            walk.from(n2, 2, p);
        }
#pragma omp critical(iterlog_chain_reduce)
        {
            auto& dst = out.raw();
            const auto& src = local.raw();
            for (std::size_t i = 0; i < dst.size(); ++i) {
                dst[i] += src[i];
            }
        }
    }
    return out;
}

ChainSums chain_sums(const ChainInput& in, Exec exec)
{
    return exec == Exec::parallel ? chain_sums_parallel(in) : chain_sums_serial(in);
}

}  // namespace iterlog::kernels
