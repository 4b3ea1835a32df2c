#include "iterlog/refseq.hpp"

#include "iterlog/errors.hpp"

#include <memory>

namespace iterlog {

RefSeq RefSeq::phi()
{
    return RefSeq("Phi", [](int n) { return Rational(Integer(1), factorial(n)); });
}

RefSeq RefSeq::ones()
{
    return RefSeq("1", [](int) { return Rational(1); });
}

RefSeq RefSeq::harmonic()
{
    return RefSeq("1/n", [](int n) { return n == 0 ? Rational(1) : make_rational(1, n); });
}

RefSeq RefSeq::from_values(std::string name, std::vector<Rational> values)
{
    if (values.size() < 2 || values[0] != 1 || values[1] != 1) {
        throw DomainError("reference sequence must start with 1, 1");
    }
    for (const auto& v : values) {
        if (sgn(v) == 0) {
            throw DomainError("reference sequence entries must be nonzero");
        }
    }
    auto shared = std::make_shared<const std::vector<Rational>>(std::move(values));
    return RefSeq(std::move(name), [shared](int n) {
        if (n < 0 || static_cast<std::size_t>(n) >= shared->size()) {
            throw DomainError("reference sequence value " + std::to_string(n) + " is not defined");
        }
        return (*shared)[static_cast<std::size_t>(n)];
    });
}

Rational RefSeq::operator()(int n) const
{
    if (n < 0) {
        throw DomainError("negative reference sequence index");
    }
    return fn_(n);
}

}  // namespace iterlog
