#pragma once

#include "iterlog/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace iterlog {

// A reference sequence: nonzero rationals with value(0) = value(1) = 1.
class RefSeq {
public:
    // Phi_n = 1/n!
    static RefSeq phi();
    // all ones
    static RefSeq ones();
    // 1/n for n > 0
    static RefSeq harmonic();
    // Explicit values Omega_0..Omega_{k-1}; validated, and value(n) throws
    // DomainError for n >= k.
    static RefSeq from_values(std::string name, std::vector<Rational> values);

    const std::string& name() const { return name_; }
    Rational operator()(int n) const;

private:
    RefSeq(std::string name, std::function<Rational(int)> fn) : name_(std::move(name)), fn_(std::move(fn)) {}

    std::string name_;
    std::function<Rational(int)> fn_;
};

}  // namespace iterlog
