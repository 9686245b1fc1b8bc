#pragma once

#include <stdexcept>
#include <string>

namespace qdual {

// Bad argument to a q-combinatorial or structural constructor (negative
// factorial length, k > n in a binomial, base d <= 0, arity mismatch).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A substitution t -> q^m made a denominator vanish.  Callers that walk the
// generic/integral boundary catch this and branch.
class SpecializationPole : public std::runtime_error {
public:
    explicit SpecializationPole(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric evaluation hit a zero denominator.
class EvaluationPole : public std::runtime_error {
public:
    explicit EvaluationPole(const std::string& msg) : std::runtime_error(msg) {}
};

// An operator product or rewrite that the represented algebra does not admit,
// e.g. q- and q^2-derivations in the same variable slot.
class StructureError : public std::logic_error {
public:
    explicit StructureError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace qdual
