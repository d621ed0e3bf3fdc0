#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/check.hpp"

namespace ringlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: table dimensions, out-of-range indices, bad parameters.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A construction would exceed the configured order cap.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

/// An exhaustive scan would exceed its evaluation budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : Error(what + ": requires " + std::to_string(required) + " evaluations, budget is " +
                std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// The operation is undefined for this ring (e.g. halving with 2-torsion).
class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

/// A definitional precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    PreconditionError(std::string predicate, const std::string& what,
                      std::vector<Elem> witness = {})
        : Error(what), predicate_(std::move(predicate)), witness_(std::move(witness)) {}

    /// Name of the predicate that failed, e.g. "jordan_n_derivation".
    const std::string& predicate() const noexcept { return predicate_; }
    const std::vector<Elem>& witness() const noexcept { return witness_; }

private:
    std::string predicate_;
    std::vector<Elem> witness_;
};

}  // namespace ringlab
