#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liederiv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shapes, bad scalars, unresolved names.
class InputError : public Error {
public:
    using Error::Error;
};

/// An axiom (associativity, unit, bimodule, Morita diagram) does not hold.
/// `failures` lists every violated identity with its basis indices.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::vector<std::string> failures)
        : Error(what), failures_(std::move(failures)) {}
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

/// An operation was called outside its domain (e.g. a map that is not a Lie
/// derivation handed to the properness test).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Lie-derivation analyses need 2-torsion free modules; raised over GF(2).
class TorsionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Two independent computations disagree. Either the input slipped past
/// validation or there is a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace liederiv
