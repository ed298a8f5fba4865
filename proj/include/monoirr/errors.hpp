#pragma once

#include <stdexcept>
#include <string>

namespace monoirr {

/// Precondition violated by the caller (bad modulus, non-coprime CRT input, ...).
class InvalidArgument : public std::invalid_argument {
   public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// The request is well-formed but exceeds a configured work or size bound.
class UnsupportedSize : public std::runtime_error {
   public:
    explicit UnsupportedSize(const std::string& what) : std::runtime_error(what) {}
};

/// An invariant that the mathematics guarantees did not hold.
class InternalError : public std::logic_error {
   public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace monoirr
