#pragma once

#include <stdexcept>
#include <string>

namespace lmd {

struct VertexOutOfRange : std::out_of_range {
  explicit VertexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct CapacityMismatch : std::invalid_argument {
  explicit CapacityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyGraph : std::invalid_argument {
  explicit EmptyGraph(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidPaleyModulus : std::invalid_argument {
  explicit InvalidPaleyModulus(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyGeneratorSet : std::invalid_argument {
  explicit EmptyGeneratorSet(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptySideOne : std::invalid_argument {
  explicit EmptySideOne(const std::string& what) : std::invalid_argument(what) {}
};

struct NotACover : std::invalid_argument {
  explicit NotACover(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidOrder : std::invalid_argument {
  explicit InvalidOrder(const std::string& what) : std::invalid_argument(what) {}
};

struct ParameterTooSmall : std::invalid_argument {
  explicit ParameterTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

struct NoSuchPrime : std::runtime_error {
  explicit NoSuchPrime(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// CLI-level mismatch between the requested algorithm and the input kind.
struct FormatMismatch : std::runtime_error {
  explicit FormatMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lmd
