#pragma once

#include <stdexcept>
#include <string>

namespace cglab {

struct ResourceCap : std::runtime_error {
  explicit ResourceCap(const std::string& what) : std::runtime_error(what) {}
};

struct TorsionInput : std::invalid_argument {
  explicit TorsionInput(const std::string& what) : std::invalid_argument(what) {}
};

struct LengthMismatch : std::invalid_argument {
  explicit LengthMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct AlphabetMismatch : std::invalid_argument {
  explicit AlphabetMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotConjGeodesic : std::invalid_argument {
  explicit NotConjGeodesic(const std::string& what) : std::invalid_argument(what) {}
};

struct InsufficientData : std::invalid_argument {
  explicit InsufficientData(const std::string& what) : std::invalid_argument(what) {}
};

struct RangeError : std::out_of_range {
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

struct NegativeDifference : std::logic_error {
  explicit NegativeDifference(const std::string& what) : std::logic_error(what) {}
};

struct FormulaUnavailable : std::invalid_argument {
  explicit FormulaUnavailable(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct CacheError : std::runtime_error {
  explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

// Signals a broken internal invariant (maps to CLI exit code 4).
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cglab
