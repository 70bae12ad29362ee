#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// a rational with p in the denominator was used where a p-adic integer is required
struct NegativeValuation : Error {
  explicit NegativeValuation(const std::string& msg) : Error(msg) {}
};

// gamma evaluation requested outside Z_p
struct NotPIntegral : Error {
  explicit NotPIntegral(const std::string& msg) : Error(msg) {}
};

struct MismatchedModulus : Error {
  explicit MismatchedModulus(const std::string& msg) : Error(msg) {}
};

struct NonInvertible : Error {
  explicit NonInvertible(const std::string& msg) : Error(msg) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

// modular summation cancelled past the guard digits; raise M
struct PrecisionLoss : Error {
  explicit PrecisionLoss(const std::string& msg) : Error(msg) {}
};

struct InvalidParameters : Error {
  explicit InvalidParameters(const std::string& msg) : Error(msg) {}
};

// sampled validation point hit a pole; callers skip, never abort
struct DegenerateDenominator : Error {
  explicit DegenerateDenominator(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace supercong
