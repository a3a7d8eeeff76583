#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace circlefp {

/// Arbitrary-precision integer used for weights, exponents and parameters.
using Integer = mpz_class;
/// Exact rational number.
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Error hierarchy. Every error raised by the library derives from Error.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A weight was zero (or non-positive where positivity is required).
class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

/// Two data sets or points disagree on arity.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Input text (or JSON) could not be parsed. line() is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Weight occurrences cannot be perfectly matched into edges.
class NoMatchingError : public Error {
 public:
  using Error::Error;
};

/// A rewrite move is not applicable to the collection it was applied to.
class StaleMoveError : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration/search limit was exceeded.
class LimitExceededError : public Error {
 public:
  using Error::Error;
};

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) { return value.get_str(); }

/// Parses a decimal integer with an optional leading '-'. Throws std::invalid_argument.
inline Integer parse_integer(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
  }
  return Integer(std::string(text), 10);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

inline Integer abs(const Integer& a) {
  Integer result = a;
  if (result < 0) result = -result;
  return result;
}

/// Converts a non-negative Integer to std::size_t, throwing LimitExceededError if it does not fit.
inline std::size_t to_size(const Integer& value) {
  if (value < 0 || !value.fits_ulong_p()) {
    throw LimitExceededError("integer " + value.get_str() + " does not fit a machine size");
  }
  return static_cast<std::size_t>(value.get_ui());
}

// JSON mirror: integers are plain JSON numbers when they fit in 64 bits and
// decimal strings otherwise, so arbitrary-precision values round-trip exactly.

inline nlohmann::json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }
  throw ParseError(0, "expected an integer, got " + j.dump());
}

inline nlohmann::json rational_to_json(const Rational& value) { return value.get_str(); }

}  // namespace circlefp
