#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hcanon {

// Exact scalars. mpq_class keeps values in lowest terms with a positive
// denominator once canonicalized; every constructor path below does so.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Malformed textual or structural input (CLI exit code 1).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but violates a mathematical precondition (exit code 2).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family of vectors or matrices that was required to be independent is not.
class LinearDependenceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

bool is_zero_vector(const RatVector& v);
bool is_zero_vector(const IntVector& v);

RatVector to_rational(const IntVector& v);

/// Floor division and the matching nonnegative-remainder convention used by
/// all lattice reductions: a = q*b + r with 0 <= r < |b|.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

}  // namespace hcanon
