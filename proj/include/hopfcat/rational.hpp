#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfcat {

/* Exact rational scalar. GMP keeps values in lowest terms with positive
   denominator; every construction path below canonicalizes. */
using Rational = mpq_class;

struct HopfError : std::runtime_error {
  explicit HopfError(const std::string& what) : std::runtime_error(what) {}
};

/* An operation would leave the degree-d filtration window. */
struct TruncationError : HopfError {
  using HopfError::HopfError;
};

/* Constructor input failed validation (bad table, bad bracket, bad image...). */
struct ValidationError : HopfError {
  using HopfError::HopfError;
};

/* Element used with a presentation it does not belong to. */
struct OwnershipError : HopfError {
  using HopfError::HopfError;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/* Accepts "p", "-p", "p/q" with optional sign; rejects anything else. */
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

/* Binomial coefficient as an exact integer rational. */
Rational binomial(std::uint32_t n, std::uint32_t k);

}  // namespace hopfcat
