#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "krfusion/lie_data.hpp"

namespace krfusion {

/*
  Laurent polynomial in q with arbitrary-precision integer coefficients.

  Stored densely from the lowest exponent; the canonical form has nonzero
  first and last coefficients, and the zero polynomial stores nothing.
*/
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT

  static LaurentPoly monomial(const BigInt& coefficient, std::int64_t exponent);
  /// Coefficients for q^low, q^(low+1), ...
  static LaurentPoly from_coefficients(std::int64_t low, std::vector<BigInt> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exponent() const { return low_; }  // 0 for the zero polynomial
  std::int64_t max_exponent() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  BigInt coefficient(std::int64_t exponent) const;
  /// Nonzero terms (exponent, coefficient) in ascending exponent order.
  std::vector<std::pair<std::int64_t, BigInt>> terms() const;
  /// Dense coefficients from min_exponent() to max_exponent().
  const std::vector<BigInt>& dense() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// Multiply by q^e.
  LaurentPoly shifted(std::int64_t e) const;
  /// this += q^shift * other.
  void add_scaled(const LaurentPoly& other, std::int64_t shift);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical rendering: ascending exponents joined by " + ", e.g.
  /// "1 + 2*q + q^3", "q^-2 + -1*q^-1". Unit coefficients and exponent 1 are
  /// elided; the zero polynomial is "0".
  std::string to_string() const;

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Gaussian binomial [n, m]_q. Zero unless 0 <= m <= n.
LaurentPoly q_binomial(std::int64_t n, std::int64_t m);

/// prod_{i=1}^{m} (n - m + i) / i, the Gamma-ratio binomial continued to all integers n.
/// Requires m >= 0.
BigInt gamma_binomial(std::int64_t n, std::int64_t m);

/// p(q) -> p(q^{-1}).
LaurentPoly substitute_inverse(const LaurentPoly& p);

/// p(1).
BigInt eval_at_one(const LaurentPoly& p);

/// Parses the canonical rendering back. Throws std::invalid_argument.
LaurentPoly parse_laurent_poly(const std::string& text);

}  // namespace krfusion
