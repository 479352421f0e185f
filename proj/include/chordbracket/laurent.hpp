#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chordbracket {

/// Raised when an exact integer operation would leave the 64-bit range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

} // namespace checked

/**
 * Integer Laurent polynomial in a single variable A.
 *
 * Stored as a map exponent -> coefficient with no zero coefficients, so the
 * zero polynomial is the empty map and equality is structural. Every
 * arithmetic operation is exact; a coefficient leaving the int64 range
 * throws OverflowError instead of wrapping.
 */
class LaurentPoly {
public:
  using Exponent = int;
  using Coefficient = std::int64_t;
  using Terms = std::map<Exponent, Coefficient>;

  LaurentPoly() = default;

  /// Constant polynomial; 0 yields the zero polynomial.
  explicit LaurentPoly(Coefficient constant);

  static LaurentPoly monomial(Coefficient coeff, Exponent exp);

  /// Builds from (exponent, coefficient) pairs. Repeated exponents are summed.
  static LaurentPoly from_terms(const std::vector<std::pair<Exponent, Coefficient>> &terms);

  bool is_zero() const { return terms_.empty(); }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of A^exp (0 when absent).
  Coefficient coefficient(Exponent exp) const;

  /// Requires a nonzero polynomial.
  Exponent min_degree() const;
  Exponent max_degree() const;

  /// max_degree - min_degree, or nullopt for the zero polynomial.
  std::optional<int> span() const;

  /// Substitutes A -> A^-1.
  LaurentPoly mirror() const;

  /// Adds coeff * A^exp in place.
  void add_term(Exponent exp, Coefficient coeff);

  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const LaurentPoly &rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly &rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly &rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly &lhs, const LaurentPoly &rhs);
  friend LaurentPoly operator-(const LaurentPoly &p);

  friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

  /// Descending-exponent text, e.g. "A^2 + 1 - A^-4"; the zero polynomial is "0".
  std::string to_string() const;

  /// JSON array of [exponent, coefficient] pairs sorted by descending exponent.
  std::string to_json() const;

  /// Inverse of to_string().
  static LaurentPoly parse(const std::string &text);

private:
  Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);

/// (-A^2 - A^-2)^k.
LaurentPoly delta_pow(int k);

/// (-A)^k for any integer k.
LaurentPoly neg_a_pow(int k);

} // namespace chordbracket
