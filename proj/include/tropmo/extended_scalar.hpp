#pragma once

/**
 * @file extended_scalar.hpp
 * @brief Exact rationals extended by +inf and -inf.
 *
 * Entries of tropical points live in Q u {+inf, -inf}. Finite values are
 * GMP rationals, so every comparison is exact. The min-tropical zero is
 * +inf and the max-tropical zero is -inf; one type serves both semirings.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropmo {

using Rational = mpq_class;

/// Raised when an arithmetic expression has no defined value (inf - inf).
class UndefinedArithmetic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ExtendedScalar {
 public:
  enum class Kind : std::uint8_t { kMinusInf, kFinite, kPlusInf };

  ExtendedScalar() = default;
  ExtendedScalar(Rational value) : kind_(Kind::kFinite), value_(std::move(value)) {
    value_.canonicalize();
  }
  ExtendedScalar(long value) : kind_(Kind::kFinite), value_(value) {}
  ExtendedScalar(int value) : kind_(Kind::kFinite), value_(value) {}

  static ExtendedScalar plus_inf() { return ExtendedScalar(Kind::kPlusInf); }
  static ExtendedScalar minus_inf() { return ExtendedScalar(Kind::kMinusInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_plus_inf() const { return kind_ == Kind::kPlusInf; }
  bool is_minus_inf() const { return kind_ == Kind::kMinusInf; }

  /// The finite value; throws std::logic_error on an infinity.
  const Rational& value() const;

  ExtendedScalar operator-() const;

  friend ExtendedScalar operator+(const ExtendedScalar& a, const ExtendedScalar& b);
  friend ExtendedScalar operator-(const ExtendedScalar& a, const ExtendedScalar& b);

  friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b);
  friend std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b);

  /// "inf", "-inf", an integer, or "p/q" in lowest terms.
  std::string to_string() const;

  /**
   * Parses "inf", "+inf", "-inf", integers, fractions "p/q" and decimal
   * literals such as "-1.25" or "3e-2". Decimals are converted exactly.
   * Throws std::invalid_argument on malformed text.
   */
  static ExtendedScalar parse(std::string_view text);

 private:
  explicit ExtendedScalar(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& x);

/// Exact decimal/fraction parsing for finite input values only.
Rational parse_rational(std::string_view text);

/// Integer rationals print as integers, others as "p/q".
std::string rational_to_string(const Rational& q);

inline const ExtendedScalar kPlusInf = ExtendedScalar::plus_inf();
inline const ExtendedScalar kMinusInf = ExtendedScalar::minus_inf();

}  // namespace tropmo
