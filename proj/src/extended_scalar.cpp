#include "tropmo/extended_scalar.hpp"

#include <cctype>
#include <string>

namespace tropmo {

const Rational& ExtendedScalar::value() const {
  if (!is_finite()) throw std::logic_error("value() called on an infinite scalar");
  return value_;
}

ExtendedScalar ExtendedScalar::operator-() const {
  switch (kind_) {
    case Kind::kPlusInf: return minus_inf();
    case Kind::kMinusInf: return plus_inf();
    case Kind::kFinite: break;
  }
  return ExtendedScalar(Rational(-value_));
}

ExtendedScalar operator+(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.is_finite() && b.is_finite()) return ExtendedScalar(Rational(a.value_ + b.value_));
  if ((a.is_plus_inf() && b.is_minus_inf()) || (a.is_minus_inf() && b.is_plus_inf())) {
    throw UndefinedArithmetic("inf + (-inf) is undefined");
  }
  return a.is_finite() ? b : a;
}

ExtendedScalar operator-(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.is_finite() && b.is_finite()) return ExtendedScalar(Rational(a.value_ - b.value_));
  if (a.kind_ == b.kind_) {
    throw UndefinedArithmetic(a.is_plus_inf() ? "inf - inf is undefined" : "-inf - (-inf) is undefined");
  }
  // Mixed cases: the infinite operand decides, with b's sign flipped.
  if (a.is_plus_inf() || b.is_minus_inf()) return ExtendedScalar::plus_inf();
  return ExtendedScalar::minus_inf();
}

bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ExtendedScalar::to_string() const {
  switch (kind_) {
    case Kind::kPlusInf: return "inf";
    case Kind::kMinusInf: return "-inf";
    case Kind::kFinite: break;
  }
  return rational_to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtendedScalar& x) { return os << x.to_string(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_number(text);

  Rational result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);
    mpz_class digits(std::string(int_part) + std::string(frac_part), 10);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      result = Rational(digits * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
    }
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

ExtendedScalar ExtendedScalar::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "inf" || s == "+inf") return plus_inf();
  if (s == "-inf") return minus_inf();
  return ExtendedScalar(parse_rational(text));
}

}  // namespace tropmo
