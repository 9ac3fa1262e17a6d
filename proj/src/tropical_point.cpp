#include "tropmo/tropical_point.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tropmo {

TropicalPoint::TropicalPoint(std::vector<ExtendedScalar> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("tropical point needs d >= 1 (at least two coordinates)");
}

TropicalPoint::TropicalPoint(std::initializer_list<ExtendedScalar> coords)
    : TropicalPoint(std::vector<ExtendedScalar>(coords)) {}

bool TropicalPoint::all_finite() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& x) { return x.is_finite(); });
}

bool TropicalPoint::contains_plus_inf() const {
  return std::any_of(coords_.begin(), coords_.end(), [](const auto& x) { return x.is_plus_inf(); });
}

bool TropicalPoint::contains_minus_inf() const {
  return std::any_of(coords_.begin(), coords_.end(), [](const auto& x) { return x.is_minus_inf(); });
}

std::strong_ordering operator<=>(const TropicalPoint& a, const TropicalPoint& b) {
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                b.coords_.end());
}

std::string TropicalPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TropicalPoint& p) { return os << p.to_string(); }

std::vector<std::size_t> support(const TropicalPoint& a, Side side) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool excluded = side == Side::kMin ? a[i].is_plus_inf() : a[i].is_minus_inf();
    if (!excluded) out.push_back(i);
  }
  return out;
}

TropicalPoint scalar_shift(const ExtendedScalar& lambda, const TropicalPoint& x) {
  if (!lambda.is_finite()) throw std::invalid_argument("scalar_shift needs a finite scalar");
  TropicalPoint out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].is_finite()) out[i] = out[i] + lambda;
  }
  return out;
}

TropicalPoint cw_min(const TropicalPoint& x, const TropicalPoint& y) {
  if (x.size() != y.size()) throw std::invalid_argument("cw_min: dimension mismatch");
  TropicalPoint out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (y[i] < out[i]) out[i] = y[i];
  }
  return out;
}

TropicalPoint normalize(const TropicalPoint& a) {
  if (!a[0].is_finite()) throw std::invalid_argument("normalize: coordinate 0 must be finite, got " + a.to_string());
  return scalar_shift(-a[0], a);
}

TropicalPoint embed_outcome(std::span<const Rational> z) {
  if (z.empty()) throw std::invalid_argument("embed_outcome: outcome must have d >= 1 entries");
  std::vector<ExtendedScalar> coords;
  coords.reserve(z.size() + 1);
  coords.emplace_back(0);
  for (const auto& v : z) coords.emplace_back(v);
  return TropicalPoint(std::move(coords));
}

std::vector<ExtendedScalar> strip_distinguished(const TropicalPoint& a) {
  auto c = a.coords();
  return {c.begin() + 1, c.end()};
}

bool dominates_leq(std::span<const Rational> g, std::span<const Rational> z) {
  if (g.size() != z.size()) throw std::invalid_argument("dominates_leq: length mismatch");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > z[i]) return false;
  }
  return true;
}

TropicalPoint unit_vector(std::size_t i, std::size_t d) {
  if (i > d) throw std::invalid_argument("unit_vector: index out of range");
  std::vector<ExtendedScalar> coords(d + 1, kPlusInf);
  coords[i] = ExtendedScalar(0);
  return TropicalPoint(std::move(coords));
}

bool is_trivial_generator(const TropicalPoint& a) {
  if (!a[0].is_plus_inf()) return false;
  std::size_t zeros = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i].is_plus_inf()) continue;
    if (a[i] != ExtendedScalar(0)) return false;
    ++zeros;
  }
  return zeros == 1;
}

Outcome make_outcome(std::initializer_list<long> values) {
  Outcome out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace tropmo
