#pragma once

/**
 * @file tropical_point.hpp
 * @brief Points of T^{d+1} with coordinates indexed 0..d.
 *
 * Coordinate 0 is the distinguished coordinate of monomial cones. An outcome
 * z in Q^d is identified with the point (0, z_1, ..., z_d).
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tropmo/extended_scalar.hpp"

namespace tropmo {

/// Which tropical semiring a point belongs to. The excluded value is
/// +inf on the min side and -inf on the max side.
enum class Side { kMin, kMax };

/// A vector of d objective values.
using Outcome = std::vector<Rational>;

class TropicalPoint {
 public:
  TropicalPoint() = default;  // empty placeholder, not a valid point
  /// Requires at least two coordinates (d >= 1).
  explicit TropicalPoint(std::vector<ExtendedScalar> coords);
  TropicalPoint(std::initializer_list<ExtendedScalar> coords);

  /// The number d of non-distinguished coordinates.
  std::size_t dim() const { return coords_.size() - 1; }
  std::size_t size() const { return coords_.size(); }

  const ExtendedScalar& operator[](std::size_t i) const { return coords_[i]; }
  ExtendedScalar& operator[](std::size_t i) { return coords_[i]; }

  std::span<const ExtendedScalar> coords() const { return coords_; }

  bool all_finite() const;
  bool contains_plus_inf() const;
  bool contains_minus_inf() const;

  friend bool operator==(const TropicalPoint&, const TropicalPoint&) = default;
  /// Lexicographic, with -inf < finite < +inf in every coordinate.
  friend std::strong_ordering operator<=>(const TropicalPoint& a, const TropicalPoint& b);

  std::string to_string() const;

 private:
  std::vector<ExtendedScalar> coords_;
};

std::ostream& operator<<(std::ostream& os, const TropicalPoint& p);

/// Indices whose coordinate is not the zero element of the given side.
std::vector<std::size_t> support(const TropicalPoint& a, Side side);

/// Tropical scaling: adds the finite scalar to every coordinate.
TropicalPoint scalar_shift(const ExtendedScalar& lambda, const TropicalPoint& x);

/// Componentwise minimum; +inf is the top element.
TropicalPoint cw_min(const TropicalPoint& x, const TropicalPoint& y);

/// The representative of a + R*1 whose 0th coordinate is 0. Requires a_0 finite.
TropicalPoint normalize(const TropicalPoint& a);

/// (0, z_1, ..., z_d).
TropicalPoint embed_outcome(std::span<const Rational> z);

/// Drops coordinate 0.
std::vector<ExtendedScalar> strip_distinguished(const TropicalPoint& a);

/// True iff g_i <= z_i for every i.
bool dominates_leq(std::span<const Rational> g, std::span<const Rational> z);

/// Min-side unit vector e^{(i)} of T_min^{d+1}: 0 at i, +inf elsewhere.
TropicalPoint unit_vector(std::size_t i, std::size_t d);

/// True for the trivial generators e^{(1)}, ..., e^{(d)}.
bool is_trivial_generator(const TropicalPoint& a);

/// Builds an outcome from integers; handy in tests and examples.
Outcome make_outcome(std::initializer_list<long> values);

}  // namespace tropmo
