#pragma once

/**
 * @file monomial_cone.hpp
 * @brief Monomial max-tropical cones and their complementary min-tropical cones.
 *
 * A finite set G of max-side points with g_0 = 0 generates the monomial cone
 *
 *   M(G) = union over g of { x : x_0 - g_0 <= min(x_j - g_j | j in supp(g) \ {0}) }.
 *
 * The closure C(G) of its complement is a min-tropical cone. Its extremal
 * generators are the trivial unit vectors e^{(1)}..e^{(d)} plus a finite set
 * of apices; restricted to the hyperplane x_0 = 0 these apices are the local
 * upper bounds of G. NewExtremals updates the apex set when one generator is
 * added, in the manner of a double description step.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropmo/tropical_point.hpp"

namespace tropmo {

/// Max-side generators, each with coordinate 0 equal to 0 and no +inf entry.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::size_t d);
  GeneratorSet(std::size_t d, std::vector<TropicalPoint> generators);

  /// Throws std::invalid_argument if g violates the invariants above.
  void insert(TropicalPoint g);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  std::span<const TropicalPoint> generators() const { return generators_; }

 private:
  std::size_t dim_;
  std::vector<TropicalPoint> generators_;
};

/**
 * Extremal generators of a complementary cone C(G), kept sorted and free of
 * duplicates. Always contains e^{(1)}..e^{(d)}; every other member is
 * normalized (coordinate 0 equal to 0) and has no -inf entry.
 */
class ApexSet {
 public:
  /// minunit only.
  explicit ApexSet(std::size_t d);
  /// Adds the trivial generators, normalizes and deduplicates the rest.
  ApexSet(std::size_t d, std::vector<TropicalPoint> apices);

  /// minunit plus e^{(0)}: the extremal generators of C(empty set).
  static ApexSet initial(std::size_t d);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return apices_.size(); }
  std::span<const TropicalPoint> apices() const { return apices_; }
  std::vector<TropicalPoint> nontrivial() const;
  bool contains(const TropicalPoint& a) const;

  friend bool operator==(const ApexSet&, const ApexSet&) = default;

 private:
  std::size_t dim_;
  std::vector<TropicalPoint> apices_;
};

/// Membership of an all-finite point x in M(G).
bool contains(const GeneratorSet& generators, const TropicalPoint& x);

/// True iff normalize(x)_j < a_j for every j in [d]; +inf bounds are vacuous.
/// x must be all-finite and a normalized.
bool strictly_below(const TropicalPoint& x, const TropicalPoint& apex);

/// Exterior extremality test: for every j in supp(a) \ {0} some generator
/// touches a exactly at coordinate j and lies strictly below it elsewhere.
/// Trivial generators are extremal by definition.
bool is_extremal_apex(const TropicalPoint& a, const GeneratorSet& generators);

/// Interior extremality test against a generating set of the min-cone: b is
/// redundant iff some other a in the set satisfies a_0 - b_0 <= min_i(a_i - b_i).
bool is_extremal_inner(const TropicalPoint& b, std::span<const TropicalPoint> generating_set);

/// One candidate produced by a (b, c) pair in NewExtremals.
struct CandidateRecord {
  TropicalPoint candidate;  // normalized
  bool extremal = false;    // verdict of is_extremal_apex against G + {h}
};

/// Intermediate sets of one NewExtremals call, kept for tracing and audits.
struct NewExtremalsTrace {
  std::vector<TropicalPoint> kept;     // A^>=: apices already inside the new halfspace
  std::vector<TropicalPoint> removed;  // A \ A^>=
  std::vector<CandidateRecord> candidates;  // deduplicated, sorted
};

/**
 * Given the extremal generators A of C(G), returns those of C(G + {h}).
 * h must be a max-side point with h_0 = 0. Apices violating the new
 * halfspace are paired with every surviving apex; each combination
 * min(lambda*1 + b, c) is kept after normalization if it passes
 * is_extremal_apex against G + {h}.
 */
ApexSet new_extremals(const GeneratorSet& generators, const ApexSet& apices, const TropicalPoint& h,
                      NewExtremalsTrace* trace = nullptr);

/// Apices of C(G) computed by chaining new_extremals over the points of G.
ApexSet complementary_apices(const GeneratorSet& generators);

/**
 * Irreducible components of the monomial ideal with the given exponent
 * vectors. Each result is an apex over (positive integers, +inf): a finite
 * entry a_j stands for x_j^{a_j}, +inf for an absent variable.
 * Throws std::invalid_argument on an empty list or a negative/fractional entry.
 */
std::vector<std::vector<ExtendedScalar>> irreducible_components(std::span<const Outcome> exponents);

}  // namespace tropmo
