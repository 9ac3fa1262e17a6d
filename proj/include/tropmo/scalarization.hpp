#pragma once

/**
 * @file scalarization.hpp
 * @brief Problem oracles and the NextNonDominated step.
 *
 * Objective indices are 1-based (1..d) so they line up with the coordinates
 * of tropical points, where index 0 is the distinguished coordinate.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tropmo/tropical_point.hpp"

namespace tropmo {

/// Strict upper bounds z_j < bound for selected objective indices j.
using StrictBounds = std::map<std::size_t, Rational>;

class ProblemOracle {
 public:
  virtual ~ProblemOracle() = default;

  virtual std::size_t dim() const = 0;

  /**
   * Epsilon-constraint scalarization: minimizes z_i over outcomes with
   * z_j < bounds[j] for every bounded j. Ties go to the lexicographically
   * smallest outcome. Empty optional iff nothing is feasible.
   */
  virtual std::optional<Outcome> eps_constraint_min(std::size_t i, const StrictBounds& bounds) const = 0;

  /**
   * Hybrid scalarization: minimizes the coordinate sum over outcomes z <= w.
   * Ties go to the lexicographically smallest outcome. Throws
   * std::invalid_argument if no outcome lies below w.
   */
  virtual Outcome hybrid_min(std::span<const Rational> w) const = 0;

  /// Size of the outcome set when it is materialized.
  virtual std::optional<std::size_t> outcome_count() const { return std::nullopt; }
};

/// Oracle over an explicit finite outcome set, deduplicated and sorted.
class ExplicitSetOracle : public ProblemOracle {
 public:
  ExplicitSetOracle(std::size_t d, std::vector<Outcome> outcomes);

  std::size_t dim() const override { return dim_; }
  std::optional<Outcome> eps_constraint_min(std::size_t i, const StrictBounds& bounds) const override;
  Outcome hybrid_min(std::span<const Rational> w) const override;
  std::optional<std::size_t> outcome_count() const override { return outcomes_.size(); }

  std::span<const Outcome> outcomes() const { return outcomes_; }

 private:
  std::size_t dim_;
  std::vector<Outcome> outcomes_;
};

/// Shapes and data of a multiobjective 0/1 knapsack: min P x + t s.t. W x <= c.
struct KnapsackData {
  std::vector<std::vector<Rational>> profit;   // d x k
  std::vector<std::vector<Rational>> weight;   // r x k
  std::vector<Rational> capacity;              // r
  std::vector<Rational> translate;             // d, empty means zero
};

/**
 * Enumerates all 2^k binary assignments once, keeps the feasible ones and
 * answers queries over the resulting outcome set. k is capped at 30.
 */
class Knapsack01Oracle : public ExplicitSetOracle {
 public:
  explicit Knapsack01Oracle(const KnapsackData& data);

  static std::vector<Outcome> enumerate_outcomes(const KnapsackData& data);
};

/// Objective index used in the epsilon-constraint step for apex a:
/// the smallest index in supp(a) \ {0}, or 1 if that set is empty.
std::size_t epsilon_index(const TropicalPoint& apex);

/**
 * Finds a nondominated outcome strictly inside the open orthant below the
 * normalized apex a (entries +inf are unbounded), or returns nothing if
 * there is none.
 */
std::optional<Outcome> next_nondominated(const ProblemOracle& oracle, const TropicalPoint& apex);

}  // namespace tropmo
