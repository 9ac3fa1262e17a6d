#pragma once

/**
 * @file verify_oracle.hpp
 * @brief Brute-force reference computations used to cross-check the solver.
 *
 * Nothing here touches tropical cones: dominance is a pairwise scan and local
 * upper bounds come from testing every grid point built from coordinate
 * values of N (plus +inf) for emptiness and maximality.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tropmo/pareto_enum.hpp"
#include "tropmo/tropical_point.hpp"

namespace tropmo {

using ApexVector = std::vector<ExtendedScalar>;

/// A finite outcome set of dimension d; duplicates removed, sorted.
class OutcomeCloud {
 public:
  OutcomeCloud(std::size_t d, std::vector<Outcome> points);
  std::size_t dim() const { return dim_; }
  std::span<const Outcome> points() const { return points_; }

 private:
  std::size_t dim_;
  std::vector<Outcome> points_;
};

/// Points with no other point weakly below them. Sorted.
std::vector<Outcome> brute_nondominated(const OutcomeCloud& cloud);

/**
 * Local upper bounds of a nonempty, pairwise nondominated set N by grid
 * enumeration over (coordinate values of N, +inf)^d. Sorted.
 */
std::vector<ApexVector> brute_local_upper_bounds(std::span<const Outcome> nondominated);

struct Verdict {
  bool pass = false;
  std::vector<Outcome> missing_nondominated;     // expected, not returned
  std::vector<Outcome> extra_nondominated;       // returned, not expected
  std::vector<ApexVector> missing_upper_bounds;
  std::vector<ApexVector> extra_upper_bounds;
  std::size_t scalarization_calls = 0;
  std::size_t expected_calls = 0;
  SolveResult result;

  std::string to_string() const;
};

/// Solves the cloud and compares N, the apices and the call count with the brute-force oracles.
Verdict cross_check(const OutcomeCloud& cloud, const SolveOptions& options = {});

}  // namespace tropmo
