#pragma once

/**
 * @file pareto_enum.hpp
 * @brief The main enumeration loop over (G, A, Omega).
 *
 * G holds confirmed nondominated points, A the extremal generators of the
 * complementary cone C(G) and Omega the apices certified final. Each
 * iteration picks an unconfirmed apex a and asks the oracle for a
 * nondominated point below it: either G grows and A is updated, or a joins
 * Omega. The loop stops when A == Omega after exactly n + m iterations.
 */

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropmo/monomial_cone.hpp"
#include "tropmo/scalarization.hpp"

namespace tropmo {

struct RunStats {
  std::size_t scalarization_calls = 0;
  std::size_t n = 0;  // nondominated points
  std::size_t m = 0;  // nontrivial final apices, e^{(0)} included when N is empty
  std::uint64_t upper_bound = 0;  // U(n+d, d)
  std::chrono::duration<double> wall_time{0};
};

/// Thrown when the loop exceeds its iteration cap.
class IterationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QueueDiscipline { kFifo, kLifo, kRandom };

/// State visible to observers after every iteration.
struct GeneratorState {
  GeneratorSet generators;
  ApexSet apices;
  std::vector<TropicalPoint> confirmed;  // Omega, sorted
  std::deque<TropicalPoint> pending;     // A \ Omega in pick order
};

struct SolveOptions {
  QueueDiscipline queue = QueueDiscipline::kFifo;
  std::uint64_t seed = 0;  // used by kRandom
  /// Default: 10 * U(|Z| + d, d) when the outcome set is materialized, else 10^6.
  std::optional<std::size_t> max_iterations;
  std::function<void(const GeneratorState&)> on_iteration;
  std::function<void(const GeneratorSet&, const TropicalPoint&, const NewExtremalsTrace&)> on_new_extremals;
};

struct SolveResult {
  std::vector<Outcome> nondominated;                          // sorted
  std::vector<std::vector<ExtendedScalar>> local_upper_bounds;  // sorted, coordinate 0 dropped
  RunStats stats;
};

SolveResult solve(const ProblemOracle& oracle, const SolveOptions& options = {});

/// Human-readable run summary, including the n + m check.
std::string run_report(const RunStats& stats, std::size_t d);

}  // namespace tropmo
