#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace tropmo {

struct RunStats;

/// Binomial coefficient with C(n, r) = 0 for r < 0 or n < r. Saturates at UINT64_MAX.
std::uint64_t binomial(std::int64_t n, std::int64_t r);

/**
 * McMullen's bound: the number of facets of a cyclic k-polytope with m
 * vertices, C(m - ceil(k/2), floor(k/2)) + C(m - floor(k/2) - 1, ceil(k/2) - 1).
 * Bounds the extreme rays of a tropical cone in T^{d+1} cut out by n
 * halfspaces via U(n + d, d). Saturates at UINT64_MAX.
 */
std::uint64_t upper_bound(std::int64_t m, std::int64_t k);

struct BoundCheck {
  bool within_bound = false;       // m <= U(n+d, d)
  bool calls_match = false;        // scalarizations == n + m
  bool stronger_form_holds = false;  // m + d <= U(n+d, d); reported only
  std::uint64_t bound = 0;

  bool ok() const { return within_bound && calls_match; }
  std::string to_string() const;
};

BoundCheck check_run(const RunStats& stats, std::size_t d);

}  // namespace tropmo
