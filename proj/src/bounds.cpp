#include "tropmo/bounds.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tropmo/pareto_enum.hpp"

namespace tropmo {

namespace {
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i stays integral at every step.
    acc = acc * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t upper_bound(std::int64_t m, std::int64_t k) {
  const std::int64_t floor_half = k / 2;
  const std::int64_t ceil_half = (k + 1) / 2;
  const std::uint64_t a = binomial(m - ceil_half, floor_half);
  const std::uint64_t b = binomial(m - floor_half - 1, ceil_half - 1);
  return a > kSaturated - b ? kSaturated : a + b;
}

std::string BoundCheck::to_string() const {
  std::ostringstream os;
  os << "m <= U(n+d,d)=" << bound << ": " << (within_bound ? "yes" : "NO")
     << "; scalarizations == n+m: " << (calls_match ? "yes" : "NO")
     << "; m+d <= U(n+d,d): " << (stronger_form_holds ? "yes" : "no");
  return os.str();
}

BoundCheck check_run(const RunStats& stats, std::size_t d) {
  BoundCheck check;
  check.bound = upper_bound(static_cast<std::int64_t>(stats.n + d), static_cast<std::int64_t>(d));
  check.within_bound = stats.m <= check.bound;
  check.stronger_form_holds = stats.m + d <= check.bound;
  check.calls_match = stats.scalarization_calls == stats.n + stats.m;
  return check;
}

}  // namespace tropmo
