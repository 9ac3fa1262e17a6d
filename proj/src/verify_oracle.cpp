#include "tropmo/verify_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tropmo {

OutcomeCloud::OutcomeCloud(std::size_t d, std::vector<Outcome> points) : dim_(d), points_(std::move(points)) {
  if (d == 0) throw std::invalid_argument("outcome cloud needs d >= 1");
  for (const auto& z : points_) {
    if (z.size() != d) throw std::invalid_argument("outcome cloud: point of wrong length");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::vector<Outcome> brute_nondominated(const OutcomeCloud& cloud) {
  std::vector<Outcome> out;
  const auto pts = cloud.points();
  for (const auto& z : pts) {
    const bool dominated = std::any_of(pts.begin(), pts.end(), [&](const Outcome& w) {
      return w != z && dominates_leq(w, z);
    });
    if (!dominated) out.push_back(z);
  }
  return out;  // already sorted since the cloud is
}

namespace {

bool strictly_below(const Outcome& g, const ApexVector& a) {
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!(ExtendedScalar(g[j]) < a[j])) return false;
  }
  return true;
}

bool is_local_upper_bound(const ApexVector& a, std::span<const Outcome> points) {
  for (const auto& g : points) {
    if (strictly_below(g, a)) return false;
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!a[j].is_finite()) continue;
    const bool touched = std::any_of(points.begin(), points.end(), [&](const Outcome& g) {
      if (g[j] != a[j].value()) return false;
      for (std::size_t l = 0; l < a.size(); ++l) {
        if (l != j && !(ExtendedScalar(g[l]) < a[l])) return false;
      }
      return true;
    });
    if (!touched) return false;
  }
  return true;
}

}  // namespace

std::vector<ApexVector> brute_local_upper_bounds(std::span<const Outcome> nondominated) {
  if (nondominated.empty()) throw std::invalid_argument("brute_local_upper_bounds: N must be nonempty");
  const std::size_t d = nondominated.front().size();

  std::vector<std::vector<ExtendedScalar>> axis(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& g : nondominated) axis[j].emplace_back(g[j]);
    axis[j].push_back(kPlusInf);
    std::sort(axis[j].begin(), axis[j].end());
    axis[j].erase(std::unique(axis[j].begin(), axis[j].end()), axis[j].end());
  }

  std::vector<ApexVector> out;
  std::vector<std::size_t> odometer(d, 0);
  ApexVector candidate(d);
  while (true) {
    for (std::size_t j = 0; j < d; ++j) candidate[j] = axis[j][odometer[j]];
    if (is_local_upper_bound(candidate, nondominated)) out.push_back(candidate);
    std::size_t j = 0;
    while (j < d && ++odometer[j] == axis[j].size()) odometer[j++] = 0;
    if (j == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <typename T>
void diff(const std::vector<T>& expected, const std::vector<T>& actual, std::vector<T>& missing,
          std::vector<T>& extra) {
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
}

std::string render(const Outcome& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + rational_to_string(z[i]);
  return s + ")";
}

std::string render(const ApexVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].to_string();
  return s + ")";
}

template <typename T>
void list(std::ostringstream& os, const char* label, const std::vector<T>& items) {
  if (items.empty()) return;
  os << "  " << label << ':';
  for (const auto& x : items) os << ' ' << render(x);
  os << '\n';
}

}  // namespace

Verdict cross_check(const OutcomeCloud& cloud, const SolveOptions& options) {
  Verdict v;
  ExplicitSetOracle oracle(cloud.dim(), {cloud.points().begin(), cloud.points().end()});
  v.result = solve(oracle, options);

  const auto expected_n = brute_nondominated(cloud);
  // With N empty the single apex e^{(0)} bounds the whole space.
  const auto expected_apices = expected_n.empty() ? std::vector<ApexVector>{ApexVector(cloud.dim(), kPlusInf)}
                                                  : brute_local_upper_bounds(expected_n);
  diff(expected_n, v.result.nondominated, v.missing_nondominated, v.extra_nondominated);
  diff(expected_apices, v.result.local_upper_bounds, v.missing_upper_bounds, v.extra_upper_bounds);
  v.scalarization_calls = v.result.stats.scalarization_calls;
  v.expected_calls = expected_n.size() + expected_apices.size();
  v.pass = v.missing_nondominated.empty() && v.extra_nondominated.empty() && v.missing_upper_bounds.empty() &&
           v.extra_upper_bounds.empty() && v.scalarization_calls == v.expected_calls;
  return v;
}

std::string Verdict::to_string() const {
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << ": n=" << result.stats.n << " m=" << result.stats.m
     << " scalarizations=" << scalarization_calls << " (expected " << expected_calls << ")\n";
  list(os, "missing nondominated", missing_nondominated);
  list(os, "unexpected nondominated", extra_nondominated);
  list(os, "missing local upper bounds", missing_upper_bounds);
  list(os, "unexpected local upper bounds", extra_upper_bounds);
  return os.str();
}

}  // namespace tropmo
