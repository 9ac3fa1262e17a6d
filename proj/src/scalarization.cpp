#include "tropmo/scalarization.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropmo {

ExplicitSetOracle::ExplicitSetOracle(std::size_t d, std::vector<Outcome> outcomes)
    : dim_(d), outcomes_(std::move(outcomes)) {
  if (d == 0) throw std::invalid_argument("oracle needs d >= 1");
  for (const auto& z : outcomes_) {
    if (z.size() != d) {
      throw std::invalid_argument("outcome has " + std::to_string(z.size()) + " entries, expected " +
                                  std::to_string(d));
    }
  }
  std::sort(outcomes_.begin(), outcomes_.end());
  outcomes_.erase(std::unique(outcomes_.begin(), outcomes_.end()), outcomes_.end());
}

std::optional<Outcome> ExplicitSetOracle::eps_constraint_min(std::size_t i, const StrictBounds& bounds) const {
  if (i < 1 || i > dim_) throw std::out_of_range("eps_constraint_min: objective index out of range");
  for (const auto& [j, _] : bounds) {
    if (j < 1 || j > dim_) throw std::out_of_range("eps_constraint_min: bound index out of range");
    if (j == i) throw std::invalid_argument("eps_constraint_min: the minimized objective cannot be bounded");
  }
  const Outcome* best = nullptr;
  // outcomes_ is sorted, so the first minimizer is the lexicographic tie-break.
  for (const auto& z : outcomes_) {
    const bool feasible = std::all_of(bounds.begin(), bounds.end(),
                                      [&](const auto& jb) { return z[jb.first - 1] < jb.second; });
    if (feasible && (!best || z[i - 1] < (*best)[i - 1])) best = &z;
  }
  if (!best) return std::nullopt;
  return *best;
}

Outcome ExplicitSetOracle::hybrid_min(std::span<const Rational> w) const {
  if (w.size() != dim_) throw std::invalid_argument("hybrid_min: bound vector has wrong length");
  const Outcome* best = nullptr;
  Rational best_sum;
  for (const auto& z : outcomes_) {
    if (!dominates_leq(z, w)) continue;
    Rational sum = 0;
    for (const auto& v : z) sum += v;
    if (!best || sum < best_sum) {
      best = &z;
      best_sum = sum;
    }
  }
  if (!best) throw std::invalid_argument("hybrid_min: no outcome lies below the given bound");
  return *best;
}

namespace {

void check_shape(const KnapsackData& data) {
  const std::size_t d = data.profit.size();
  if (d == 0) throw std::invalid_argument("knapsack: objective matrix P has no rows");
  const std::size_t k = data.profit.front().size();
  if (k > 30) throw std::invalid_argument("knapsack: more than 30 items is beyond brute-force enumeration");
  for (const auto& row : data.profit) {
    if (row.size() != k) throw std::invalid_argument("knapsack: rows of P differ in length");
  }
  for (const auto& row : data.weight) {
    if (row.size() != k) throw std::invalid_argument("knapsack: rows of W must have as many columns as P");
  }
  if (data.capacity.size() != data.weight.size()) {
    throw std::invalid_argument("knapsack: capacity vector length must match the rows of W");
  }
  if (!data.translate.empty() && data.translate.size() != d) {
    throw std::invalid_argument("knapsack: translation vector length must equal d");
  }
}

}  // namespace

std::vector<Outcome> Knapsack01Oracle::enumerate_outcomes(const KnapsackData& data) {
  check_shape(data);
  const std::size_t d = data.profit.size();
  const std::size_t k = data.profit.front().size();
  std::vector<Outcome> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool feasible = true;
    for (std::size_t r = 0; r < data.weight.size() && feasible; ++r) {
      Rational load = 0;
      for (std::size_t item = 0; item < k; ++item) {
        if (mask >> item & 1) load += data.weight[r][item];
      }
      feasible = load <= data.capacity[r];
    }
    if (!feasible) continue;
    Outcome z(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t item = 0; item < k; ++item) {
        if (mask >> item & 1) z[i] += data.profit[i][item];
      }
      if (!data.translate.empty()) z[i] += data.translate[i];
    }
    out.push_back(std::move(z));
  }
  return out;
}

Knapsack01Oracle::Knapsack01Oracle(const KnapsackData& data)
    : ExplicitSetOracle(data.profit.size(), enumerate_outcomes(data)) {}

std::size_t epsilon_index(const TropicalPoint& apex) {
  for (std::size_t j = 1; j < apex.size(); ++j) {
    if (!apex[j].is_plus_inf()) return j;
  }
  return 1;
}

std::optional<Outcome> next_nondominated(const ProblemOracle& oracle, const TropicalPoint& apex) {
  if (apex.size() != oracle.dim() + 1) throw std::invalid_argument("next_nondominated: apex dimension mismatch");
  if (apex[0] != ExtendedScalar(0) || apex.contains_minus_inf()) {
    throw std::invalid_argument("next_nondominated: apex must be normalized min-side, got " + apex.to_string());
  }
  const std::size_t i = epsilon_index(apex);
  StrictBounds bounds;
  for (std::size_t j = 1; j < apex.size(); ++j) {
    if (j != i && apex[j].is_finite()) bounds.emplace(j, apex[j].value());
  }
  auto w = oracle.eps_constraint_min(i, bounds);
  if (!w) return std::nullopt;
  // The epsilon-constraint problem leaves z_i unbounded; a minimum at or
  // above a_i means the open orthant below a holds no outcome at all.
  if (apex[i].is_finite() && (*w)[i - 1] >= apex[i].value()) return std::nullopt;
  return oracle.hybrid_min(*w);
}

}  // namespace tropmo
