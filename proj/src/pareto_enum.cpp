#include "tropmo/pareto_enum.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tropmo/bounds.hpp"

namespace tropmo {

namespace {

std::size_t default_cap(const ProblemOracle& oracle) {
  const auto count = oracle.outcome_count();
  if (!count) return 1'000'000;
  const std::uint64_t u =
      upper_bound(static_cast<std::int64_t>(*count + oracle.dim()), static_cast<std::int64_t>(oracle.dim()));
  return u > std::numeric_limits<std::size_t>::max() / 10 ? std::numeric_limits<std::size_t>::max()
                                                          : static_cast<std::size_t>(u * 10);
}

TropicalPoint pick(std::deque<TropicalPoint>& pending, QueueDiscipline queue, std::mt19937_64& rng) {
  std::size_t index = 0;
  switch (queue) {
    case QueueDiscipline::kFifo: index = 0; break;
    case QueueDiscipline::kLifo: index = pending.size() - 1; break;
    case QueueDiscipline::kRandom:
      index = std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(rng);
      break;
  }
  TropicalPoint a = std::move(pending[index]);
  pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(index));
  return a;
}

}  // namespace

SolveResult solve(const ProblemOracle& oracle, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t d = oracle.dim();

  GeneratorState state{GeneratorSet(d), ApexSet::initial(d), {}, {}};
  for (std::size_t i = 1; i <= d; ++i) state.confirmed.push_back(unit_vector(i, d));
  std::sort(state.confirmed.begin(), state.confirmed.end());
  state.pending.push_back(unit_vector(0, d));

  const std::size_t cap = options.max_iterations.value_or(default_cap(oracle));
  std::mt19937_64 rng(options.seed);
  std::size_t calls = 0;

  while (!state.pending.empty()) {
    if (calls >= cap) {
      throw IterationCapExceeded("iteration cap of " + std::to_string(cap) + " reached with " +
                                 std::to_string(state.pending.size()) + " apices pending");
    }
    TropicalPoint a = pick(state.pending, options.queue, rng);
    ++calls;
    if (auto g = next_nondominated(oracle, a)) {
      TropicalPoint h = embed_outcome(*g);
      NewExtremalsTrace trace;
      ApexSet updated = new_extremals(state.generators, state.apices, h, &trace);
      if (updated.contains(a)) {
        throw std::logic_error("apex " + a.to_string() + " survived the insertion of a point below it");
      }
      if (options.on_new_extremals) options.on_new_extremals(state.generators, h, trace);
      state.generators.insert(std::move(h));

      std::erase_if(state.pending, [&](const TropicalPoint& p) { return !updated.contains(p); });
      for (const auto& p : updated.apices()) {
        if (!state.apices.contains(p)) state.pending.push_back(p);
      }
      state.apices = std::move(updated);
    } else {
      state.confirmed.insert(std::upper_bound(state.confirmed.begin(), state.confirmed.end(), a), std::move(a));
    }
    if (options.on_iteration) options.on_iteration(state);
  }

  SolveResult result;
  for (const auto& g : state.generators.generators()) {
    Outcome z;
    for (std::size_t j = 1; j < g.size(); ++j) z.push_back(g[j].value());
    result.nondominated.push_back(std::move(z));
  }
  std::sort(result.nondominated.begin(), result.nondominated.end());
  for (const auto& a : state.apices.nontrivial()) result.local_upper_bounds.push_back(strip_distinguished(a));
  std::sort(result.local_upper_bounds.begin(), result.local_upper_bounds.end());

  result.stats.scalarization_calls = calls;
  result.stats.n = result.nondominated.size();
  result.stats.m = result.local_upper_bounds.size();
  result.stats.upper_bound = upper_bound(static_cast<std::int64_t>(result.stats.n + d), static_cast<std::int64_t>(d));
  result.stats.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

std::string run_report(const RunStats& stats, std::size_t d) {
  std::ostringstream os;
  os << "n = " << stats.n << " nondominated points\n"
     << "m = " << stats.m << " local upper bounds\n"
     << "scalarizations = " << stats.scalarization_calls << " (n + m = " << stats.n + stats.m << ", "
     << (stats.scalarization_calls == stats.n + stats.m ? "ok" : "MISMATCH") << ")\n"
     << "U(n+d,d) = U(" << stats.n + d << "," << d << ") = " << stats.upper_bound << '\n'
     << "wall time = " << stats.wall_time.count() << " s\n";
  return os.str();
}

}  // namespace tropmo
