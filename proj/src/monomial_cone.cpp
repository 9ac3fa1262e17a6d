#include "tropmo/monomial_cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropmo {

namespace {

void require_dim(const TropicalPoint& p, std::size_t d, const char* what) {
  if (p.size() != d + 1) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(d + 1) + " coordinates, got " +
                                p.to_string());
  }
}

void validate_generator(const TropicalPoint& g, std::size_t d) {
  require_dim(g, d, "generator");
  if (g.contains_plus_inf()) throw std::invalid_argument("generator contains +inf: " + g.to_string());
  if (g[0] != ExtendedScalar(0)) throw std::invalid_argument("generator needs coordinate 0 equal to 0: " + g.to_string());
}

// min over i in [d] of (a_i - h_i); +inf if every term is +inf.
ExtendedScalar min_offset(const TropicalPoint& a, const TropicalPoint& h) {
  ExtendedScalar m = kPlusInf;
  for (std::size_t i = 1; i < a.size(); ++i) m = std::min(m, a[i] - h[i]);
  return m;
}

bool satisfies_new_halfspace(const TropicalPoint& a, const TropicalPoint& h) {
  return a[0] >= min_offset(a, h);
}

// Does g witness extremality of a at coordinate j?
bool touches_at(const TropicalPoint& a, const TropicalPoint& g, std::size_t j, std::span<const std::size_t> inner) {
  const ExtendedScalar at_j = a[j] - g[j];
  if (a[0] - g[0] != at_j) return false;
  for (std::size_t l : inner) {
    if (l != j && !(at_j < a[l] - g[l])) return false;
  }
  return true;
}

}  // namespace

GeneratorSet::GeneratorSet(std::size_t d) : dim_(d) {
  if (d == 0) throw std::invalid_argument("generator set needs d >= 1");
}

GeneratorSet::GeneratorSet(std::size_t d, std::vector<TropicalPoint> generators) : GeneratorSet(d) {
  for (auto& g : generators) insert(std::move(g));
}

void GeneratorSet::insert(TropicalPoint g) {
  validate_generator(g, dim_);
  if (std::find(generators_.begin(), generators_.end(), g) == generators_.end()) generators_.push_back(std::move(g));
}

ApexSet::ApexSet(std::size_t d) : dim_(d) {
  if (d == 0) throw std::invalid_argument("apex set needs d >= 1");
  for (std::size_t i = 1; i <= d; ++i) apices_.push_back(unit_vector(i, d));
  std::sort(apices_.begin(), apices_.end());
}

ApexSet::ApexSet(std::size_t d, std::vector<TropicalPoint> apices) : ApexSet(d) {
  for (auto& a : apices) {
    require_dim(a, d, "apex");
    if (a.contains_minus_inf()) throw std::invalid_argument("apex contains -inf: " + a.to_string());
    if (is_trivial_generator(a)) continue;
    apices_.push_back(normalize(a));
  }
  std::sort(apices_.begin(), apices_.end());
  apices_.erase(std::unique(apices_.begin(), apices_.end()), apices_.end());
}

ApexSet ApexSet::initial(std::size_t d) { return ApexSet(d, {unit_vector(0, d)}); }

std::vector<TropicalPoint> ApexSet::nontrivial() const {
  std::vector<TropicalPoint> out;
  for (const auto& a : apices_) {
    if (!is_trivial_generator(a)) out.push_back(a);
  }
  return out;
}

bool ApexSet::contains(const TropicalPoint& a) const { return std::binary_search(apices_.begin(), apices_.end(), a); }

bool contains(const GeneratorSet& generators, const TropicalPoint& x) {
  require_dim(x, generators.dim(), "contains");
  if (!x.all_finite()) throw std::invalid_argument("contains: point must be real, got " + x.to_string());
  for (const auto& g : generators.generators()) {
    ExtendedScalar bound = kPlusInf;
    for (std::size_t j = 1; j < g.size(); ++j) {
      if (g[j].is_finite()) bound = std::min(bound, x[j] - g[j]);
    }
    if (x[0] - g[0] <= bound) return true;
  }
  return false;
}

bool strictly_below(const TropicalPoint& x, const TropicalPoint& apex) {
  if (x.size() != apex.size()) throw std::invalid_argument("strictly_below: dimension mismatch");
  if (!x.all_finite()) throw std::invalid_argument("strictly_below: point must be real");
  if (apex[0] != ExtendedScalar(0)) throw std::invalid_argument("strictly_below: apex must be normalized");
  const TropicalPoint n = normalize(x);
  for (std::size_t j = 1; j < n.size(); ++j) {
    if (!(n[j] < apex[j])) return false;
  }
  return true;
}

bool is_extremal_apex(const TropicalPoint& a, const GeneratorSet& generators) {
  require_dim(a, generators.dim(), "is_extremal_apex");
  if (a.contains_minus_inf()) throw std::invalid_argument("is_extremal_apex: apex contains -inf: " + a.to_string());
  if (is_trivial_generator(a)) return true;
  if (!a[0].is_finite()) throw std::invalid_argument("is_extremal_apex: apex with infinite coordinate 0 must be trivial");

  std::vector<std::size_t> inner = support(a, Side::kMin);
  inner.erase(inner.begin());  // coordinate 0 is always in the support here
  for (std::size_t j : inner) {
    const auto gens = generators.generators();
    const bool witnessed = std::any_of(gens.begin(), gens.end(), [&](const TropicalPoint& g) {
      return touches_at(a, g, j, inner);
    });
    if (!witnessed) return false;
  }
  return true;
}

bool is_extremal_inner(const TropicalPoint& b, std::span<const TropicalPoint> generating_set) {
  if (is_trivial_generator(b)) return true;
  const TropicalPoint nb = normalize(b);
  for (const auto& a : generating_set) {
    if (a.size() != nb.size()) throw std::invalid_argument("is_extremal_inner: dimension mismatch");
    // a_0 = +inf makes the left side +inf while a's unit coordinate keeps the
    // right side below +inf, so trivial generators never make b redundant.
    if (!a[0].is_finite()) continue;
    const TropicalPoint na = normalize(a);
    if (na == nb) continue;
    bool dominates = true;
    for (std::size_t i = 1; i < na.size() && dominates; ++i) dominates = na[i] >= nb[i];
    if (dominates) return false;
  }
  return true;
}

ApexSet new_extremals(const GeneratorSet& generators, const ApexSet& apices, const TropicalPoint& h,
                      NewExtremalsTrace* trace) {
  const std::size_t d = generators.dim();
  if (apices.dim() != d) throw std::invalid_argument("new_extremals: dimension mismatch");
  validate_generator(h, d);

  GeneratorSet extended = generators;
  extended.insert(h);

  std::vector<TropicalPoint> kept;
  std::vector<TropicalPoint> removed;
  for (const auto& a : apices.apices()) {
    (satisfies_new_halfspace(a, h) ? kept : removed).push_back(a);
  }

  std::map<TropicalPoint, bool> candidates;
  for (const auto& b : kept) {
    const ExtendedScalar offset = min_offset(b, h);
    // Only a trivial b whose unit coordinate meets a -inf entry of h gets
    // here; such a b leaves every coordinate in supp(h) untouched.
    if (offset.is_plus_inf()) continue;
    const ExtendedScalar lambda = -offset;
    const TropicalPoint lifted = scalar_shift(lambda, b);
    for (const auto& c : removed) {
      TropicalPoint candidate = normalize(cw_min(lifted, c));
      if (candidates.contains(candidate)) continue;
      const bool extremal = is_extremal_apex(candidate, extended);
      candidates.emplace(std::move(candidate), extremal);
    }
  }

  std::vector<TropicalPoint> result = kept;
  for (const auto& [candidate, extremal] : candidates) {
    if (extremal) result.push_back(candidate);
  }

  if (trace) {
    trace->kept = kept;
    trace->removed = removed;
    trace->candidates.clear();
    for (const auto& [candidate, extremal] : candidates) trace->candidates.push_back({candidate, extremal});
  }
  return ApexSet(d, std::move(result));
}

ApexSet complementary_apices(const GeneratorSet& generators) {
  GeneratorSet current(generators.dim());
  ApexSet apices = ApexSet::initial(generators.dim());
  for (const auto& g : generators.generators()) {
    apices = new_extremals(current, apices, g);
    current.insert(g);
  }
  return apices;
}

std::vector<std::vector<ExtendedScalar>> irreducible_components(std::span<const Outcome> exponents) {
  if (exponents.empty()) throw std::invalid_argument("zero ideal has no irreducible decomposition here");
  const std::size_t d = exponents.front().size();
  if (d == 0) throw std::invalid_argument("irreducible_components: exponent vectors need d >= 1 entries");
  for (const auto& e : exponents) {
    if (e.size() != d) throw std::invalid_argument("irreducible_components: exponent vectors differ in length");
    for (const auto& v : e) {
      if (v < 0 || v.get_den() != 1) {
        throw std::invalid_argument("irreducible_components: exponents must be nonnegative integers");
      }
    }
  }

  std::vector<Outcome> sorted(exponents.begin(), exponents.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  GeneratorSet current(d);
  ApexSet apices = ApexSet::initial(d);
  for (const auto& e : sorted) {
    TropicalPoint h = embed_outcome(e);
    if (contains(current, h)) continue;  // a multiple of an earlier monomial
    apices = new_extremals(current, apices, h);
    current.insert(std::move(h));
  }

  // Apices with a zero entry bound regions outside the nonnegative orthant;
  // they pair with the implicit generators x_j^0 and carry no component.
  std::vector<std::vector<ExtendedScalar>> out;
  for (const auto& a : apices.nontrivial()) {
    auto entries = strip_distinguished(a);
    const bool positive = std::all_of(entries.begin(), entries.end(), [](const ExtendedScalar& x) {
      return x.is_plus_inf() || x > ExtendedScalar(0);
    });
    if (positive) out.push_back(std::move(entries));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropmo
