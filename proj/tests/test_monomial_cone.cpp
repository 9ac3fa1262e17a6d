#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "tropmo/monomial_cone.hpp"
#include "tropmo/verify_oracle.hpp"

using namespace tropmo;
using tropmo::testing::apices;
using tropmo::testing::pt;
using tropmo::testing::pts;

namespace {

GeneratorSet gens(std::size_t d, std::initializer_list<std::string_view> texts) { return GeneratorSet(d, pts(texts)); }

std::vector<TropicalPoint> sorted(std::vector<TropicalPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<TropicalPoint> added_by(const ApexSet& before, const ApexSet& after) {
  std::vector<TropicalPoint> out;
  for (const auto& a : after.apices()) {
    if (!before.contains(a)) out.push_back(a);
  }
  return out;
}

// Apex set of the three-objective knapsack run after the first two insertions.
ApexSet knapsack_apices_after_two() {
  return ApexSet(3, pts({"(0,inf,0,inf)", "(0,inf,inf,0)", "(0,3,3,inf)", "(0,3,inf,3)", "(0,0,inf,inf)"}));
}

}  // namespace

TEST_CASE("ApexSet keeps the trivial generators and normalizes") {
  const ApexSet a(2, pts({"(2,3,inf)", "(0,1,inf)"}));
  CHECK(a.size() == 3);
  CHECK(a.contains(pt("(inf,0,inf)")));
  CHECK(a.contains(pt("(inf,inf,0)")));
  CHECK(a.contains(pt("(0,1,inf)")));
  CHECK(ApexSet::initial(3).size() == 4);
  CHECK_THROWS_AS(ApexSet(2, pts({"(0,-inf,1)"})), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet(2, pts({"(1,0,0)"})), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet(2, pts({"(0,inf,0)"})), std::invalid_argument);
}

TEST_CASE("contains") {
  const auto g = gens(2, {"(0,0,0)", "(0,-3,2)"});
  CHECK(contains(g, pt("(0,1,1)")));
  CHECK_FALSE(contains(g, pt("(0,-4,0)")));
  CHECK(contains(g, pt("(7,8,8)")));
  CHECK_FALSE(contains(g, pt("(7,3,7)")));
  CHECK_THROWS_AS(contains(g, pt("(0,inf,1)")), std::invalid_argument);

  // A generator with support {0} covers everything.
  CHECK(contains(gens(2, {"(0,-inf,-inf)"}), pt("(5,-100,-100)")));
}

TEST_CASE("is_extremal_apex") {
  CHECK_FALSE(is_extremal_apex(pt("(0,3,2,3)"), gens(3, {"(0,3,0,0)", "(0,0,3,3)", "(0,1,2,2)"})));
  CHECK(is_extremal_apex(pt("(0,3,3,inf)"), gens(3, {"(0,3,0,0)", "(0,0,3,3)"})));
  CHECK(is_extremal_apex(pt("(inf,0,inf,inf)"), gens(3, {"(0,3,0,0)"})));
  CHECK(is_extremal_apex(pt("(inf,0,inf,inf)"), GeneratorSet(3)));
  CHECK_THROWS_AS(is_extremal_apex(pt("(0,-inf,1,1)"), GeneratorSet(3)), std::invalid_argument);
}

TEST_CASE("is_extremal_inner") {
  CHECK_FALSE(is_extremal_inner(pt("(0,3,2,3)"), pts({"(0,3,2,inf)", "(0,3,2,3)"})));

  std::vector<TropicalPoint> a = pts({"(0,3,3,inf)", "(0,3,inf,3)", "(0,0,inf,inf)"});
  const ApexSet unit(3);
  for (const auto& e : unit.apices()) a.push_back(e);
  CHECK(is_extremal_inner(pt("(0,0,inf,inf)"), a));

  // Scaled copies normalize to the same point and do not make each other redundant.
  const auto b = pt("(0,1,2,inf)");
  const auto shifted = scalar_shift(ExtendedScalar(5), b);
  CHECK(is_extremal_inner(b, std::vector<TropicalPoint>{b, shifted}));
  CHECK(is_extremal_inner(shifted, std::vector<TropicalPoint>{b, shifted}));

  CHECK(is_extremal_inner(pt("(inf,0,inf,inf)"), a));
}

TEST_CASE("new_extremals: first insertion into the empty cone") {
  const auto before = ApexSet::initial(3);
  const auto after = new_extremals(GeneratorSet(3), before, pt("(0,3,0,0)"));
  CHECK(after == ApexSet(3, pts({"(0,3,inf,inf)", "(0,inf,0,inf)", "(0,inf,inf,0)"})));
}

TEST_CASE("new_extremals: second insertion") {
  const auto before = ApexSet(3, pts({"(0,3,inf,inf)", "(0,inf,0,inf)", "(0,inf,inf,0)"}));
  NewExtremalsTrace trace;
  const auto after = new_extremals(gens(3, {"(0,3,0,0)"}), before, pt("(0,0,3,3)"), &trace);
  CHECK(trace.kept.size() == 5);
  CHECK(trace.removed == pts({"(0,3,inf,inf)"}));
  CHECK(sorted(added_by(before, after)) == sorted(pts({"(0,3,3,inf)", "(0,3,inf,3)", "(0,0,inf,inf)"})));
  CHECK(after == knapsack_apices_after_two());
}

TEST_CASE("new_extremals: insertion of the third nondominated point rejects (0,3,2,3)") {
  const auto before = knapsack_apices_after_two();
  NewExtremalsTrace trace;
  const auto after = new_extremals(gens(3, {"(0,3,0,0)", "(0,0,3,3)"}), before, pt("(0,1,2,2)"), &trace);
  CHECK(trace.kept.size() == 6);
  CHECK(trace.removed == sorted(pts({"(0,3,3,inf)", "(0,3,inf,3)"})));
  bool saw_rejected = false;
  for (const auto& c : trace.candidates) {
    if (c.candidate == pt("(0,3,2,3)")) {
      saw_rejected = true;
      CHECK_FALSE(c.extremal);
    }
  }
  CHECK(saw_rejected);
  CHECK(sorted(added_by(before, after)) ==
        sorted(pts({"(0,1,3,inf)", "(0,1,inf,3)", "(0,3,2,inf)", "(0,3,inf,2)"})));
}

TEST_CASE("new_extremals: a dominated point changes nothing") {
  const auto before = ApexSet(2, pts({"(0,0,inf)", "(0,inf,0)"}));
  const auto after = new_extremals(gens(2, {"(0,0,0)"}), before, pt("(0,1,1)"));
  CHECK(after == before);
}

TEST_CASE("new_extremals rejects malformed h") {
  CHECK_THROWS_AS(new_extremals(GeneratorSet(2), ApexSet::initial(2), pt("(1,0,0)")), std::invalid_argument);
  CHECK_THROWS_AS(new_extremals(GeneratorSet(2), ApexSet::initial(2), pt("(0,inf,0)")), std::invalid_argument);
}

TEST_CASE("complementary cone of a generator set with a -inf entry") {
  const auto g = gens(2, {"(0,1,-inf)", "(0,0,0)", "(0,-3,2)"});
  const auto a = complementary_apices(g);
  CHECK(a == ApexSet(2, pts({"(0,1,0)", "(0,0,2)", "(0,-3,inf)"})));
  CHECK(a.nontrivial().size() == 3);
}

TEST_CASE("irreducible components") {
  const std::vector<Outcome> xy_yz = testing::outcomes({{1, 1, 0}, {0, 1, 1}});
  CHECK(irreducible_components(xy_yz) == apices({"(1,inf,1)", "(inf,1,inf)"}));
  CHECK(irreducible_components(testing::outcomes({{2}})) == apices({"(2)"}));
  CHECK(irreducible_components(testing::outcomes({{0, 0, 0}})).empty());
  CHECK_THROWS_AS(irreducible_components(std::vector<Outcome>{}), std::invalid_argument);
  CHECK_THROWS_AS(irreducible_components(testing::outcomes({{-1, 2}})), std::invalid_argument);

  // <x^2, xy, y^3> = <x, y^3> meet <x^2, y>
  CHECK(irreducible_components(testing::outcomes({{2, 0}, {1, 1}, {0, 3}})) == apices({"(1,3)", "(2,1)"}));
  // Redundant generators do not change the answer.
  CHECK(irreducible_components(testing::outcomes({{2, 0}, {1, 1}, {0, 3}, {3, 3}, {1, 2}})) ==
        apices({"(1,3)", "(2,1)"}));
}

TEST_CASE("irreducible components agree with maximal empty orthants in the positive orthant") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    auto exps = testing::random_cloud(rng, d, 1 + rng() % 6, 0, 4);
    const OutcomeCloud cloud(d, exps);
    std::vector<std::vector<ExtendedScalar>> expected;
    for (auto& a : brute_local_upper_bounds(brute_nondominated(cloud))) {
      if (std::all_of(a.begin(), a.end(), [](const auto& x) { return x > ExtendedScalar(0); })) {
        expected.push_back(a);
      }
    }
    CHECK(irreducible_components(exps) == expected);
  }
}

namespace {

TropicalPoint random_generator(std::mt19937_64& rng, std::size_t d, bool allow_minus_inf) {
  std::vector<ExtendedScalar> c(d + 1, ExtendedScalar(0));
  for (std::size_t j = 1; j <= d; ++j) {
    if (allow_minus_inf && rng() % 6 == 0) {
      c[j] = kMinusInf;
    } else {
      c[j] = ExtendedScalar(static_cast<long>(rng() % 9) - 4);
    }
  }
  return TropicalPoint(c);
}

}  // namespace

TEST_CASE("complement duality on sample grids") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    GeneratorSet g(d);
    const std::size_t count = rng() % 5;
    for (std::size_t k = 0; k < count; ++k) g.insert(random_generator(rng, d, true));
    const auto a = complementary_apices(g);
    const auto nontrivial = a.nontrivial();

    // Grid over [-6, 6]^d with half-integer steps to hit boundaries and gaps.
    std::vector<long> odometer(d, -12);
    while (true) {
      std::vector<ExtendedScalar> c{ExtendedScalar(0)};
      for (long v : odometer) c.emplace_back(Rational(v, 2));
      const TropicalPoint x(c);
      const bool inside = contains(g, x);
      const bool below = std::any_of(nontrivial.begin(), nontrivial.end(),
                                     [&](const TropicalPoint& ap) { return strictly_below(x, ap); });
      CHECK_MESSAGE(inside != below, "x=" << x);
      std::size_t j = 0;
      while (j < d && ++odometer[j] > 12) odometer[j++] = -12;
      if (j == d) break;
    }
  }
}

TEST_CASE("new_extremals chain matches brute-force local upper bounds") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng() % 4;
    const auto points = testing::random_cloud(rng, d, 1 + rng() % 12, -6, 6);
    const auto nd = brute_nondominated(OutcomeCloud(d, points));

    GeneratorSet g(d);
    ApexSet a = ApexSet::initial(d);
    for (const auto& z : nd) {
      NewExtremalsTrace trace;
      const auto h = embed_outcome(z);
      auto next = new_extremals(g, a, h, &trace);
      // Monotonicity: every surviving apex stays.
      for (const auto& kept : trace.kept) CHECK(next.contains(kept));
      // Both extremality tests agree on every candidate.
      std::vector<TropicalPoint> generating = trace.kept;
      for (const auto& c : trace.candidates) generating.push_back(c.candidate);
      for (const auto& c : trace.candidates) CHECK(c.extremal == is_extremal_inner(c.candidate, generating));
      g.insert(h);
      a = std::move(next);
    }

    std::vector<std::vector<ExtendedScalar>> got;
    for (const auto& ap : a.nontrivial()) got.push_back(strip_distinguished(ap));
    std::sort(got.begin(), got.end());
    CHECK(got == brute_local_upper_bounds(nd));

    // Every finite apex coordinate is a coordinate value of some point of N.
    for (const auto& ap : got) {
      for (std::size_t j = 0; j < d; ++j) {
        if (!ap[j].is_finite()) continue;
        CHECK(std::any_of(nd.begin(), nd.end(), [&](const Outcome& z) { return z[j] == ap[j].value(); }));
      }
    }
  }
}
