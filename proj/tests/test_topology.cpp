#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "periodica/error.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/periodic.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset_algebra.hpp"
#include "periodica/topology.hpp"

using namespace periodica;
using oracle::Mask;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

// Opens by definition: every A with BA within A.
std::vector<Mask> opens_by_definition(const FiniteMagma& x, Mask b) {
  std::vector<Mask> out;
  for (Mask a = 0; a <= oracle::full(x); ++a) {
    if ((oracle::mul(x, b, a) & ~a) == 0) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("neighborhoods") {
  FiniteMagma z6 = cyclic(6);
  auto two = minimal_neighborhoods(z6, Subset::of(6, {2}));
  CHECK(two[1] == Subset::of(6, {1, 3, 5}));
  CHECK(two[0] == Subset::of(6, {0, 2, 4}));
  auto one = minimal_neighborhoods(z6, Subset::of(6, {1}));
  for (const Subset& s : one) CHECK(s == z6.whole());
  auto none = minimal_neighborhoods(z6, Subset(6));
  for (Element v = 0; v < 6; ++v) CHECK(none[v] == z6.singleton(v));
}

TEST_CASE("open sets and counts") {
  FiniteMagma z6 = cyclic(6);
  AlexandrovTopology t = build_topology(z6, Subset::of(6, {2}));
  CHECK(is_open(t, Subset::of(6, {0, 2, 4})));
  CHECK_FALSE(is_open(t, Subset::of(6, {0, 1})));
  CHECK(is_open(t, Subset(6)));
  CHECK(count_opens(t) == 4);
  CHECK(count_opens(build_topology(z6, Subset::of(6, {1}))) == 2);
  CHECK(count_opens(build_topology(z6, Subset(6))) == 64);

  for (std::size_t n = 1; n <= 30; ++n) {
    CAPTURE(n);
    FiniteMagma z = cyclic(n);
    AlexandrovTopology c = build_topology(z, Subset::of(n, {n == 1 ? 0U : 1U}));
    CHECK(count_opens(c) == 2);
    CHECK(is_open(c, Subset(n)));
    CHECK(is_open(c, z.whole()));
  }
}

TEST_CASE("counts and open predicate agree with the definition") {
  for (const auto& [name, x] : small_fixtures(8)) {
    CAPTURE(name);
    for (Mask b = 0; b <= oracle::full(x); b = (x.size() > 6 ? 3 * b + 1 : b + 1)) {
      Subset bs = oracle::subset_of(x, b);
      AlexandrovTopology t = build_topology(x, bs);
      auto opens = opens_by_definition(x, b);
      CHECK(count_opens(t) == opens.size());
      for (Mask a = 0; a <= oracle::full(x); ++a) {
        CHECK(is_open(t, oracle::subset_of(x, a)) == std::binary_search(opens.begin(), opens.end(), a));
      }
      // the generated subsemigroup gives the same topology
      if (b != 0) {
        AlexandrovTopology g = build_topology(x, generate_subsemigroup(x, bs));
        CHECK(g.reach == t.reach);
      }
    }
  }
}

TEST_CASE("opens are closed under arbitrary intersections and right products") {
  std::mt19937 rng(7);
  for (const auto& [name, x] : small_fixtures(8)) {
    CAPTURE(name);
    for (Mask b = 1; b <= oracle::full(x); b = 2 * b + 1) {
      auto opens = opens_by_definition(x, b);
      AlexandrovTopology t = build_topology(x, oracle::subset_of(x, b));
      std::uniform_int_distribution<std::size_t> pick(0, opens.size() - 1);
      std::uniform_int_distribution<Mask> any(0, oracle::full(x));
      for (int trial = 0; trial < 40; ++trial) {
        Mask meet = oracle::full(x);
        for (int k = 0; k < 3; ++k) meet &= opens[pick(rng)];
        CHECK(is_open(t, oracle::subset_of(x, meet)));
        Mask a = opens[pick(rng)];
        CHECK(is_open(t, oracle::subset_of(x, oracle::mul(x, a, any(rng)))));
      }
    }
  }
}

TEST_CASE("upper periodic and periodic topologies coincide with a left identity in B") {
  for (const auto& [name, x] : small_fixtures(6)) {
    CAPTURE(name);
    const Subset& ids = x.left_identities();
    if (ids.empty()) continue;
    Element l = ids.first();
    for (Mask b = 0; b <= oracle::full(x); ++b) {
      if (!oracle::has(b, l)) continue;
      for (Mask a = 0; a <= oracle::full(x); ++a) {
        bool upper = (oracle::mul(x, b, a) & ~a) == 0;
        bool periodic = oracle::mul(x, b, a) == a;
        CHECK(upper == periodic);
      }
    }
  }
}

TEST_CASE("periodic topology conditions") {
  FiniteMagma z6 = cyclic(6);
  TopologyConditions c = periodic_topology_conditions(z6, Subset::of(6, {2}));
  CHECK(c.left_cancellative);
  CHECK(c.transfer_each_b);
  AlexandrovTopology p = build_topology(z6, Subset::of(6, {2}), TopologyKind::Periodic);
  CHECK(p.kind == TopologyKind::Periodic);
  CHECK(count_opens(p) == 4);

  FiniteMagma m2 = fixture_m2();
  CHECK(code_of([&] { return build_topology(m2, Subset::of(4, {2}), TopologyKind::Periodic); }) ==
        ErrorCode::NotATopology);
  CHECK(code_of([&] { return periodic_topology_conditions(cyclic(30), Subset::of(30, {1})); }) ==
        ErrorCode::TooLarge);

  // When a periodic topology is accepted, its opens are exactly the periodic sets.
  for (const auto& [name, x] : small_fixtures(6)) {
    CAPTURE(name);
    for (Mask b = 1; b <= oracle::full(x); ++b) {
      Subset bs = oracle::subset_of(x, b);
      TopologyConditions tc = periodic_topology_conditions(x, bs);
      if (!tc.left_cancellative || !tc.transfer_each_b) continue;
      AlexandrovTopology t = build_topology(x, bs, TopologyKind::Periodic);
      for (Mask a = 0; a <= oracle::full(x); ++a) {
        CHECK(is_open(t, oracle::subset_of(x, a)) == (oracle::mul(x, b, a) == a));
      }
    }
  }
}

TEST_CASE("topological semigroups") {
  FiniteMagma z6 = cyclic(6);
  SemigroupTopologyReport r = is_topological_semigroup(z6, Subset::of(6, {0, 2, 4}));
  CHECK(r.b_is_subsemigroup);
  CHECK(r.left_normal);
  CHECK(r.continuous);
  CHECK(r.basis_open);
  CHECK(r.basis_continuous);
  CHECK(is_topological_semigroup(z6, Subset::of(6, {2})).continuous);

  FiniteMagma s3 = fixture_s3();
  SemigroupTopologyReport s = is_topological_semigroup(s3, Subset::of(6, {0, 3}));
  CHECK_FALSE(s.left_normal);
  CHECK_FALSE(s.continuous);
  CHECK(is_topological_semigroup(s3, Subset::of(6, {0})).continuous);

  // Minimal neighborhoods and the B^1 x basis give the same verdict for
  // subsemigroups B.
  for (const auto& [name, x] : small_fixtures(6)) {
    CAPTURE(name);
    for (Mask b = 1; b <= oracle::full(x); ++b) {
      if ((oracle::mul(x, b, b) & ~b) != 0) continue;
      SemigroupTopologyReport t = is_topological_semigroup(x, oracle::subset_of(x, b));
      CHECK(t.basis_open);
      CHECK(t.continuous == t.basis_continuous);
      // left normality is sufficient
      if (t.left_normal) CHECK(t.continuous);
    }
  }
}

TEST_CASE("topological groups") {
  FiniteMagma z6 = cyclic(6);
  GroupTopologyReport r = is_topological_group(z6, Subset::of(6, {0, 2, 4}));
  CHECK(r.normal_subgroup);
  CHECK(r.topological_group);
  CHECK(r.cosets.size() == 2);
  CHECK(is_topological_group(z6, Subset::of(6, {2})).topological_group);

  FiniteMagma s3 = fixture_s3();
  GroupTopologyReport s = is_topological_group(s3, Subset::of(6, {0, 3}));
  CHECK_FALSE(s.normal_subgroup);
  CHECK_FALSE(s.topological_group);
  CHECK(s.cosets.size() == 3);
  CHECK(is_topological_group(s3, Subset::of(6, {0})).topological_group);
  CHECK(is_topological_group(s3, Subset::of(6, {0, 1, 2})).topological_group);
  CHECK(code_of([] { return is_topological_group(fixture_m2(), Subset::of(4, {0})); }) == ErrorCode::NotGroup);

  // In a finite group the verdict follows normality of the generated subgroup.
  for (const auto& [name, g] : builder_groups(8)) {
    CAPTURE(name);
    for (Mask h : oracle::subgroups(g)) {
      bool normal = true;
      for (Element v = 0; v < g.size(); ++v) {
        normal = normal && oracle::mul(g, oracle::bit(v), h) == oracle::mul(g, h, oracle::bit(v));
      }
      GroupTopologyReport t = is_topological_group(g, oracle::subset_of(g, h));
      CHECK(t.normal_subgroup == normal);
      CHECK(t.topological_group == normal);
    }
  }
}

TEST_CASE("left normal generators make left opens right open") {
  auto run = [](const FiniteMagma& x) {
    std::size_t checked = 0;
    for (Mask b = 1; b <= oracle::full(x); ++b) {
      bool left_normal = true;
      for (Element v = 0; v < x.size(); ++v) {
        left_normal = left_normal && (oracle::mul(x, oracle::bit(v), b) & ~oracle::mul(x, b, oracle::bit(v))) == 0;
      }
      if (!left_normal) continue;
      for (Mask a : opens_by_definition(x, b)) {
        CHECK((oracle::mul(x, a, b) & ~a) == 0);
        ++checked;
      }
    }
    return checked;
  };
  for (const auto& [name, x] : small_fixtures(6)) {
    CAPTURE(name);
    run(x);
  }
  CHECK(run(fixture_s3()) > 0);
}

TEST_CASE("ideal topology") {
  FiniteMagma l2 = fixture_l2();
  AlexandrovTopology t = ideal_topology(l2);
  CHECK(count_opens(t) == 2);
  FiniteMagma z6 = cyclic(6);
  CHECK(count_opens(ideal_topology(z6)) == 2);
  FiniteMagma m2 = fixture_m2();
  AlexandrovTopology m = ideal_topology(m2);
  CHECK(is_open(m, Subset::of(4, {2, 3})));
  CHECK_FALSE(is_open(m, Subset::of(4, {0})));
}

TEST_CASE("dot export") {
  FiniteMagma z6 = cyclic(6);
  std::string dot = to_dot(build_topology(z6, Subset::of(6, {2})));
  CHECK(dot.starts_with("digraph topology {"));
  CHECK(dot.find("n1 -> n3;") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") == std::string::npos);
  CHECK(dot.ends_with("}\n"));
}
