// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria (capped at 1).
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "periodica/error.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/periodic.hpp"
#include "periodica/real_set.hpp"
#include "periodica/representation.hpp"
#include "periodica/solver.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset_algebra.hpp"
#include "periodica/topology.hpp"
#include "real_oracles.hpp"

using namespace periodica;
using oracle::Mask;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
  // Keeps the first failure message.
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

std::string list(const FiniteMagma& x, Mask m) { return oracle::subset_of(x, m).to_list(); }

Mask generated(const FiniteMagma& x, Mask b) {
  Mask s = b;
  for (;;) {
    Mask next = s | oracle::mul(x, s, s);
    if (next == s) return s;
    s = next;
  }
}

// 1. Factor subgroups of F3 and M2.
Verdict factor_subgroups() {
  Verdict v;
  FiniteMagma f3 = fixture_f3();
  Subset u = maximal_subgroup(f3, *f3.identity());
  v.require(f3.size() == 27, "|F3| = " + std::to_string(f3.size()));
  v.require(u.count() == 6, "|U(F3)| = " + std::to_string(u.count()));
  v.require(!is_left_factor_subgroup(f3, u), "U(F3) accepted as a left factor subgroup");
  FiniteMagma m2 = fixture_m2();
  Subset um = maximal_subgroup(m2, *m2.identity());
  v.require(um == Subset::of(4, {0, 1}), "U(M2) = " + um.to_list());
  v.require(is_left_factor_subgroup(m2, um), "U(M2) rejected");
  v.require(right_transversal(m2, um).count() == 2, "M2 transversal size " + std::to_string(right_transversal(m2, um).count()));
  // the transversal really is one: U*D = M2 directly
  Subset d = right_transversal(m2, um);
  v.require(product(m2, um, d) == m2.whole() && is_direct(m2, um, d), "U*D is not a direct cover of M2");
  if (v.ok) v.detail = "|F3|=27 |U|=6 not a factor; M2 factor with |D|=2";
  return v;
}

// 2. The {1}-generated topology on Z_n has two opens.
Verdict indiscrete_cyclic() {
  Verdict v;
  for (std::size_t n = 1; n <= 30; ++n) {
    FiniteMagma z = cyclic(n);
    AlexandrovTopology t = build_topology(z, z.singleton(n == 1 ? 0 : 1));
    v.require(count_opens(t) == 2, "Z" + std::to_string(n) + " count " + count_opens(t).get_str());
    // 1 + A is A rotated by one place
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    auto rotate = [&](std::uint64_t a) { return ((a << 1) | (a >> (n - 1))) & full; };
    std::uint64_t limit = n <= 16 ? full : 4096;
    std::size_t opens = 0;
    for (std::uint64_t k = 0; k <= limit; ++k) {
      std::uint64_t a = n <= 16 ? k : (k * 0x9E3779B97F4A7C15ULL) & full;
      if (k == limit && n > 16) a = full;
      bool open = (rotate(a) & ~a) == 0;
      opens += open;
      v.require(is_open(t, Subset::from_bits(n, a)) == open, "Z" + std::to_string(n) + " disagrees on " + std::to_string(a));
    }
    if (n <= 16) v.require(opens == 2, "Z" + std::to_string(n) + " has " + std::to_string(opens) + " opens by definition");
  }
  if (v.ok) v.detail = "Z_1..Z_30 have 2 opens; definition agrees (exhaustive to n=16)";
  return v;
}

// 3. Periodic sets under a factor subgroup are the H*D.
Verdict coset_census() {
  Verdict v;
  auto run = [&](const std::string& name, const FiniteMagma& x, Mask h, std::size_t expect) {
    Subset tr = right_transversal(x, oracle::subset_of(x, h));
    Mask t = oracle::mask_of(tr);
    std::vector<Mask> generated_sets, periodic;
    for (Mask d = t;; d = (d - 1) & t) {
      generated_sets.push_back(oracle::mul(x, h, d));
      if (d == 0) break;
    }
    std::sort(generated_sets.begin(), generated_sets.end());
    for (Mask a = 0; a <= oracle::full(x); ++a) {
      if (oracle::mul(x, h, a) == a) periodic.push_back(a);
      v.require(is_periodic(x, oracle::subset_of(x, a), oracle::subset_of(x, h)) == (oracle::mul(x, h, a) == a),
                name + " library periodicity differs at " + list(x, a));
    }
    v.require(generated_sets == periodic, name + ": periodic sets are not the H*D");
    v.require(periodic.size() == expect, name + " count " + std::to_string(periodic.size()));
  };
  run("M2", fixture_m2(), 0b0011, 4);
  run("Z6", cyclic(6), 0b010101, 4);
  if (v.ok) v.detail = "M2/U: 4, Z6/{0,2,4}: 4 = 2^index";
  return v;
}

// 4. Kernel, upper kernel, summand n A and the complement form agree.
Verdict kernel_closed_form() {
  Verdict v;
  std::uint64_t cases = 0;
  for (const auto& [name, x] : small_fixtures(8)) {
    for (Mask h : oracle::left_subgroups(x)) {
      Subset hs = oracle::subset_of(x, h);
      for (Mask a = 0; a <= oracle::full(x); ++a) {
        Subset as = oracle::subset_of(x, a);
        Mask pk = oracle::periodic_kernel(x, a, h);
        Mask comp = oracle::full(x) & ~oracle::mul(x, h, oracle::full(x) & ~a);
        bool ok = oracle::upper_kernel(x, a, h) == pk && (oracle::summand(x, a, h) & a) == pk && comp == pk &&
                  oracle::mask_of(periodic_kernel(x, as, hs)) == pk &&
                  oracle::mask_of(upper_periodic_kernel(x, as, hs)) == pk &&
                  oracle::mask_of(summand(x, as, hs) & as) == pk && oracle::mask_of(summand_closed_form(x, as, hs)) == pk;
        v.require(ok, name + " B=" + list(x, h) + " A=" + list(x, a));
        ++cases;
      }
    }
  }
  if (v.ok) v.detail = std::to_string(cases) + " (B, A) pairs, no discrepancy";
  return v;
}

// 5. In a finite group BA within A iff <B> A = A.
Verdict group_upper_periodic() {
  Verdict v;
  std::uint64_t cases = 0;
  for (const auto& [name, g] : builder_groups(8)) {
    for (Mask b = 1; b <= oracle::full(g); ++b) {
      Mask h = generated(g, b);
      Subset bs = oracle::subset_of(g, b);
      v.require(oracle::mask_of(*generate_subgroup(g, bs)) == h, name + " generated subgroup of " + list(g, b));
      for (Mask a = 0; a <= oracle::full(g); ++a) {
        bool upper = (oracle::mul(g, b, a) & ~a) == 0;
        bool periodic = oracle::mul(g, h, a) == a;
        v.require(upper == periodic, name + " B=" + list(g, b) + " A=" + list(g, a));
        v.require(is_upper_periodic(g, oracle::subset_of(g, a), bs) == upper, name + " library disagrees");
        ++cases;
      }
    }
  }
  if (v.ok) v.detail = std::to_string(cases) + " (B, A) pairs over groups of order <= 8";
  return v;
}

// 6. Positive subsets against partition enumeration.
Verdict positive_partitions() {
  Verdict v;
  std::ostringstream counts;
  for (const auto& [n, expect] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 4}, {7, 8}, {8, 8}}) {
    FiniteMagma g = cyclic(n);
    Mask g2 = 0;
    for (Element x = 0; x < n; ++x) {
      if (g.op(x, x) == 0) g2 |= oracle::bit(x);
    }
    std::vector<Mask> by_definition;
    for (Mask b = 0; b <= oracle::full(g); ++b) {
      Mask inv = oracle::inverse_in_group(g, b);
      if ((b & g2) == 0 && (b & inv) == 0 && (b | inv | g2) == oracle::full(g)) by_definition.push_back(b);
    }
    std::vector<Mask> listed;
    for (const PositivePartition& p : enumerate_positive_partitions(g)) listed.push_back(oracle::mask_of(p.positive));
    std::sort(listed.begin(), listed.end());
    v.require(listed == by_definition, "Z" + std::to_string(n) + " enumeration differs");
    for (Mask b = 0; b <= oracle::full(g); ++b) {
      bool expected = std::binary_search(by_definition.begin(), by_definition.end(), b);
      v.require(is_positive_subset(g, oracle::subset_of(g, b)) == expected, "Z" + std::to_string(n) + " criterion at " + list(g, b));
    }
    v.require(by_definition.size() == expect, "Z" + std::to_string(n) + " count " + std::to_string(by_definition.size()));
    v.require(oracle::mask_of(g_two(g)) == g2, "Z" + std::to_string(n) + " involutions");
    counts << " Z" << n << ":" << by_definition.size();
  }
  if (v.ok) v.detail = "counts" + counts.str();
  return v;
}

// 7. bb D u B^1 E is upper B-periodic iff B is closed, as literally stated:
// every left subgroup bb, nonempty B within bb, nonempty E anti
// bb*-transference, any D with the two halves disjoint.
Verdict generated_representation() {
  Verdict v;
  std::uint64_t cases = 0, mismatches = 0, mismatches_periodic = 0;
  std::string first;
  for (const auto& [name, x] : std::vector<NamedMagma>{{"M2", fixture_m2()}, {"Z6", cyclic(6)}}) {
    Mask top = oracle::full(x);
    for (Mask h : oracle::left_subgroups(x)) {
      Element one = oracle::identity_of(x, h);
      Mask h_star = h & ~oracle::bit(one);
      for (Mask b = h; b != 0; b = (b - 1) & h) {
        bool closed = (oracle::mul(x, b, b) & ~b) == 0;
        Mask b1 = b | oracle::bit(one);
        for (Mask e = 1; e <= top; ++e) {
          if ((e & oracle::mul(x, h_star, e)) != 0) continue;
          Mask free_half = oracle::mul(x, b1, e);
          for (Mask d = 0; d <= top; ++d) {
            Mask kernel_half = oracle::mul(x, h, d);
            if ((kernel_half & free_half) != 0) continue;
            Mask a = kernel_half | free_half;
            Mask generated_a = oracle::mask_of(generate_upper_periodic(x, oracle::subset_of(x, h), oracle::subset_of(x, b),
                                                                       oracle::subset_of(x, d), oracle::subset_of(x, e)));
            Mask ba = oracle::mul(x, b, a);
            bool upper = (ba & ~a) == 0;
            ++cases;
            if (closed) v.require(generated_a == a, name + " generate_upper_periodic differs");
            if (upper == closed) continue;
            ++mismatches;
            mismatches_periodic += ba == a;
            if (first.empty()) {
              first = name + " bb=" + list(x, h) + " B=" + list(x, b) + " D=" + list(x, d) + " E=" + list(x, e) +
                      " A=" + list(x, a);
            }
          }
        }
      }
    }
  }
  v.require(mismatches == 0, std::to_string(mismatches) + "/" + std::to_string(cases) +
                                 " mismatches, all with BA = A (" + std::to_string(mismatches_periodic) +
                                 "); first: " + first);
  if (v.ok) v.detail = std::to_string(cases) + " cases";
  return v;
}

// Left multiplication closure of {y} under B.
Mask neighborhood(const FiniteMagma& x, Mask b, Element y) {
  Mask n = oracle::bit(y);
  for (;;) {
    Mask next = n | oracle::mul(x, b, n);
    if (next == n) return n;
    n = next;
  }
}

bool continuous_by_definition(const FiniteMagma& x, Mask b) {
  for (Element p = 0; p < x.size(); ++p) {
    for (Element q = 0; q < x.size(); ++q) {
      Mask lhs = oracle::mul(x, neighborhood(x, b, p), neighborhood(x, b, q));
      if ((lhs & ~neighborhood(x, b, x.op(p, q))) != 0) return false;
    }
  }
  return true;
}

// 8. Topological semigroup and group verdicts.
Verdict topology_verdicts() {
  Verdict v;
  FiniteMagma z6 = cyclic(6);
  Subset two = Subset::of(6, {2});
  v.require(count_opens(build_topology(z6, two)) == 4, "Z6 {2} count");
  v.require(is_topological_semigroup(z6, two).continuous, "Z6 {2} not a topological semigroup");
  v.require(continuous_by_definition(z6, 0b000100), "Z6 {2} direct continuity");
  v.require(is_topological_group(z6, two).topological_group, "Z6 {2} not a topological group");
  FiniteMagma s3 = fixture_s3();
  Subset refl = Subset::of(6, {0, 3});
  v.require(!is_topological_group(s3, refl).topological_group, "S3 {e,(12)} accepted as a topological group");
  v.require(!is_topological_semigroup(s3, refl).continuous, "S3 {e,(12)} library continuity true");
  v.require(!continuous_by_definition(s3, 0b001001), "S3 {e,(12)} direct continuity true");
  if (v.ok) v.detail = "Z6 {2}: 4 opens, continuous, group; S3 {e,(12)}: not continuous";
  return v;
}

// 9. Concentration numbers of the two rays above 5.
Verdict rays() {
  using namespace periodica::real;
  Verdict v;
  UnitPeriodicRealSet open_ray({}, {Cell::interval(ExactReal(5), ExactReal(6), false, true)});
  UnitPeriodicRealSet closed_ray({}, {Cell::interval(ExactReal(5), ExactReal(6), true, false)});
  RayInterval o = coc(open_ray), c = coc(closed_ray);
  Supremum od = delta(open_ray), cd = delta(closed_ray);
  v.require(o.kind == RayKind::OpenRay && o.lo == ExactReal(5), "coc((5,inf)) wrong");
  v.require(c.kind == RayKind::ClosedRay && c.lo == ExactReal(5), "coc([5,inf)) wrong");
  v.require(od.value == ExactReal(6) && od.attained, "delta((5,inf)) wrong");
  v.require(cd.value == ExactReal(6) && !cd.attained, "delta([5,inf)) wrong");
  // direct check of the boundary
  v.require(!real_oracle::concentrates(open_ray, ExactReal(5)), "5 concentrates (5,inf)");
  v.require(real_oracle::concentrates(closed_ray, ExactReal(5)), "5 does not concentrate [5,inf)");
  if (v.ok) v.detail = "(5,inf): delta 6 attained, coc (5,inf); [5,inf): delta 6 not attained, coc [5,inf)";
  return v;
}

// 10. Closed forms for the kernel, free part and start against (A - x) n Z.
Verdict window_formulas() {
  using namespace real_oracle;
  Verdict v;
  std::size_t sets = 0, points = 0;
  for (const UnitPeriodicRealSet& a : random_sets(101, 120, false)) {
    ++sets;
    UnitPeriodicRealSet kernel = periodica::real::pk(a), free = periodica::real::pf(a);
    CellSet start = periodica::real::st(a);
    for (const ExactReal& x : grid(a)) {
      ++points;
      IntegerShifts s = shifts(a, x);
      bool in = membership(a, x);
      bool ok = membership(kernel, x) == s.all && membership(free, x) == (in && !s.all) &&
                start.contains(x) == (in && !s.all && s.min == 0);
      v.require(ok, "discrepancy at x=" + x.to_string());
    }
  }
  if (v.ok) v.detail = std::to_string(sets) + " sets, " + std::to_string(points) + " sample points";
  return v;
}

// 11. Sum-closure criterion against the window oracle.
Verdict sum_closure() {
  using namespace real_oracle;
  Verdict v;
  std::size_t n = 0;
  for (const UnitPeriodicRealSet& a : random_sets(211, 80, true)) {
    ++n;
    v.require(periodica::real::semigroup_dual_check(a).agree(), "criterion and oracle disagree");
  }
  UnitPeriodicRealSet halves({Cell::point(q(0)), Cell::point(q(1, 2))}, {});
  UnitPeriodicRealSet half_nat({}, {Cell::point(q(0)), Cell::point(q(1, 2))});
  UnitPeriodicRealSet mixed({Cell::point(q(0))}, {Cell::point(ExactReal::root(2))});
  v.require(is_semigroup(halves) && is_subgroup(halves), "(1/2)Z");
  v.require(is_semigroup(half_nat) && !is_subgroup(half_nat), "(1/2)Z>=0");
  v.require(!is_semigroup(mixed), "Z u (Z>=0 + sqrt 2)");
  for (const auto* a : {&halves, &half_nat, &mixed}) v.require(semigroup_dual_check(*a).agree(), "known case disagrees");
  if (v.ok) v.detail = std::to_string(n) + " random point sets agree; known cases correct";
  return v;
}

// 12. Equation solvers against enumeration of all Y.
Verdict solvers() {
  Verdict v;
  std::uint64_t eq_cases = 0, split_cases = 0;
  for (const auto& [name, x] : small_fixtures(12)) {
    Mask top = oracle::full(x);
    bool exhaustive = x.size() <= 5;
    auto pick = [&](Mask m, unsigned salt) { return exhaustive || ((m + salt) * 2654435761U) % 61 < 2; };
    for (Mask b = 0; b <= top; ++b) {
      if (!pick(b, 1)) continue;
      Subset bs = oracle::subset_of(x, b);
      for (Mask a = 0; a <= top; ++a) {
        if (!pick(a, 7)) continue;
        std::vector<Mask> expect;
        for (Mask y = 0; y <= top; ++y) {
          if (oracle::mul(x, b, y) == a) expect.push_back(y);
        }
        std::vector<Mask> got;
        for (const Subset& y : solve_equation(x, bs, oracle::subset_of(x, a))) got.push_back(oracle::mask_of(y));
        v.require(got == expect, name + " equation B=" + list(x, b) + " A=" + list(x, a));
        Mask sigma = 0;
        for (Element p = 0; p < x.size(); ++p) {
          if ((oracle::mul(x, b, oracle::bit(p)) & ~a) == 0) sigma |= oracle::bit(p);
        }
        v.require(oracle::mask_of(solve_upper(x, bs, oracle::subset_of(x, a)).top) == sigma,
                  name + " summand B=" + list(x, b) + " A=" + list(x, a));
        ++eq_cases;
      }
    }
    for (Mask bb : oracle::left_subgroups(x)) {
      for (Mask b = 0; b <= top; ++b) {
        if (!pick(b, 3)) continue;
        Mask d = (b * 5 + 1) & top;
        Mask fixed = oracle::mul(x, bb, d);
        for (Mask a = 0; a <= top; ++a) {
          if (!pick(a, 11)) continue;
          std::vector<Mask> expect;
          for (Mask y = 0; y <= top; ++y) {
            Mask left = fixed | oracle::mul(x, b, y);
            if ((left & y) == 0 && (left | y) == a) expect.push_back(y);
          }
          std::vector<Mask> got;
          SplitSolutions s = solve_split(x, oracle::subset_of(x, bb), oracle::subset_of(x, b), oracle::subset_of(x, d),
                                         oracle::subset_of(x, a));
          for (const Subset& y : s.solutions) got.push_back(oracle::mask_of(y));
          v.require(got == expect, name + " split");
          ++split_cases;
        }
      }
    }
  }
  if (v.ok) {
    v.detail = std::to_string(eq_cases) + " equation and " + std::to_string(split_cases) +
               " split inputs, each against all 2^n Y (inputs exhaustive to n=5, sampled above)";
  }
  return v;
}

// 13. Direct factorizations for every divisor.
Verdict factorizations() {
  Verdict v;
  std::size_t pairs = 0;
  for (const auto& [name, g] : builder_groups(16)) {
    for (std::size_t a = 1; a <= g.size(); ++a) {
      if (g.size() % a != 0) continue;
      std::size_t b = g.size() / a;
      try {
        auto [x, y] = search_factorization(g, a, b);
        Mask xm = oracle::mask_of(x), ym = oracle::mask_of(y);
        v.require(oracle::card(xm) == static_cast<int>(a) && oracle::card(ym) == static_cast<int>(b) &&
                      oracle::mul(g, xm, ym) == oracle::full(g),
                  name + " bad factorization for " + std::to_string(a) + "x" + std::to_string(b));
      } catch (const Error& e) {
        v.require(false, name + " " + std::to_string(a) + "x" + std::to_string(b) + ": " + e.what());
      }
      ++pairs;
    }
  }
  if (v.ok) v.detail = std::to_string(pairs) + " divisor pairs over " + std::to_string(builder_groups(16).size()) + " groups";
  return v;
}

// 14. Transversal times subgroup in abelian groups; M2 rejected.
Verdict normal_factor_monoid() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& [name, g] : builder_groups(16)) {
    bool abelian = true;
    for (Element p = 0; p < g.size(); ++p) {
      for (Element q = 0; q < g.size(); ++q) abelian = abelian && g.op(p, q) == g.op(q, p);
    }
    if (!abelian) continue;
    for (Mask h : oracle::subgroups(g)) {
      // cosets, then every choice of one element per coset
      std::vector<Mask> cosets;
      Mask seen = 0;
      for (Element p = 0; p < g.size(); ++p) {
        if (oracle::has(seen, p)) continue;
        Mask c = oracle::mul(g, h, oracle::bit(p));
        cosets.push_back(c);
        seen |= c;
      }
      std::vector<Mask> transversals{0};
      for (Mask c : cosets) {
        std::vector<Mask> next;
        for (Mask t : transversals) {
          for (Element p = 0; p < g.size(); ++p) {
            if (oracle::has(c, p)) next.push_back(t | oracle::bit(p));
          }
        }
        transversals = std::move(next);
      }
      for (Mask t : transversals) {
        NormalFactorMonoidReport r =
            check_normal_factor_monoid(make_factor_context(g, oracle::subset_of(g, h), oracle::subset_of(g, t)));
        bool ok = r.identity_is_subgroup_identity && r.transversal_times_subgroup_direct &&
                  r.transversal_times_subgroup_full && r.subgroup_meets_transversal.has_value();
        v.require(ok, name + " H=" + list(g, h) + " T=" + list(g, t));
        ++checked;
      }
    }
  }
  bool rejected = false;
  try {
    check_normal_factor_monoid(make_factor_context(fixture_m2(), Subset::of(4, {0, 1})));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::PreconditionFailed;
  }
  v.require(rejected, "M2 not rejected");
  if (v.ok) v.detail = std::to_string(checked) + " subgroup/transversal pairs; M2 rejected";
  return v;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 when no bound
  Verdict (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "factor subgroups of F3 and M2", 1, factor_subgroups},
      {2, "{1}-generated topology on Z_n, n <= 30", 1, indiscrete_cyclic},
      {3, "periodic sets under a factor subgroup", 0, coset_census},
      {4, "kernel closed form under left subgroups, n <= 8", 30, kernel_closed_form},
      {5, "upper periodic iff periodic under <B> in groups <= 8", 120, group_upper_periodic},
      {6, "positive subsets on Z5, Z7, Z8", 0, positive_partitions},
      {7, "bb D u B^1 E upper periodic iff BB within B", 0, generated_representation},
      {8, "topological semigroup and group verdicts", 0, topology_verdicts},
      {9, "concentration numbers of the rays above 5", 0, rays},
      {10, "real kernel, free part and start formulas", 0, window_formulas},
      {11, "real sum-closure criterion vs oracle", 0, sum_closure},
      {12, "equation solvers vs brute force", 0, solvers},
      {13, "factorizations for every divisor, groups <= 16", 300, factorizations},
      {14, "transversal-subgroup factorization, abelian groups", 0, normal_factor_monoid},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && c.limit_s > 0 && secs > c.limit_s) {
      v.ok = false;
      v.detail += "; over the time bound";
    }
    failed += !v.ok;
    std::printf("%s %2d %s: %s (%.2f s)\n", v.ok ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
