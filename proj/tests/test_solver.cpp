#include <doctest.h>

#include "oracles.hpp"
#include "periodica/error.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/periodic.hpp"
#include "periodica/solver.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset_algebra.hpp"

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

std::vector<Mask> masks(const std::vector<Subset>& v) {
  std::vector<Mask> out;
  for (const Subset& s : v) out.push_back(oracle::mask_of(s));
  return out;
}

// Every Y over the whole carrier, in increasing numeric order.
template <typename P>
std::vector<Mask> brute(const FiniteMagma& x, P keep) {
  std::vector<Mask> out;
  for (Mask y = 0; y <= oracle::full(x); ++y) {
    if (keep(y)) out.push_back(y);
  }
  return out;
}

}  // namespace

TEST_CASE("inequality examples") {
  FiniteMagma z6 = cyclic(6);
  Subset even = Subset::of(6, {0, 2, 4});
  SolutionSet up = solve_upper(z6, even, even);
  CHECK(up.top == even);
  CHECK(up.count == 8);
  REQUIRE(up.all.has_value());
  CHECK(up.all->size() == 8);

  FiniteMagma m2 = fixture_m2();
  Subset u = Subset::of(4, {0, 1});
  SolutionSet none = solve_upper(m2, u, Subset::of(4, {2}));
  CHECK(none.top.empty());
  CHECK(none.count == 1);
  CHECK(solve_upper(m2, u, m2.whole()).top == m2.whole());

  CHECK(solve_upper_inside(z6, Subset::of(6, {2}), even).top == even);
  CHECK(solve_upper_inside(m2, u, Subset::of(4, {2, 3})).top == Subset::of(4, {2, 3}));
  CHECK(solve_upper_inside(m2, u, Subset(4)).top.empty());

  SolutionSet sw = solve_sandwich(z6, Subset::of(6, {2}), even);
  CHECK(sw.top == even);
  REQUIRE(sw.all.has_value());
  CHECK(*sw.all == std::vector<Subset>{Subset(6), even});
  CHECK(sw.count == 2);
  CHECK(solve_sandwich(z6, Subset::of(6, {1}), Subset::of(6, {0, 1, 2})).top.empty());
  CHECK(solve_sandwich(z6, Subset(6), z6.whole()).top == z6.whole());
  CHECK(solve_sandwich(z6, Subset(6), z6.whole()).count == 64);
}

TEST_CASE("large solution sets are counted, not listed") {
  FiniteMagma z30 = cyclic(30);
  SolutionSet s = solve_upper(z30, Subset(30), z30.whole());
  CHECK(s.count == mpz_class(1) << 30);
  CHECK_FALSE(s.all.has_value());
  FiniteMagma z70 = cyclic(70);
  SolutionSet big = solve_upper(z70, Subset(70), z70.whole());
  CHECK(big.count.get_str() == "1180591620717411303424");
}

TEST_CASE("inequalities agree with brute force") {
  for (const auto& [name, x] : small_fixtures(6)) {
    CAPTURE(name);
    Mask top = oracle::full(x);
    for (Mask b = 0; b <= top; b = 2 * b + 1) {
      Subset bs = oracle::subset_of(x, b);
      for (Mask a = 0; a <= top; ++a) {
        Subset as = oracle::subset_of(x, a);
        auto upper = brute(x, [&](Mask y) { return (oracle::mul(x, b, y) & ~a) == 0; });
        auto inside = brute(x, [&](Mask y) { return ((oracle::mul(x, b, y) | y) & ~a) == 0; });
        auto sandwich = brute(x, [&](Mask y) { return (oracle::mul(x, b, y) & ~y) == 0 && (y & ~a) == 0; });
        SolutionSet su = solve_upper(x, bs, as);
        SolutionSet si = solve_upper_inside(x, bs, as);
        SolutionSet ss = solve_sandwich(x, bs, as);
        CHECK(masks(*su.all) == upper);
        CHECK(masks(*si.all) == inside);
        CHECK(masks(*ss.all) == sandwich);
        CHECK(su.count == upper.size());
        CHECK(si.count == inside.size());
        CHECK(ss.count == sandwich.size());
        CHECK(oracle::mask_of(su.top) == oracle::summand(x, a, b));
        for (const Subset& y : *ss.all) CHECK(y.is_subset_of(ss.top));
        CHECK(satisfies_sandwich(x, bs, as, ss.top));
        for (const Subset& y : *si.all) CHECK(satisfies_upper_inside(x, bs, as, y));
        for (const Subset& y : *su.all) CHECK(satisfies_upper(x, bs, as, y));
      }
    }
  }
}

TEST_CASE("equation examples") {
  FiniteMagma z6 = cyclic(6);
  Subset even = Subset::of(6, {0, 2, 4});
  std::vector<Subset> sols = solve_equation(z6, even, even);
  std::vector<Subset> expect;
  for_each_subset_of(even, [&](const Subset& y) {
    if (!y.empty()) expect.push_back(y);
  });
  CHECK(sols == expect);
  CHECK(sols.size() == 7);
  FiniteMagma m2 = fixture_m2();
  CHECK(solve_equation(m2, Subset::of(4, {0, 1}), Subset::of(4, {2})).empty());
  CHECK(solve_equation(z6, Subset::of(6, {1}), Subset(6)) == std::vector<Subset>{Subset(6)});
  FiniteMagma z30 = cyclic(30);
  CHECK(code_of([&] { return solve_equation(z30, Subset::of(30, {0}), z30.whole()); }) ==
        ErrorCode::SearchSpaceTooLarge);
}

TEST_CASE("equation agrees with brute force up to twelve elements") {
  for (const auto& [name, x] : small_fixtures(12)) {
    CAPTURE(name);
    Mask top = oracle::full(x);
    std::size_t n = x.size();
    // All B for tiny carriers; for larger ones a deterministic sample.
    std::vector<Mask> bs_list, as_list;
    for (Mask m = 0; m <= top; ++m) {
      if (n <= 4 || (m * 2654435761U) % 97 < 3) bs_list.push_back(m);
      if (n <= 4 || (m * 40503U) % 89 < 2) as_list.push_back(m);
    }
    for (Mask b : bs_list) {
      Subset bs = oracle::subset_of(x, b);
      for (Mask a : as_list) {
        auto expect = brute(x, [&](Mask y) { return oracle::mul(x, b, y) == a; });
        CHECK(masks(solve_equation(x, bs, oracle::subset_of(x, a))) == expect);
      }
    }
  }
}

TEST_CASE("split equation") {
  FiniteMagma m2 = fixture_m2();
  Subset u = Subset::of(4, {0, 1});
  SplitSolutions s = solve_split(m2, u, u, Subset::of(4, {0}), u);
  CHECK(s.solutions == std::vector<Subset>{Subset(4)});
  CHECK(s.unique);

  FiniteMagma z6 = cyclic(6);
  Subset h = Subset::of(6, {0, 3});
  SplitSolutions z = solve_split(z6, h, h, Subset::of(6, {0}), h);
  CHECK(z.solutions == std::vector<Subset>{Subset(6)});

  // bb*D = {0,3}; adding 1 forces B*Y to reach 4, outside A.
  SplitSolutions none = solve_split(z6, h, h, Subset::of(6, {0}), Subset::of(6, {0, 1, 3}));
  CHECK(none.solutions.empty());
  CHECK_FALSE(none.unique);
}

TEST_CASE("split equation agrees with brute force") {
  for (const auto& [name, x] : small_fixtures(5)) {
    CAPTURE(name);
    Mask top = oracle::full(x);
    for (Mask bb : oracle::left_subgroups(x)) {
      for (Mask b = 0; b <= top; b = 2 * b + 1) {
        for (Mask d = 0; d <= top; d += 3) {
          for (Mask a = 0; a <= top; ++a) {
            Mask fixed = oracle::mul(x, bb, d);
            auto expect = brute(x, [&](Mask y) {
              Mask left = fixed | oracle::mul(x, b, y);
              return (left & y) == 0 && (left | y) == a;
            });
            SplitSolutions got = solve_split(x, oracle::subset_of(x, bb), oracle::subset_of(x, b),
                                             oracle::subset_of(x, d), oracle::subset_of(x, a));
            CHECK(masks(got.solutions) == expect);
            CHECK(got.unique == (expect.size() == 1));
          }
        }
      }
    }
  }
}

TEST_CASE("split solutions are unique for a subsemigroup B of a left subgroup") {
  std::size_t multi = 0;
  for (const auto& [name, x] : small_fixtures(8)) {
    CAPTURE(name);
    Mask top = oracle::full(x);
    for (Mask bb : oracle::left_subgroups(x)) {
      Subset bbs = oracle::subset_of(x, bb);
      for (Mask b = bb; b != 0; b = (b - 1) & bb) {
        if ((oracle::mul(x, b, b) & ~b) != 0) continue;
        Subset bs = oracle::subset_of(x, b);
        for (Mask a = 0; a <= top; a += (x.size() > 6 ? 7 : 1)) {
          SplitSolutions s = solve_split(x, bbs, bs, Subset(x.size()), oracle::subset_of(x, a));
          if (s.solutions.size() > 1) ++multi;
        }
      }
    }
  }
  CHECK(multi == 0);
}

TEST_CASE("ideals of Z/12 from inequalities") {
  std::size_t n = 12;
  std::size_t ideals = 0;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    Subset s(n);
    for (Element v = 0; v < n; ++v) {
      if (oracle::has(m, v)) s.insert(v);
    }
    // classical: the multiples of some divisor d of n
    bool classical = false;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Mask multiples = 0;
      for (std::size_t k = 0; k < n; k += d) multiples |= oracle::bit(static_cast<Element>(k));
      classical = classical || multiples == m;
    }
    CHECK(is_ring_ideal_by_inequalities(n, s) == classical);
    ideals += classical;
  }
  CHECK(ideals == 6);
  CHECK_FALSE(is_ring_ideal_by_inequalities(n, Subset(n)));
}
