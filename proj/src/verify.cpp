#include "periodica/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "periodica/error.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/periodic.hpp"
#include "periodica/real_set.hpp"
#include "periodica/representation.hpp"
#include "periodica/solver.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset_algebra.hpp"
#include "periodica/topology.hpp"

namespace periodica {

namespace {

using real::Cell;
using real::ExactReal;
using real::UnitPeriodicRealSet;

struct Tally {
  VerifyEntry entry;
  Tally(std::string id, std::string fixture) {
    entry.theorem_id = std::move(id);
    entry.fixture = std::move(fixture);
  }
  // `describe` runs only for the first failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++entry.cases_run;
    if (ok) {
      ++entry.cases_passed;
    } else if (!entry.counterexample) {
      entry.counterexample = describe();
    }
  }
};

using Entries = std::vector<VerifyEntry>;

std::uint64_t subset_total(const FiniteMagma& x) { return std::uint64_t{1} << x.size(); }
Subset nth(const FiniteMagma& x, std::uint64_t m) { return Subset::from_bits(x.size(), m); }

std::string sets(std::initializer_list<std::pair<const char*, const Subset*>> named) {
  std::string out;
  for (const auto& [name, s] : named) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + '=' + s->to_list();
  }
  return out;
}

std::vector<Subset> left_subgroups_of(const FiniteMagma& x) {
  std::vector<Subset> out;
  for (std::uint64_t m = 1; m < subset_total(x); ++m) {
    Subset h = nth(x, m);
    if (is_left_subgroup(x, h)) out.push_back(h);
  }
  return out;
}

bool is_abelian(const FiniteMagma& g) {
  for (Element p = 0; p < g.size(); ++p) {
    for (Element q = 0; q < g.size(); ++q) {
      if (g.op(p, q) != g.op(q, p)) return false;
    }
  }
  return true;
}

// Pk = Upk = summand n A = complement of B * complement(A) under left subgroups.
void kernel_closed_form(const VerifyOptions& o, Entries& out) {
  for (const auto& [name, x] : small_fixtures(std::min<std::size_t>(o.max_n, 8))) {
    Tally t("kernel-closed-form", name);
    for (const Subset& h : left_subgroups_of(x)) {
      for (std::uint64_t m = 0; m < subset_total(x); ++m) {
        Subset a = nth(x, m);
        Subset k = periodic_kernel(x, a, h);
        bool ok = upper_periodic_kernel(x, a, h) == k && (summand(x, a, h) & a) == k &&
                  summand_closed_form(x, a, h) == k;
        t.check(ok, [&] { return sets({{"B", &h}, {"A", &a}}); });
      }
    }
    out.push_back(t.entry);
  }
}

// In a finite group BA within A iff the generated subgroup times A is A.
void group_upper_periodic(const VerifyOptions& o, Entries& out) {
  for (const auto& [name, g] : builder_groups(std::min<std::size_t>(o.max_n, 8))) {
    Tally t("group-upper-periodic", name);
    for (std::uint64_t bm = 1; bm < subset_total(g); ++bm) {
      Subset b = nth(g, bm);
      Subset h = *generate_subgroup(g, b);
      for (std::uint64_t m = 0; m < subset_total(g); ++m) {
        Subset a = nth(g, m);
        bool upper = product(g, b, a).is_subset_of(a);
        t.check(upper == (product(g, h, a) == a), [&] { return sets({{"B", &b}, {"A", &a}}); });
      }
    }
    out.push_back(t.entry);
  }
}

// Left periodic sets under a left factor subgroup are exactly H*D for D
// inside the transversal.
void coset_census(const VerifyOptions& o, Entries& out) {
  for (const auto& [name, x] : small_fixtures(std::min<std::size_t>(o.max_n, 8))) {
    Tally t("coset-census", name);
    for (const Subset& h : left_subgroups_of(x)) {
      if (!is_left_factor_subgroup(x, h)) continue;
      Subset tr = right_transversal(x, h);
      std::vector<Subset> generated;
      for_each_subset_of(tr, [&](const Subset& d) { generated.push_back(product(x, h, d)); });
      std::sort(generated.begin(), generated.end());
      std::vector<Subset> periodic;
      for (std::uint64_t m = 0; m < subset_total(x); ++m) {
        Subset a = nth(x, m);
        if (product(x, h, a) == a) periodic.push_back(a);
      }
      bool distinct = std::adjacent_find(generated.begin(), generated.end()) == generated.end();
      t.check(distinct && generated == periodic && periodic.size() == (std::size_t{1} << tr.count()),
              [&] { return sets({{"H", &h}, {"transversal", &tr}}); });
    }
    out.push_back(t.entry);
  }
}

// The positive subset criterion against explicit partition enumeration.
void positive_partitions(const VerifyOptions& o, Entries& out) {
  for (const auto& [name, g] : builder_groups(std::min<std::size_t>(o.max_n, 10))) {
    Tally t("positive-partitions", name);
    PositivePartitions parts = enumerate_positive_partitions(g);
    std::vector<Subset> positives;
    for (const PositivePartition& p : parts) positives.push_back(p.positive);
    std::sort(positives.begin(), positives.end());
    Subset g2 = g_two(g);
    t.check(positives.size() == (std::size_t{1} << ((g.size() - g2.count()) / 2)),
            [&] { return "count " + std::to_string(positives.size()); });
    for (std::uint64_t m = 0; m < subset_total(g); ++m) {
      Subset b = nth(g, m);
      bool listed = std::binary_search(positives.begin(), positives.end(), b);
      t.check(is_positive_subset(g, b) == listed, [&] { return sets({{"B", &b}}); });
    }
    out.push_back(t.entry);
  }
}

void factorization(const VerifyOptions& o, Entries& out) {
  for (const auto& [name, g] : builder_groups(std::min<std::size_t>(o.max_n, 16))) {
    Tally t("factorization", name);
    for (std::size_t a = 1; a <= g.size(); ++a) {
      if (g.size() % a != 0) continue;
      bool ok = false;
      try {
        auto [x, y] = search_factorization(g, a, g.size() / a);
        ok = x.count() == a && y.count() == g.size() / a && is_direct(g, x, y) && product(g, x, y) == g.whole();
      } catch (const Error&) {
        ok = false;
      }
      t.check(ok, [&] { return "divisor " + std::to_string(a); });
    }
    out.push_back(t.entry);
  }
}

void normal_factor_monoid(const VerifyOptions& o, Entries& out) {
  for (const auto& [name, g] : builder_groups(std::min<std::size_t>(o.max_n, 8))) {
    if (!is_abelian(g)) continue;
    Tally t("normal-factor-monoid", name);
    for (std::uint64_t hm = 1; hm < subset_total(g); ++hm) {
      Subset h = nth(g, hm);
      if (!is_subgroup_set(g, h)) continue;
      for (std::uint64_t tm = 1; tm < subset_total(g); ++tm) {
        Subset tr = nth(g, tm);
        if (tr.count() * h.count() != g.size() || product(g, h, tr) != g.whole()) continue;
        NormalFactorMonoidReport r = check_normal_factor_monoid(make_factor_context(g, h, tr));
        bool ok = r.identity_is_subgroup_identity && r.transversal_times_subgroup_direct &&
                  r.transversal_times_subgroup_full && r.subgroup_meets_transversal.has_value();
        t.check(ok, [&] { return sets({{"H", &h}, {"transversal", &tr}}); });
      }
    }
    out.push_back(t.entry);
  }
  Tally m("normal-factor-monoid", "M2 rejected");
  FiniteMagma m2 = fixture_m2();
  bool rejected = false;
  try {
    check_normal_factor_monoid(make_factor_context(m2, Subset::of(4, {0, 1})));
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::PreconditionFailed;
  }
  m.check(rejected, [] { return std::string("M2 accepted"); });
  out.push_back(m.entry);
}

// bb D u B^1 E with E anti bb*-transference and the result not B-periodic:
// upper B-periodic exactly when B is closed under the product.
void subsemigroup_representation(const VerifyOptions& o, Entries& out) {
  std::vector<NamedMagma> fixtures;
  for (auto& f : small_fixtures(std::min<std::size_t>(o.max_n, 6))) {
    if (f.name == "M2" || f.name == "Z6") fixtures.push_back(std::move(f));
  }
  for (const auto& [name, x] : fixtures) {
    Tally t("subsemigroup-representation", name);
    for (const Subset& h : left_subgroups_of(x)) {
      Subset one = x.singleton(*group_identity(x, h));
      Subset h_star = h - one;
      for_each_subset_of(h, [&](const Subset& b) {
        if (b.empty()) return;
        bool closed = product(x, b, b).is_subset_of(b);
        for (std::uint64_t em = 1; em < subset_total(x); ++em) {
          Subset e = nth(x, em);
          if (e.intersects(product(x, h_star, e))) continue;
          Subset free_half = product(x, b | one, e);
          for (std::uint64_t dm = 0; dm < subset_total(x); ++dm) {
            Subset d = nth(x, dm);
            Subset kernel_half = product(x, h, d);
            if (kernel_half.intersects(free_half)) continue;
            Subset a = kernel_half | free_half;
            Subset ba = product(x, b, a);
            if (ba == a) continue;
            t.check(ba.is_subset_of(a) == closed, [&] { return sets({{"bb", &h}, {"B", &b}, {"D", &d}, {"E", &e}}); });
          }
        }
      });
    }
    out.push_back(t.entry);
  }
}

// solve_equation and solve_split against enumeration of every Y.
void solver_brute_force(const VerifyOptions& o, Entries& out) {
  for (const auto& [name, x] : small_fixtures(std::min<std::size_t>(o.max_n, 8))) {
    Tally t("solver-brute-force", name);
    std::uint64_t total = subset_total(x);
    std::uint64_t stride = x.size() <= 4 ? 1 : total / 8 + 1;
    for (std::uint64_t bm = 0; bm < total; bm += stride) {
      Subset b = nth(x, bm);
      for (std::uint64_t am = 0; am < total; am += stride) {
        Subset a = nth(x, am);
        std::vector<Subset> expect;
        for (std::uint64_t y = 0; y < total; ++y) {
          if (product(x, b, nth(x, y)) == a) expect.push_back(nth(x, y));
        }
        t.check(solve_equation(x, b, a) == expect, [&] { return sets({{"B", &b}, {"A", &a}}); });
        Subset top = solve_upper(x, b, a).top;
        Subset sigma(x.size());
        for (Element v = 0; v < x.size(); ++v) {
          if (product(x, b, x.singleton(v)).is_subset_of(a)) sigma.insert(v);
        }
        t.check(top == sigma, [&] { return sets({{"B", &b}, {"A", &a}}); });
      }
    }
    for (const Subset& bb : left_subgroups_of(x)) {
      for (std::uint64_t bm = 0; bm < total; bm += stride) {
        Subset b = nth(x, bm);
        Subset d = nth(x, (bm * 7 + 3) % total);
        for (std::uint64_t am = 0; am < total; am += stride) {
          Subset a = nth(x, am);
          Subset fixed = product(x, bb, d);
          std::vector<Subset> expect;
          for (std::uint64_t ym = 0; ym < total; ++ym) {
            Subset y = nth(x, ym);
            Subset left = fixed | product(x, b, y);
            if (!left.intersects(y) && (left | y) == a) expect.push_back(y);
          }
          t.check(solve_split(x, bb, b, d, a).solutions == expect,
                  [&] { return sets({{"bb", &bb}, {"B", &b}, {"D", &d}, {"A", &a}}); });
        }
      }
    }
    out.push_back(t.entry);
  }
}

// The {1}-generated topology on Z_n is indiscrete.
void cyclic_topology(const VerifyOptions& o, Entries& out) {
  Tally t("cyclic-topology", "Z_1..Z_30");
  std::size_t top = std::max<std::size_t>(std::min<std::size_t>(o.max_n * 2, 30), 1);
  for (std::size_t n = 1; n <= top; ++n) {
    FiniteMagma z = cyclic(n);
    Subset one = z.singleton(n == 1 ? 0 : 1);
    AlexandrovTopology c = build_topology(z, one);
    bool ok = count_opens(c) == 2;
    if (n <= 12) {
      std::size_t opens = 0;
      for (std::uint64_t m = 0; m < subset_total(z); ++m) {
        Subset a = nth(z, m);
        bool open = product(z, one, a).is_subset_of(a);
        opens += open;
        ok = ok && is_open(c, a) == open;
      }
      ok = ok && opens == 2;
    }
    t.check(ok, [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(t.entry);
}

// Random canonical real sets; draws violating the invariants are skipped.
std::vector<UnitPeriodicRealSet> random_real_sets(std::uint64_t seed, std::size_t want, bool points_only) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> twelfth(0, 11), offset(-3, 3), count(0, 3), coin(0, 3);
  auto q = [](long p, long d) { return ExactReal(mpq_class(p, d)); };
  auto frac_value = [&]() {
    if (coin(rng) == 0) return (ExactReal::root(2) * mpq_class(twelfth(rng) + 1, 12)).frac();
    return q(twelfth(rng), 12);
  };
  std::vector<UnitPeriodicRealSet> out;
  while (out.size() < want) {
    std::vector<Cell> d, e;
    int nd = count(rng), ne = count(rng);
    for (int i = 0; i < nd; ++i) {
      ExactReal v = frac_value();
      ExactReal hi = v + q(1, 13);
      if (!points_only && coin(rng) == 0 && hi < q(1, 1)) {
        d.push_back(Cell::interval(v, hi, coin(rng) != 0, coin(rng) == 0));
      } else {
        d.push_back(Cell::point(v));
      }
    }
    for (int i = 0; i < ne; ++i) {
      ExactReal v = frac_value() + q(offset(rng), 1);
      if (!points_only && coin(rng) == 0) {
        e.push_back(Cell::interval(v, v + q(twelfth(rng) + 1, 12), coin(rng) != 0, coin(rng) == 0));
      } else {
        e.push_back(Cell::point(v));
      }
    }
    try {
      out.emplace_back(d, e);
    } catch (const Error&) {
    }
  }
  return out;
}

std::string describe(const UnitPeriodicRealSet& a) {
  std::ostringstream s;
  auto put = [&](const real::CellSet& cs) {
    s << '[';
    for (const Cell& c : cs.cells()) {
      if (c.is_point()) {
        s << ' ' << c.lo.to_string();
      } else {
        s << ' ' << (c.lo_closed ? '[' : '(') << c.lo.to_string() << ',' << c.hi.to_string()
          << (c.hi_closed ? ']' : ')');
      }
    }
    s << " ]";
  };
  s << "D=";
  put(a.d());
  s << " E=";
  put(a.e());
  return s.str();
}

std::vector<ExactReal> sample_grid(const UnitPeriodicRealSet& a) {
  std::vector<ExactReal> base{ExactReal(0), ExactReal(mpq_class(1, 2))};
  for (const auto* cs : {&a.d(), &a.e()}) {
    for (const Cell& c : cs->cells()) {
      base.push_back(c.lo);
      base.push_back(c.hi);
      base.push_back((c.lo + c.hi) * mpq_class(1, 2));
    }
  }
  std::vector<ExactReal> out;
  for (const ExactReal& b : base) {
    for (long k = -10; k <= 10; ++k) out.push_back(b + ExactReal(k));
  }
  return out;
}

// Closed forms for Pk, Pf, St and the projection against (A - x) n Z.
void window_formulas(const VerifyOptions& o, Entries& out) {
  Tally t("window-formulas", "random sets");
  for (const UnitPeriodicRealSet& a : random_real_sets(o.seed, std::max<std::size_t>(o.random_cases, 100), false)) {
    UnitPeriodicRealSet kernel = real::pk(a), free = real::pf(a);
    real::CellSet start = real::st(a);
    bool ok = true;
    std::string where;
    for (const ExactReal& x : sample_grid(a)) {
      bool all = true, any = false;
      long low = 0;
      for (long n = -40; n <= 40; ++n) {
        bool in = membership(a, x + ExactReal(n));
        all = all && in;
        if (in && !any) {
          any = true;
          low = n;
        }
      }
      bool in = membership(a, x);
      bool here = membership(kernel, x) == all && membership(free, x) == (in && !all) &&
                  start.contains(x) == (in && !all && low == 0);
      if (here && in) {
        real::Projection p = real::projections(a, x);
        real::Projection up = real::projections(a, x + ExactReal(1));
        here = all ? p.kind == real::ProjectionKind::Kernel && p.generator == x.frac()
                   : p.kind == real::ProjectionKind::Free && p.generator == x + ExactReal(low) && p.shift == -low &&
                         up.generator == p.generator && up.shift == p.shift + 1;
      }
      if (!here && ok) where = " x=" + x.to_string();
      ok = ok && here;
    }
    t.check(ok, [&] { return describe(a) + where; });
  }
  out.push_back(t.entry);
}

bool concentrates(const UnitPeriodicRealSet& a, const ExactReal& c) {
  for (const auto* cs : {&a.d(), &a.e()}) {
    for (const Cell& cell : cs->cells()) {
      std::vector<ExactReal> at{(cell.lo + cell.hi) * mpq_class(1, 2)};
      if (cell.lo_closed) at.push_back(cell.lo);
      if (cell.hi_closed) at.push_back(cell.hi);
      if (!cell.is_point()) {
        at.push_back(cell.lo + (cell.hi - cell.lo) * mpq_class(1, 1000));
        at.push_back(cell.hi - (cell.hi - cell.lo) * mpq_class(1, 1000));
      }
      for (const ExactReal& v : at) {
        for (long k = 0; k <= 3; ++k) {
          ExactReal x = v + ExactReal(k);
          if (!membership(a, x - ExactReal(mpq_class((x - c).floor())))) return false;
        }
      }
    }
  }
  return true;
}

// The least concentration number sits at delta - 1, attained or not.
void concentration(const VerifyOptions& o, Entries& out) {
  Tally t("concentration", "random sets");
  for (const UnitPeriodicRealSet& a : random_real_sets(o.seed + 1, o.random_cases, false)) {
    real::RayInterval c = real::coc(a);
    bool ok = c.kind != real::RayKind::Empty;
    if (ok && c.kind != real::RayKind::AllReals) {
      ok = c.lo == real::delta(a).value - ExactReal(1) &&
           concentrates(a, c.lo) == (c.kind == real::RayKind::ClosedRay) &&
           concentrates(a, c.lo + ExactReal(mpq_class(1, 2000))) && concentrates(a, c.lo + ExactReal(3)) &&
           !concentrates(a, c.lo - ExactReal(mpq_class(1, 100)));
    }
    t.check(ok, [&] { return describe(a); });
  }
  out.push_back(t.entry);
}

void sum_closure(const VerifyOptions& o, Entries& out) {
  Tally t("sum-closure", "random point sets");
  for (const UnitPeriodicRealSet& a : random_real_sets(o.seed + 2, std::max<std::size_t>(o.random_cases, 50), true)) {
    t.check(real::semigroup_dual_check(a).agree(), [&] { return describe(a); });
  }
  out.push_back(t.entry);
}

void rescale_conjugation(const VerifyOptions& o, Entries& out) {
  Tally t("rescale-conjugation", "random sets");
  const mpq_class factors[] = {2, 3, mpq_class(1, 2), mpq_class(-3, 2), -1, 1};
  for (const UnitPeriodicRealSet& a : random_real_sets(o.seed + 3, o.random_cases, false)) {
    for (const mpq_class& b : factors) {
      UnitPeriodicRealSet s;
      try {
        s = real::rescale(a, b);
      } catch (const Error& e) {
        // Not closed under |b|: nothing to compare.
        if (e.code() == ErrorCode::NotRepresentable) continue;
        throw;
      }
      bool ok = true;
      for (const ExactReal& x : sample_grid(a)) {
        ok = ok && membership(s, x * mpq_class(1 / b)) == membership(a, x);
      }
      t.check(ok, [&] { return describe(a) + " b=" + b.get_str(); });
    }
  }
  out.push_back(t.entry);
}

using Suite = void (*)(const VerifyOptions&, Entries&);

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites{
      {"coset-census", coset_census},
      {"concentration", concentration},
      {"cyclic-topology", cyclic_topology},
      {"factorization", factorization},
      {"group-upper-periodic", group_upper_periodic},
      {"kernel-closed-form", kernel_closed_form},
      {"normal-factor-monoid", normal_factor_monoid},
      {"positive-partitions", positive_partitions},
      {"rescale-conjugation", rescale_conjugation},
      {"solver-brute-force", solver_brute_force},
      {"subsemigroup-representation", subsemigroup_representation},
      {"sum-closure", sum_closure},
      {"window-formulas", window_formulas},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, suite] : registry()) out.push_back(name);
  return out;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& options) {
  VerifyOptions o = options;
  if (const char* cap = std::getenv("PERIODICA_MAX_N")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(cap, &end, 10);
    if (end == cap || *end != '\0') fail(ErrorCode::InvalidInput, "PERIODICA_MAX_N must be a number");
    o.max_n = std::min<std::size_t>(o.max_n, v);
  }
  auto started = std::chrono::steady_clock::now();
  VerifyReport r;
  if (name == "all") {
    for (const auto& [n, suite] : registry()) suite(o, r.entries);
  } else {
    auto it = registry().find(name);
    if (it == registry().end()) fail(ErrorCode::InvalidInput, "unknown suite \"" + name + "\"");
    it->second(o, r.entries);
  }
  // Fixtures where a battery has no admissible inputs are dropped.
  std::erase_if(r.entries, [](const VerifyEntry& e) { return e.cases_run == 0; });
  for (const VerifyEntry& e : r.entries) r.passed = r.passed && !e.counterexample;
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

nlohmann::json report_to_json(const VerifyReport& r, bool with_time) {
  nlohmann::json entries = nlohmann::json::array();
  for (const VerifyEntry& e : r.entries) {
    nlohmann::json j{{"theorem_id", e.theorem_id},
                     {"fixture", e.fixture},
                     {"cases_run", e.cases_run},
                     {"cases_passed", e.cases_passed}};
    j["counterexample"] = e.counterexample ? nlohmann::json(*e.counterexample) : nlohmann::json(nullptr);
    entries.push_back(std::move(j));
  }
  nlohmann::json out{{"entries", std::move(entries)}, {"summary", r.passed ? "pass" : "fail"}};
  if (with_time) out["wall_time_ms"] = r.wall_time_ms;
  return out;
}

std::string report_to_text(const VerifyReport& r, bool with_time) {
  std::ostringstream s;
  for (const VerifyEntry& e : r.entries) {
    s << (e.counterexample ? "FAIL " : "ok   ") << e.theorem_id << " [" << e.fixture << "] " << e.cases_passed << '/'
      << e.cases_run;
    if (e.counterexample) s << "  counterexample: " << *e.counterexample;
    s << '\n';
  }
  s << "summary: " << (r.passed ? "pass" : "fail") << '\n';
  if (with_time) s << "wall time: " << static_cast<long>(r.wall_time_ms) << " ms\n";
  return s.str();
}

}  // namespace periodica
