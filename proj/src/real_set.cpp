#include "periodica/real_set.hpp"

#include <algorithm>

#include "periodica/error.hpp"

namespace periodica::real {

namespace {

ExactReal whole(const mpz_class& k) { return ExactReal(mpq_class(k)); }

std::vector<ExactReal> points_of(const CellSet& s) {
  std::vector<ExactReal> out;
  for (const Cell& c : s.cells()) out.push_back(c.lo);
  return out;
}

void require_points(const UnitPeriodicRealSet& a, const char* op) {
  if (!a.all_points()) {
    fail(ErrorCode::Unsupported, std::string(op) + " handles point cells only");
  }
}

void require_unmirrored(const UnitPeriodicRealSet& a, const char* op) {
  if (a.mirrored()) {
    fail(ErrorCode::Unsupported, std::string(op) + " needs an upper periodic (unmirrored) set");
  }
}

// Some k >= 0 with x - k in c.
std::optional<mpz_class> free_shift(const Cell& c, const ExactReal& x) {
  mpz_class from = (x - c.hi).floor();
  mpz_class to = (x - c.lo).floor();
  if (from < 0) from = 0;
  for (mpz_class k = from; k <= to; ++k) {
    if (c.contains(x - whole(k))) return k;
  }
  return std::nullopt;
}

bool in_free_part(const CellSet& e, const ExactReal& x) {
  for (const Cell& c : e.cells()) {
    if (free_shift(c, x)) return true;
  }
  return false;
}

}  // namespace

UnitPeriodicRealSet::UnitPeriodicRealSet(std::vector<Cell> d, std::vector<Cell> e, bool mirrored)
    : mirrored_(mirrored) {
  auto bad = [](const std::string& why) { fail(ErrorCode::InvalidInput, why); };
  for (const Cell& c : d) {
    if (c.is_empty()) bad("empty cell in D");
    auto top = c.hi <=> ExactReal(1);
    if (c.lo < ExactReal(0) || top > 0 || (top == 0 && c.hi_closed)) bad("D must lie in [0,1)");
  }
  for (const Cell& c : e) {
    if (c.is_empty()) bad("empty cell in E");
    if (c.self_translates()) bad("an E cell contains two points an integer apart");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (!intersect(d[i], d[j]).is_empty()) bad("D cells overlap");
    }
  }
  std::vector<CellSet> fracs;
  for (const Cell& c : e) fracs.push_back(CellSet({c}).frac_image());
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (!intersect(e[i], e[j]).is_empty()) bad("E cells overlap");
      if (fracs[i].intersects(fracs[j])) bad("two E cells are integer translates of each other");
    }
  }
  d_ = CellSet(std::move(d));
  e_ = CellSet(std::move(e));
  if (e_.frac_image().intersects(d_)) bad("E meets Z + D");
}

bool membership(const UnitPeriodicRealSet& a, const ExactReal& x0) {
  ExactReal x = a.mirrored() ? -x0 : x0;
  if (a.d().contains(x.frac())) return true;
  return in_free_part(a.e(), x);
}

CellSet window_cells(const UnitPeriodicRealSet& a, const ExactReal& lo, const ExactReal& hi) {
  std::vector<Cell> out;
  mpz_class from = lo.floor() - 1;
  mpz_class to = hi.floor() + 1;
  for (mpz_class k = from; k <= to; ++k) {
    for (const Cell& c : a.d().cells()) out.push_back(c.shifted(whole(k)));
  }
  for (const Cell& c : a.e().cells()) {
    mpz_class first = (lo - c.hi).floor();
    if (first < 0) first = 0;
    mpz_class last = (hi - c.lo).floor() + 1;
    for (mpz_class k = first; k <= last; ++k) out.push_back(c.shifted(whole(k)));
  }
  return CellSet(std::move(out)).intersect(CellSet({Cell{lo, hi, true, true}}));
}

UnitPeriodicRealSet pk(const UnitPeriodicRealSet& a) {
  return UnitPeriodicRealSet(a.d().cells(), {}, a.mirrored());
}

UnitPeriodicRealSet pf(const UnitPeriodicRealSet& a) {
  return UnitPeriodicRealSet({}, a.e().cells(), a.mirrored());
}

CellSet st(const UnitPeriodicRealSet& a) {
  require_unmirrored(a, "st");
  return a.e();
}

Supremum delta(const UnitPeriodicRealSet& a) {
  require_unmirrored(a, "delta");
  if (a.e().empty()) return {SupKind::ZeroConvention, ExactReal(0), false};
  const Cell& top = a.e().last();
  return {SupKind::Finite, top.hi, top.hi_closed};
}

const char* ray_kind_name(RayKind k) {
  switch (k) {
    case RayKind::AllReals: return "AllReals";
    case RayKind::ClosedRay: return "ClosedRay";
    case RayKind::OpenRay: return "OpenRay";
    case RayKind::Empty: return "Empty";
  }
  return "Empty";
}

RayInterval coc(const UnitPeriodicRealSet& a) {
  Supremum s = delta(a);
  if (s.kind == SupKind::ZeroConvention) return {RayKind::AllReals, ExactReal(0)};
  return {s.attained ? RayKind::OpenRay : RayKind::ClosedRay, s.value - ExactReal(1)};
}

UnitPeriodicRealSet summand_zplus(const UnitPeriodicRealSet& a) {
  require_unmirrored(a, "summand");
  return UnitPeriodicRealSet(a.d().cells(), a.e().shifted(ExactReal(-1)).cells());
}

Supremum sigma(const UnitPeriodicRealSet& a) {
  Supremum s = delta(a);
  if (s.kind == SupKind::Finite) s.value -= ExactReal(1);
  return s;
}

SemigroupCheck semigroup_dual_check(const UnitPeriodicRealSet& a) {
  require_points(a, "semigroup check");
  std::vector<ExactReal> ds = points_of(a.d());
  std::vector<ExactReal> es = points_of(a.e());
  auto in_d = [&](const ExactReal& v) { return a.d().contains(v.frac()); };
  auto in_e_any_shift = [&](const ExactReal& v) {
    return std::any_of(es.begin(), es.end(), [&](const ExactReal& e) { return (v - e).is_integer(); });
  };

  SemigroupCheck r{true, true, true};
  for (const auto& d1 : ds) {
    for (const auto& d2 : ds) r.criterion = r.criterion && in_d(d1 + d2);
    for (const auto& e : es) r.criterion = r.criterion && in_d(d1 + e);
  }
  r.shift_agnostic_criterion = r.criterion;
  for (const auto& e1 : es) {
    for (const auto& e2 : es) {
      ExactReal s = e1 + e2;
      bool kernel = in_d(s);
      r.criterion = r.criterion && (kernel || in_free_part(a.e(), s));
      r.shift_agnostic_criterion = r.shift_agnostic_criterion && (kernel || in_e_any_shift(s));
    }
  }

  // Window oracle: integer offsets wide enough to push any sum below E.
  mpz_class reach = 3;
  auto widen = [&](const ExactReal& v) {
    mpz_class need = abs(v.floor()) + 3;
    if (need > reach) reach = need;
  };
  for (const auto& v : ds) widen(v);
  for (const auto& v : es) widen(v);
  auto check = [&](const ExactReal& base, const mpz_class& from, const mpz_class& to) {
    for (mpz_class m = from; m <= to && r.oracle; ++m) {
      r.oracle = membership(a, base + whole(m));
    }
  };
  for (const auto& d1 : ds) {
    for (const auto& d2 : ds) check(d1 + d2, -2 * reach, 2 * reach);
    for (const auto& e : es) check(d1 + e, -2 * reach, 2 * reach);
  }
  for (const auto& e1 : es) {
    for (const auto& e2 : es) check(e1 + e2, 0, 2 * reach);
  }
  return r;
}

bool is_semigroup(const UnitPeriodicRealSet& a) { return semigroup_dual_check(a).criterion; }

bool is_additive_couple(const std::vector<ExactReal>& d, const std::vector<ExactReal>& e) {
  if (d.empty() && e.empty()) return false;
  for (const auto& x : d) {
    if (std::find(e.begin(), e.end(), x) != e.end()) return false;
  }
  std::vector<Cell> dc, ec;
  for (const auto& x : d) dc.push_back(Cell::point(x));
  for (const auto& x : e) ec.push_back(Cell::point(x));
  try {
    return is_semigroup(UnitPeriodicRealSet(dc, ec));
  } catch (const Error& err) {
    if (err.code() == ErrorCode::InvalidInput) return false;
    throw;
  }
}

bool is_subgroup(const UnitPeriodicRealSet& a) {
  require_points(a, "subgroup check");
  if (a.d().empty() || !a.e().empty()) return false;
  std::vector<ExactReal> ds = points_of(a.d());
  for (const auto& x : ds) {
    for (const auto& y : ds) {
      if (!a.d().contains((x - y).frac())) return false;
    }
  }
  return true;
}

const char* real_class_name(RealClass c) {
  switch (c) {
    case RealClass::FirstClass: return "FirstClass";
    case RealClass::SecondClass: return "SecondClass";
    case RealClass::ThirdClass: return "ThirdClass";
  }
  return "ThirdClass";
}

RealClass classify_real(const UnitPeriodicRealSet& a) {
  if (a.d().empty() && a.e().empty()) fail(ErrorCode::EmptySet, "the empty set has no class");
  if (a.e().empty()) return RealClass::FirstClass;
  if (a.d().empty()) return RealClass::SecondClass;
  return RealClass::ThirdClass;
}

UnitPeriodicRealSet construct_mixed(const UnitPeriodicRealSet& h1, const UnitPeriodicRealSet& h2) {
  require_points(h1, "mixed construction");
  require_points(h2, "mixed construction");
  require_unmirrored(h1, "mixed construction");
  require_unmirrored(h2, "mixed construction");
  if (classify_real(h1) != RealClass::FirstClass) {
    fail(ErrorCode::PreconditionFailed, "H1 must be first class (E empty)");
  }
  if (classify_real(h2) != RealClass::SecondClass) {
    fail(ErrorCode::PreconditionFailed, "H2 must be second class (D empty)");
  }
  if (!is_semigroup(h1)) fail(ErrorCode::PreconditionFailed, "H1 is not a semigroup");
  if (!is_semigroup(h2)) fail(ErrorCode::PreconditionFailed, "H2 is not a semigroup");
  std::vector<ExactReal> d1 = points_of(h1.d());
  std::vector<ExactReal> e2 = points_of(h2.e());
  for (const auto& x : e2) {
    for (const auto& y : e2) {
      ExactReal diff = (x - y).frac();
      if (h1.d().contains(diff)) {
        fail(ErrorCode::Clash, diff.to_string() + " lies in H1 and in H2 - H2");
      }
    }
  }
  std::vector<Cell> d;
  for (const auto& x : d1) {
    for (const auto& y : e2) d.push_back(Cell::point((x + y).frac()));
  }
  return UnitPeriodicRealSet(CellSet(std::move(d)).cells(), h2.e().cells());
}

UnitPeriodicRealSet rescale(const UnitPeriodicRealSet& a, const mpq_class& b) {
  if (b == 0) fail(ErrorCode::ZeroModulus, "rescale by zero");
  mpq_class c = a.mirrored() ? mpq_class(-b) : b;
  mpq_class f = abs(c);
  ExactReal step(f);
  UnitPeriodicRealSet body(a.d().cells(), a.e().cells());
  UnitPeriodicRealSet kernel = pk(body);

  bool closed = a.d().shifted(step).frac_image().is_subset_of(a.d());
  if (closed && !a.e().empty()) {
    CellSet moved = a.e().shifted(step);
    closed = moved.is_subset_of(window_cells(body, moved.front().lo, moved.last().hi));
  }
  if (!closed) {
    fail(ErrorCode::NotRepresentable, "the set is not closed under adding " + step.to_string());
  }

  mpq_class inv = 1 / f;
  CellSet d = window_cells(kernel, ExactReal(0), step)
                  .subtract(CellSet({Cell::point(step)}))
                  .scaled(inv);
  CellSet e;
  if (!a.e().empty()) {
    ExactReal lo = a.e().front().lo;
    ExactReal hi = a.e().last().hi + step;
    CellSet here = window_cells(body, lo, hi);
    CellSet before = window_cells(body, lo - step, hi - step).shifted(step);
    e = here.subtract(before).scaled(inv);
  }
  return UnitPeriodicRealSet(d.cells(), e.cells(), c < 0);
}

Projection projections(const UnitPeriodicRealSet& a, const ExactReal& x) {
  require_unmirrored(a, "projection");
  if (!membership(a, x)) fail(ErrorCode::NotInSet, x.to_string() + " is not in A");
  ExactReal fr = x.frac();
  if (a.d().contains(fr)) return {ProjectionKind::Kernel, fr, x.floor()};
  for (const Cell& c : a.e().cells()) {
    if (auto k = free_shift(c, x)) return {ProjectionKind::Free, x - whole(*k), *k};
  }
  fail(ErrorCode::NotInSet, x.to_string() + " is not in A");
}

}  // namespace periodica::real
