#include "periodica/solver.hpp"

#include <algorithm>

#include "periodica/error.hpp"
#include "periodica/periodic.hpp"
#include "periodica/subset_algebra.hpp"
#include "periodica/topology.hpp"

namespace periodica {

namespace {

mpz_class power_of_two(std::size_t k) {
  mpz_class r = 1;
  r <<= static_cast<mp_bitcnt_t>(k);
  return r;
}

std::vector<Subset> all_subsets(const Subset& top) {
  std::vector<Subset> out;
  for_each_subset_of(top, [&](const Subset& y) { out.push_back(y); });
  return out;
}

SolutionSet powerset_solutions(SolutionKind kind, Subset top) {
  SolutionSet s{kind, top, power_of_two(top.count()), std::nullopt};
  if (top.count() <= kEnumerateLimit) s.all = all_subsets(top);
  return s;
}

}  // namespace

SolutionSet solve_upper(const FiniteMagma& x, const Subset& b, const Subset& a) {
  return powerset_solutions(SolutionKind::Upper, summand(x, a, b));
}

SolutionSet solve_upper_inside(const FiniteMagma& x, const Subset& b, const Subset& a) {
  return powerset_solutions(SolutionKind::UpperInside, summand(x, a, b) & a);
}

SolutionSet solve_sandwich(const FiniteMagma& x, const Subset& b, const Subset& a) {
  Subset top = upper_periodic_kernel(x, a, b);
  SolutionSet s{SolutionKind::Sandwich, top,
                count_closed_families(minimal_neighborhoods(x, b), top), std::nullopt};
  if (top.count() <= kEnumerateLimit) {
    std::vector<Subset> all;
    for_each_subset_of(top, [&](const Subset& y) {
      if (is_upper_periodic(x, y, b)) all.push_back(y);
    });
    s.all = std::move(all);
  }
  return s;
}

bool satisfies_upper(const FiniteMagma& x, const Subset& b, const Subset& a, const Subset& y) {
  return product(x, b, y).is_subset_of(a);
}

bool satisfies_upper_inside(const FiniteMagma& x, const Subset& b, const Subset& a,
                            const Subset& y) {
  return (product(x, b, y) | y).is_subset_of(a);
}

bool satisfies_sandwich(const FiniteMagma& x, const Subset& b, const Subset& a, const Subset& y) {
  return product(x, b, y).is_subset_of(y) && y.is_subset_of(a);
}

std::vector<Subset> solve_equation(const FiniteMagma& x, const Subset& b, const Subset& a) {
  Subset sigma = summand(x, a, b);
  if (sigma.count() > 22) {
    fail(ErrorCode::SearchSpaceTooLarge,
         "summand has " + std::to_string(sigma.count()) + " elements, limit is 22");
  }
  std::vector<Element> pool = sigma.elements();
  std::vector<Subset> cover;
  for (Element v : pool) cover.push_back(product(x, b, x.singleton(v)));
  // Elements covering more go first so pruning bites early.
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return cover[i].count() > cover[j].count();
  });
  std::vector<Subset> suffix(pool.size() + 1, Subset(x.size()));
  for (std::size_t k = pool.size(); k-- > 0;) suffix[k] = suffix[k + 1] | cover[order[k]];

  std::vector<Subset> out;
  Subset chosen(x.size());
  auto rec = [&](auto&& self, std::size_t k, const Subset& covered) -> void {
    if (!a.is_subset_of(covered | suffix[k])) return;
    if (k == pool.size()) {
      if (covered == a) out.push_back(chosen);
      return;
    }
    self(self, k + 1, covered);
    Element v = pool[order[k]];
    chosen.insert(v);
    self(self, k + 1, covered | cover[order[k]]);
    chosen.erase(v);
  };
  rec(rec, 0, Subset(x.size()));
  std::sort(out.begin(), out.end());
  return out;
}

SplitSolutions solve_split(const FiniteMagma& x, const Subset& bb, const Subset& b,
                           const Subset& d, const Subset& a) {
  if (!x.is_associative()) fail(ErrorCode::NotAssociative, "the carrier is not associative");
  if (x.size() > 20) {
    fail(ErrorCode::SearchSpaceTooLarge, "split search is limited to carriers of size 20");
  }
  Subset fixed = product(x, bb, d);
  Subset must = a - fixed - product(x, b, a);
  Subset free = a - fixed - must;
  SplitSolutions r;
  for_each_subset_of(free, [&](const Subset& extra) {
    Subset y = must | extra;
    Subset left = fixed | product(x, b, y);
    if (!left.intersects(y) && (left | y) == a) r.solutions.push_back(y);
  });
  r.unique = r.solutions.size() == 1;
  return r;
}

bool is_ring_ideal_by_inequalities(std::size_t n, const Subset& ideal) {
  FiniteMagma add = cyclic(n);
  FiniteMagma mul = multiplicative_cyclic(n);
  add.check(ideal);
  if (ideal.empty()) return false;
  return is_upper_periodic(add, ideal, ideal) &&
         product(mul, mul.whole(), ideal).is_subset_of(ideal) &&
         product(mul, ideal, mul.whole()).is_subset_of(ideal) && inverse_set(add, ideal) == ideal;
}

}  // namespace periodica
