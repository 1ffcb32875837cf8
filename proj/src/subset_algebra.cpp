#include "periodica/subset_algebra.hpp"

#include <vector>

#include "periodica/error.hpp"
#include "periodica/structure.hpp"

namespace periodica {

Subset product(const FiniteMagma& x, const Subset& a, const Subset& b) {
  x.check(a);
  x.check(b);
  Subset out(x.size());
  a.for_each([&](Element p) { b.for_each([&](Element q) { out.insert(x.op(p, q)); }); });
  return out;
}

Subset inverse_set(const FiniteMagma& g, const Subset& a) {
  g.check(a);
  Subset out(g.size());
  a.for_each([&](Element v) { out.insert(g.inverse(v)); });
  return out;
}

Adjoined adjoin_identity(const FiniteMagma& x, const Subset& b, std::optional<Element> l) {
  x.check(b);
  const Subset& ids = x.left_identities();
  if (l) {
    if (*l >= x.size() || !ids.contains(*l)) {
      fail(ErrorCode::NotLeftIdentity, "element " + std::to_string(*l) + " is not a left identity");
    }
  } else if (ids.count() == 1) {
    l = ids.first();
  } else if (ids.count() > 1) {
    fail(ErrorCode::NotLeftIdentity, "several left identities; pass one explicitly");
  }
  if (l) {
    Subset s = b;
    s.insert(*l);
    return Adjoined{x, std::move(s), *l, false};
  }
  FiniteMagma ext = with_identity(x);
  Subset s(ext.size());
  b.for_each([&](Element v) { s.insert(v); });
  Element one = static_cast<Element>(x.size());
  s.insert(one);
  return Adjoined{std::move(ext), std::move(s), one, true};
}

bool is_direct(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return product(x, a, b).count() == a.count() * b.count();
}

bool is_direct_with_identity(const FiniteMagma& x, const Subset& b, const Subset& e,
                             std::optional<Element> l) {
  Subset prod = product(x, b, e) | e;
  std::size_t factor = b.count() + ((l && b.contains(*l)) ? 0 : 1);
  return prod.count() == factor * e.count();
}

bool is_anti_left_transference(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return !a.intersects(product(x, b, a));
}

const char* symmetry_name(SymmetryKind k) {
  switch (k) {
    case SymmetryKind::Symmetric: return "Symmetric";
    case SymmetryKind::AntiSymmetric: return "AntiSymmetric";
    case SymmetryKind::Neither: return "Neither";
  }
  return "Neither";
}

SymmetryKind symmetry_kind(const FiniteMagma& x, const Subset& b, Element l) {
  Subset inv = canonical_inverse(x, b, l);
  if (inv == b) return SymmetryKind::Symmetric;
  if (!inv.intersects(b)) return SymmetryKind::AntiSymmetric;
  return SymmetryKind::Neither;
}

namespace {

// Exact cover of the group by `count` right translates A*y.
class TranslateCover {
 public:
  TranslateCover(const FiniteMagma& g, const Subset& a)
      : g_(g), a_(a), a_elems_(a.elements()), covered_(g.size()), chosen_(g.size()) {}

  bool solve(std::size_t count, bool force_identity) {
    if (force_identity) {
      Element e = *g_.identity();
      if (!place(e)) return false;
      if (search(count - 1)) return true;
      unplace(e);
      return false;
    }
    return search(count);
  }

  const Subset& chosen() const { return chosen_; }

 private:
  bool place(Element y) {
    Subset t(g_.size());
    for (Element a : a_elems_) t.insert(g_.op(a, y));
    if (t.intersects(covered_)) return false;
    covered_ |= t;
    chosen_.insert(y);
    return true;
  }

  void unplace(Element y) {
    chosen_.erase(y);
    for (Element a : a_elems_) covered_.erase(g_.op(a, y));
  }

  bool search(std::size_t remaining) {
    std::size_t uncovered = g_.size() - covered_.count();
    if (uncovered != remaining * a_elems_.size()) return false;
    if (remaining == 0) return true;
    Element target = covered_.complement().first();
    // target = a*y for some a in A, so y = a^-1 * target.
    for (Element a : a_elems_) {
      Element y = g_.op(g_.inverse(a), target);
      if (chosen_.contains(y) || !place(y)) continue;
      if (search(remaining - 1)) return true;
      unplace(y);
    }
    return false;
  }

  const FiniteMagma& g_;
  Subset a_;
  std::vector<Element> a_elems_;
  Subset covered_;
  Subset chosen_;
};

std::optional<std::pair<Subset, Subset>> search_with(const FiniteMagma& g, std::size_t a,
                                                     std::size_t b, bool normalized) {
  std::size_t n = g.size();
  Element e = *g.identity();
  std::vector<Element> pool;
  for (Element v = 0; v < n; ++v) {
    if (!normalized || v != e) pool.push_back(v);
  }
  std::size_t pick = normalized ? a - 1 : a;
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  while (true) {
    Subset cand(n);
    if (normalized) cand.insert(e);
    for (std::size_t i : idx) cand.insert(pool[i]);
    TranslateCover cover(g, cand);
    if (cover.solve(b, normalized)) return std::make_pair(cand, cover.chosen());
    // next combination
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == pool.size() - pick + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace

std::pair<Subset, Subset> search_factorization(const FiniteMagma& g, std::size_t a, std::size_t b) {
  if (!g.is_group()) fail(ErrorCode::NotGroup, "factorization search needs a group");
  if (a == 0 || b == 0 || a * b != g.size()) {
    fail(ErrorCode::BadFactorization, std::to_string(a) + " * " + std::to_string(b) +
                                          " does not equal the order " + std::to_string(g.size()));
  }
  if (auto r = search_with(g, a, b, true)) return *r;
  if (auto r = search_with(g, a, b, false)) return *r;
  fail(ErrorCode::NotFound, "no direct factorization of sizes " + std::to_string(a) + " and " +
                                std::to_string(b) + " exists");
}

}  // namespace periodica
