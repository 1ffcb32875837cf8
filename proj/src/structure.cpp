#include "periodica/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "periodica/error.hpp"

namespace periodica {

namespace {

Subset product_of(const FiniteMagma& x, const Subset& a, const Subset& b) {
  Subset out(x.size());
  a.for_each([&](Element p) { b.for_each([&](Element q) { out.insert(x.op(p, q)); }); });
  return out;
}

void require_associative(const FiniteMagma& x) {
  if (!x.is_associative()) fail(ErrorCode::NotAssociative, "the carrier is not associative");
}

}  // namespace

bool is_associative(const FiniteMagma& x) { return x.is_associative(); }

Subset left_identities(const FiniteMagma& x) { return x.left_identities(); }

bool is_left_cancellative_over(const FiniteMagma& x, const Subset& by) {
  x.check(by);
  bool ok = true;
  std::vector<bool> seen(x.size());
  by.for_each([&](Element b) {
    if (!ok) return;
    std::fill(seen.begin(), seen.end(), false);
    for (Element y = 0; y < x.size(); ++y) {
      Element v = x.op(b, y);
      if (seen[v]) {
        ok = false;
        return;
      }
      seen[v] = true;
    }
  });
  return ok;
}

Subset generate_subsemigroup(const FiniteMagma& x, const Subset& gens) {
  x.check(gens);
  if (gens.empty()) fail(ErrorCode::EmptyGenerator, "cannot generate from the empty set");
  require_associative(x);
  Subset closure = gens;
  std::vector<Element> list = gens.elements();
  auto add = [&](Element v) {
    if (!closure.contains(v)) {
      closure.insert(v);
      list.push_back(v);
    }
  };
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(x.op(list[i], list[j]));
      add(x.op(list[j], list[i]));
    }
  }
  return closure;
}

std::optional<Element> group_identity(const FiniteMagma& x, const Subset& h) {
  x.check(h);
  std::optional<Element> found;
  h.for_each([&](Element e) {
    if (found) return;
    bool ok = true;
    h.for_each([&](Element a) { ok = ok && x.op(e, a) == a && x.op(a, e) == a; });
    if (ok) found = e;
  });
  return found;
}

bool is_subgroup_set(const FiniteMagma& x, const Subset& h) {
  x.check(h);
  if (h.empty() || !product_of(x, h, h).is_subset_of(h)) return false;
  auto e = group_identity(x, h);
  if (!e) return false;
  bool ok = true;
  h.for_each([&](Element a) {
    if (!ok) return;
    bool inv = false;
    h.for_each([&](Element b) { inv = inv || (x.op(a, b) == *e && x.op(b, a) == *e); });
    ok = inv;
  });
  if (ok && !x.is_associative()) {
    h.for_each([&](Element a) {
      h.for_each([&](Element b) {
        h.for_each([&](Element c) { ok = ok && x.op(x.op(a, b), c) == x.op(a, x.op(b, c)); });
      });
    });
  }
  return ok;
}

Subset maximal_subgroup(const FiniteMagma& x, Element e) {
  require_associative(x);
  if (x.op(e, e) != e) fail(ErrorCode::InvalidInput, "maximal_subgroup needs an idempotent");
  Subset local(x.size());
  for (Element a = 0; a < x.size(); ++a) {
    if (x.op(e, a) == a && x.op(a, e) == a) local.insert(a);
  }
  Subset units(x.size());
  local.for_each([&](Element a) {
    bool inv = false;
    local.for_each([&](Element b) { inv = inv || (x.op(a, b) == e && x.op(b, a) == e); });
    if (inv) units.insert(a);
  });
  return units;
}

std::optional<Subset> generate_subgroup(const FiniteMagma& x, const Subset& gens) {
  x.check(gens);
  if (gens.empty()) fail(ErrorCode::EmptyGenerator, "cannot generate from the empty set");
  require_associative(x);
  // Every subgroup sits inside the maximal subgroup of its identity, and a
  // finite subsemigroup of a finite group is a subgroup.
  for (Element e = 0; e < x.size(); ++e) {
    if (x.op(e, e) != e) continue;
    if (gens.is_subset_of(maximal_subgroup(x, e))) {
      Subset g = generate_subsemigroup(x, gens);
      if (!is_subgroup_set(x, g)) throw std::logic_error("closure inside a group is not a group");
      return g;
    }
  }
  return std::nullopt;
}

std::vector<Subset> inverses_of(const FiniteMagma& x, const Subset& b_set, Element l) {
  x.check(b_set);
  if (l >= x.size() || !x.left_identities().contains(l)) {
    fail(ErrorCode::NotLeftIdentity, "element " + std::to_string(l) + " is not a left identity");
  }
  std::vector<Element> bs = b_set.elements();
  std::vector<Subset> cand;
  for (Element b : bs) {
    Subset c(x.size());
    for (Element y = 0; y < x.size(); ++y) {
      if (x.op(y, b) == l) c.insert(y);
    }
    if (c.empty()) {
      fail(ErrorCode::NotLeftInvertible, "element " + x.label(b) + " has no left inverse");
    }
    cand.push_back(std::move(c));
  }
  auto hits_all = [&](const Subset& y) {
    for (const Subset& c : cand) {
      if (!c.intersects(y)) return false;
    }
    return true;
  };
  std::set<Subset> found;
  Subset current(x.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    while (i < cand.size() && cand[i].intersects(current)) ++i;
    if (i == cand.size()) {
      bool minimal = true;
      current.for_each([&](Element y) {
        if (!minimal) return;
        Subset less = current;
        less.erase(y);
        minimal = !hits_all(less);
      });
      if (minimal) found.insert(current);
      return;
    }
    cand[i].for_each([&](Element y) {
      current.insert(y);
      self(self, i + 1);
      current.erase(y);
    });
  };
  rec(rec, 0);
  return {found.begin(), found.end()};
}

Subset canonical_inverse(const FiniteMagma& x, const Subset& b_set, Element l) {
  return inverses_of(x, b_set, l).front();
}

bool is_left_subgroup(const FiniteMagma& x, const Subset& h) {
  x.check(h);
  require_associative(x);
  if (!is_subgroup_set(x, h)) return false;
  return x.left_identities().contains(*group_identity(x, h));
}

bool is_left_factor_subgroup(const FiniteMagma& x, const Subset& h) {
  if (!is_left_subgroup(x, h)) {
    fail(ErrorCode::NotLeftSubgroup, h.to_list() + " is not a left subgroup");
  }
  Element one = *group_identity(x, h);
  for (Element s = 0; s < x.size(); ++s) {
    bool ok = true;
    h.for_each([&](Element a) { ok = ok && (a == one || x.op(a, s) != s); });
    if (!ok) return false;
  }
  return true;
}

Subset right_transversal(const FiniteMagma& x, const Subset& h) {
  bool factor = false;
  try {
    factor = is_left_factor_subgroup(x, h);
  } catch (const Error&) {
    factor = false;
  }
  if (!factor) fail(ErrorCode::NotLeftFactor, h.to_list() + " is not a left factor subgroup");
  Subset kept(x.size());
  Subset covered(x.size());
  for (Element s = 0; s < x.size(); ++s) {
    if (covered.contains(s)) continue;
    kept.insert(s);
    h.for_each([&](Element a) { covered.insert(x.op(a, s)); });
  }
  if (h.count() * kept.count() != x.size() || covered.count() != x.size()) {
    throw std::logic_error("greedy transversal does not factor the carrier");
  }
  return kept;
}

FactorContext make_factor_context(const FiniteMagma& x, const Subset& h) {
  Subset t = right_transversal(x, h);
  return FactorContext{x, h, *group_identity(x, h), std::move(t), true};
}

FactorContext make_factor_context(const FiniteMagma& x, const Subset& h, const Subset& transversal) {
  x.check(transversal);
  if (!is_left_factor_subgroup(x, h)) {
    fail(ErrorCode::NotLeftFactor, h.to_list() + " is not a left factor subgroup");
  }
  Subset full = product_of(x, h, transversal);
  if (h.count() * transversal.count() != x.size() || full.count() != x.size()) {
    fail(ErrorCode::NotLeftFactor,
         transversal.to_list() + " is not a right transversal of " + h.to_list());
  }
  return FactorContext{x, h, *group_identity(x, h), transversal, true};
}

}  // namespace periodica
