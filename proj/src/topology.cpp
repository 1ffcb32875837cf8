#include "periodica/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "periodica/error.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset_algebra.hpp"

namespace periodica {

std::vector<Subset> minimal_neighborhoods(const FiniteMagma& x, const Subset& b) {
  x.check(b);
  std::vector<Element> gens = b.elements();
  std::vector<Subset> out;
  out.reserve(x.size());
  for (Element y = 0; y < x.size(); ++y) {
    Subset n = x.singleton(y);
    std::vector<Element> queue{y};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Element g : gens) {
        Element v = x.op(g, queue[i]);
        if (!n.contains(v)) {
          n.insert(v);
          queue.push_back(v);
        }
      }
    }
    out.push_back(std::move(n));
  }
  return out;
}

mpz_class count_closed_families(const std::vector<Subset>& nbhd, const Subset& within) {
  std::size_t n = within.universe();
  // up[x] = {z : x in nbhd[z]}
  std::vector<Subset> up(n, Subset(n));
  for (Element z = 0; z < n; ++z) nbhd[z].for_each([&](Element v) { up[v].insert(z); });
  std::map<Subset, mpz_class> memo;
  auto rec = [&](auto&& self, const Subset& s) -> mpz_class {
    if (s.empty()) return 1;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    Element pick = s.first();
    mpz_class total = self(self, s - up[pick]) + self(self, s - nbhd[pick]);
    memo.emplace(s, total);
    return total;
  };
  return rec(rec, within);
}

const char* topology_kind_name(TopologyKind k) {
  return k == TopologyKind::Periodic ? "Periodic" : "UpperPeriodic";
}

TopologyConditions periodic_topology_conditions(const FiniteMagma& x, const Subset& b,
                                                std::size_t max_n) {
  x.check(b);
  std::size_t n = x.size();
  if (n > max_n || n > 24) {
    fail(ErrorCode::TooLarge, "exhaustive condition check over " + std::to_string(n) + " elements");
  }
  TopologyConditions c{is_left_cancellative_over(x, b), true, true};
  std::vector<Element> gens = b.elements();
  std::uint64_t b_bits = b.bits();
  auto shift = [&](Element g, std::uint64_t a) {
    std::uint64_t out = 0;
    for (Element v = 0; v < n; ++v) {
      if ((a >> v) & 1U) out |= std::uint64_t{1} << x.op(g, v);
    }
    return out;
  };
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    std::vector<std::uint64_t> images;
    std::uint64_t ba = 0;
    for (Element g : gens) {
      images.push_back(shift(g, a));
      ba |= images.back();
    }
    if (ba != a) continue;
    for (std::uint64_t img : images) {
      if (img != a) c.transfer_each_b = false;
      if (img != b_bits) c.transfer_literal = false;
    }
    if (!c.transfer_each_b && !c.transfer_literal) break;
  }
  return c;
}

AlexandrovTopology build_topology(const FiniteMagma& x, const Subset& b, TopologyKind kind) {
  x.check(b);
  TopologyConditions cond{is_left_cancellative_over(x, b), false, false};
  if (kind == TopologyKind::Periodic) {
    cond = periodic_topology_conditions(x, b, 24);
    if (!cond.left_cancellative || !cond.transfer_each_b) {
      fail(ErrorCode::NotATopology, "the B-periodic sets are not closed under unions and intersections");
    }
    if (!(product(x, b, x.whole()) == x.whole())) {
      fail(ErrorCode::NotATopology, "the whole carrier is not B-periodic");
    }
  }
  return AlexandrovTopology{x, b, minimal_neighborhoods(x, b), kind, cond};
}

bool is_open(const AlexandrovTopology& t, const Subset& a) {
  Subset ba = product(t.carrier, t.generator, a);
  return t.kind == TopologyKind::Periodic ? ba == a : ba.is_subset_of(a);
}

mpz_class count_opens(const AlexandrovTopology& t) {
  std::size_t n = t.carrier.size();
  std::set<Subset> classes;
  for (Element y = 0; y < n; ++y) {
    Subset cls(n);
    t.reach[y].for_each([&](Element z) {
      if (t.reach[z].contains(y)) cls.insert(z);
    });
    classes.insert(cls);
  }
  if (classes.size() > 24) {
    fail(ErrorCode::TooLarge, std::to_string(classes.size()) + " classes exceed the limit of 24");
  }
  return count_closed_families(t.reach, t.carrier.whole());
}

SemigroupTopologyReport is_topological_semigroup(const FiniteMagma& x, const Subset& b) {
  x.check(b);
  std::size_t n = x.size();
  std::vector<Subset> nbhd = minimal_neighborhoods(x, b);
  std::vector<Subset> basis;
  for (Element v = 0; v < n; ++v) basis.push_back(product(x, b, x.singleton(v)) | x.singleton(v));
  SemigroupTopologyReport r{};
  r.b_is_subsemigroup = !b.empty() && product(x, b, b).is_subset_of(b);
  r.left_normal = true;
  r.continuous = true;
  r.basis_open = true;
  r.basis_continuous = true;
  for (Element v = 0; v < n; ++v) {
    Subset single = x.singleton(v);
    if (!product(x, single, b).is_subset_of(product(x, b, single))) r.left_normal = false;
    if (!product(x, b, basis[v]).is_subset_of(basis[v])) r.basis_open = false;
    for (Element w = 0; w < n; ++w) {
      Element vw = x.op(v, w);
      if (r.continuous && !product(x, nbhd[v], nbhd[w]).is_subset_of(nbhd[vw])) r.continuous = false;
      if (r.basis_continuous && !product(x, basis[v], basis[w]).is_subset_of(basis[vw])) {
        r.basis_continuous = false;
      }
    }
  }
  return r;
}

GroupTopologyReport is_topological_group(const FiniteMagma& g, const Subset& b) {
  if (!g.is_group()) fail(ErrorCode::NotGroup, "the carrier is not a group");
  g.check(b);
  std::size_t n = g.size();
  std::vector<Subset> nbhd = minimal_neighborhoods(g, b);
  GroupTopologyReport r{};
  r.normal_subgroup = is_subgroup_set(g, b);
  for (Element v = 0; v < n && r.normal_subgroup; ++v) {
    Subset conj(n);
    b.for_each([&](Element u) { conj.insert(g.op(g.op(v, u), g.inverse(v))); });
    r.normal_subgroup = conj == b;
  }
  r.multiplication_continuous = true;
  r.inversion_continuous = true;
  for (Element v = 0; v < n; ++v) {
    if (!inverse_set(g, nbhd[v]).is_subset_of(nbhd[g.inverse(v)])) r.inversion_continuous = false;
    for (Element w = 0; w < n && r.multiplication_continuous; ++w) {
      if (!product(g, nbhd[v], nbhd[w]).is_subset_of(nbhd[g.op(v, w)])) {
        r.multiplication_continuous = false;
      }
    }
  }
  r.topological_group = r.multiplication_continuous && r.inversion_continuous;
  std::set<Subset> cosets;
  for (Element v = 0; v < n; ++v) cosets.insert(product(g, b, g.singleton(v)));
  r.cosets.assign(cosets.begin(), cosets.end());
  return r;
}

AlexandrovTopology ideal_topology(const FiniteMagma& x) {
  return build_topology(x, x.whole(), TopologyKind::UpperPeriodic);
}

std::string to_dot(const AlexandrovTopology& t) {
  std::string out = "digraph topology {\n";
  const FiniteMagma& x = t.carrier;
  for (Element v = 0; v < x.size(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + x.label(v) + "\"];\n";
  }
  for (Element v = 0; v < x.size(); ++v) {
    t.reach[v].for_each([&](Element w) {
      if (w != v) out += "  n" + std::to_string(v) + " -> n" + std::to_string(w) + ";\n";
    });
  }
  return out + "}\n";
}

}  // namespace periodica
