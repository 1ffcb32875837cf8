#include "periodica/representation.hpp"

#include "periodica/error.hpp"
#include "periodica/periodic.hpp"
#include "periodica/subset_algebra.hpp"

namespace periodica {

Subset g_two(const FiniteMagma& g) {
  if (!g.is_group()) fail(ErrorCode::NotGroup, "the carrier is not a group");
  Subset out(g.size());
  for (Element v = 0; v < g.size(); ++v) {
    if (g.inverse(v) == v) out.insert(v);
  }
  return out;
}

PositivePartitions::PositivePartitions(const FiniteMagma& g) : n_(g.size()), g2_(g_two(g)) {
  for (Element v = 0; v < g.size(); ++v) {
    Element w = g.inverse(v);
    if (v < w) pairs_.emplace_back(v, w);
  }
  if (pairs_.size() > 20) {
    fail(ErrorCode::TooManyPairs, std::to_string(pairs_.size()) + " inverse pairs exceed the limit of 20");
  }
}

PositivePartition PositivePartitions::at(std::uint64_t mask) const {
  PositivePartition p{Subset(n_), Subset(n_), g2_};
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    bool flip = (mask >> i) & 1U;
    p.positive.insert(flip ? pairs_[i].second : pairs_[i].first);
    p.negative.insert(flip ? pairs_[i].first : pairs_[i].second);
  }
  return p;
}

PositivePartitions enumerate_positive_partitions(const FiniteMagma& g) {
  return PositivePartitions(g);
}

bool is_positive_subset(const FiniteMagma& g, const Subset& b) {
  Subset g2 = g_two(g);
  if (b.intersects(g2)) return false;
  return inverse_set(g, b.complement()) - g2 == b;
}

bool is_positive_subsemigroup(const FiniteMagma& g, const Subset& b) {
  return !b.empty() && is_positive_subset(g, b) && product(g, b, b).is_subset_of(b);
}

Subset periodic_representation(const FactorContext& ctx, const Subset& a) {
  if (!is_periodic(ctx.carrier, a, ctx.subgroup)) {
    fail(ErrorCode::NotPeriodic, a.to_list() + " is not periodic under the factor subgroup");
  }
  return ctx.transversal & a;
}

namespace {

// Identity playing the role of 1 in B^1: the identity of bb when bb is a left
// subgroup, else the unique left identity of the carrier, else a fresh one.
std::optional<Element> adjoined_identity(const FiniteMagma& x, const Subset& bb) {
  if (x.is_associative() && is_left_subgroup(x, bb)) return group_identity(x, bb);
  const Subset& ids = x.left_identities();
  if (ids.count() == 1) return ids.first();
  return std::nullopt;
}

Subset with_identity_product(const FiniteMagma& x, const Subset& b, const Subset& e) {
  return product(x, b, e) | e;
}

}  // namespace

RepresentationReport representation_report(const FiniteMagma& x, const Subset& a,
                                           const Subset& bb, const Subset& b,
                                           const std::optional<Subset>& transversal) {
  Subset ba = product(x, b, a);
  if (!ba.is_subset_of(a)) fail(ErrorCode::NotUpperPeriodic, "BA is not contained in A");

  RepresentationReport r{Subset(x.size()), Subset(x.size()), Subset(x.size()), false, false,
                         false, false, false, false, false, false};
  r.kernel = periodic_kernel(x, a, bb);
  r.e = a - ba;
  bool transversal_ok = false;
  if (transversal) {
    x.check(*transversal);
    r.d = r.kernel & *transversal;
    try {
      make_factor_context(x, bb, *transversal);
      transversal_ok = true;
    } catch (const Error&) {
      transversal_ok = false;
    }
  } else {
    Subset covered(x.size());
    r.kernel.for_each([&](Element v) {
      if (covered.contains(v)) return;
      r.d.insert(v);
      covered |= product(x, bb, x.singleton(v));
      covered.insert(v);
    });
  }

  std::optional<Element> one = adjoined_identity(x, bb);
  Subset first_half = product(x, bb, r.d);
  Subset second_half = with_identity_product(x, b, r.e);
  r.first_half_direct = first_half.count() == bb.count() * r.d.count();
  r.second_half_direct = is_direct_with_identity(x, b, r.e, one);
  r.halves_disjoint = !first_half.intersects(second_half);
  r.reconstructs = (first_half | second_half) == a;
  r.e_unique = !r.e.intersects(product(x, b, r.e)) && r.reconstructs && r.halves_disjoint;
  r.d_unique_given_transversal = transversal_ok && r.first_half_direct;
  r.b_is_subsemigroup = !b.empty() && product(x, b, b).is_subset_of(b);
  r.well_started = is_well_started(x, a, bb, b);
  return r;
}

Subset generate_upper_periodic(const FiniteMagma& x, const Subset& bb, const Subset& b,
                               const Subset& d, const Subset& e) {
  if (!x.is_associative()) fail(ErrorCode::NotAssociative, "the carrier is not associative");
  Subset out = product(x, bb, d) | e;
  if (!b.empty()) out |= product(x, generate_subsemigroup(x, b), e);
  return out;
}

NormalFactorMonoidReport check_normal_factor_monoid(const FactorContext& ctx) {
  const FiniteMagma& s = ctx.carrier;
  if (!is_left_cancellative_over(s, s.whole())) {
    fail(ErrorCode::PreconditionFailed, "the carrier is not left cancellative");
  }
  for (Element v = 0; v < s.size(); ++v) {
    Subset single = s.singleton(v);
    if (!product(s, single, ctx.subgroup).is_subset_of(product(s, ctx.subgroup, single))) {
      fail(ErrorCode::PreconditionFailed, "the factor subgroup is not left normal");
    }
  }
  NormalFactorMonoidReport r{};
  r.identity = s.identity();
  r.identity_is_subgroup_identity = r.identity && *r.identity == ctx.identity;
  Subset dh = product(s, ctx.transversal, ctx.subgroup);
  r.transversal_times_subgroup_direct = dh.count() == ctx.transversal.count() * ctx.subgroup.count();
  r.transversal_times_subgroup_full = dh.count() == s.size();
  Subset meet = ctx.subgroup & ctx.transversal;
  if (meet.count() == 1) r.subgroup_meets_transversal = meet.first();
  return r;
}

BiProjection bi_projection(const FactorContext& ctx, const Subset& b, const Subset& a,
                           const Subset& d, const Subset& e, Element point) {
  const FiniteMagma& x = ctx.carrier;
  Subset first_half = product(x, ctx.subgroup, d);
  Subset second_half = with_identity_product(x, b, e);
  bool ok = (first_half | second_half) == a && !first_half.intersects(second_half) &&
            first_half.count() == ctx.subgroup.count() * d.count() &&
            is_direct_with_identity(x, b, e, ctx.identity);
  if (!ok) fail(ErrorCode::PreconditionFailed, "A is not given by a direct representation");
  if (point >= x.size() || !a.contains(point)) {
    fail(ErrorCode::NotInSet, "element " + std::to_string(point) + " is not in A");
  }
  std::optional<BiProjection> found;
  d.for_each([&](Element g) {
    if (!found && product(x, ctx.subgroup, x.singleton(g)).contains(point)) {
      found = BiProjection{GeneratorKind::Kernel, g};
    }
  });
  e.for_each([&](Element g) {
    if (!found && (g == point || product(x, b, x.singleton(g)).contains(point))) {
      found = BiProjection{GeneratorKind::Free, g};
    }
  });
  return *found;
}

StartedProbe probe_generated_well_started(const FiniteMagma& x, std::size_t max_witnesses) {
  if (x.size() > 5) fail(ErrorCode::SearchSpaceTooLarge, "the probe is exhaustive and limited to 5 elements");
  if (!x.is_associative()) fail(ErrorCode::NotAssociative, "the carrier is not associative");
  std::vector<Subset> closed;
  for_each_subset_of(x.whole(), [&](const Subset& s) {
    if (!s.empty() && product(x, s, s).is_subset_of(s)) closed.push_back(s);
  });
  StartedProbe probe;
  for (const Subset& bb : closed) {
    for (const Subset& b : closed) {
      if (product(x, b, bb) != bb) continue;
      for_each_subset_of(x.whole(), [&](const Subset& d) {
        Subset kernel_half = product(x, bb, d);
        for_each_subset_of(x.whole(), [&](const Subset& e) {
          Subset a = kernel_half | with_identity_product(x, b, e);
          StartedProbeCase c{bb, b, d, e, is_well_started(x, a, bb, b),
                             periodic_kernel(x, a, bb) == kernel_half};
          ++probe.cases;
          probe.not_well_started += !c.well_started;
          probe.kernel_mismatch += !c.kernel_is_generated;
          if ((!c.well_started || !c.kernel_is_generated) && probe.witnesses.size() < max_witnesses) {
            probe.witnesses.push_back(std::move(c));
          }
        });
      });
    }
  }
  return probe;
}

}  // namespace periodica
