#include "periodica/periodic.hpp"

#include "periodica/error.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset_algebra.hpp"

namespace periodica {

bool is_upper_periodic(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return product(x, b, a).is_subset_of(a);
}

bool is_lower_periodic(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return a.is_subset_of(product(x, b, a));
}

bool is_periodic(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return product(x, b, a) == a;
}

namespace {

// Elements y of Y with By inside Y.
Subset closed_part(const FiniteMagma& x, const Subset& y, const Subset& b) {
  Subset out(x.size());
  y.for_each([&](Element v) {
    bool ok = true;
    b.for_each([&](Element u) { ok = ok && y.contains(x.op(u, v)); });
    if (ok) out.insert(v);
  });
  return out;
}

}  // namespace

Fixpoint periodic_kernel_traced(const FiniteMagma& x, const Subset& a, const Subset& b) {
  x.check(a);
  x.check(b);
  Subset y = a;
  std::size_t iterations = 0;
  while (true) {
    ++iterations;
    Subset next = closed_part(x, y, b) & product(x, b, y);
    if (next == y) break;
    y = std::move(next);
  }
  return {std::move(y), iterations};
}

Subset periodic_kernel(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return periodic_kernel_traced(x, a, b).set;
}

Fixpoint upper_periodic_kernel_traced(const FiniteMagma& x, const Subset& a, const Subset& b) {
  x.check(a);
  x.check(b);
  Subset y = a;
  std::size_t iterations = 0;
  while (true) {
    ++iterations;
    Subset next = closed_part(x, y, b);
    if (next == y) break;
    y = std::move(next);
  }
  return {std::move(y), iterations};
}

Subset upper_periodic_kernel(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return upper_periodic_kernel_traced(x, a, b).set;
}

Subset summand(const FiniteMagma& x, const Subset& a, const Subset& b) {
  x.check(a);
  x.check(b);
  Subset out(x.size());
  for (Element v = 0; v < x.size(); ++v) {
    bool ok = true;
    b.for_each([&](Element u) { ok = ok && a.contains(x.op(u, v)); });
    if (ok) out.insert(v);
  }
  return out;
}

Subset summand_closed_form(const FiniteMagma& x, const Subset& a, const Subset& b) {
  if (!is_left_subgroup(x, b)) {
    fail(ErrorCode::NotLeftSubgroup, b.to_list() + " is not a left subgroup");
  }
  return product(x, b, a.complement()).complement();
}

Subset start(const FiniteMagma& x, const Subset& a, const Subset& b) {
  return a - product(x, b, a);
}

const char* periodic_tag_name(PeriodicTag t) {
  switch (t) {
    case PeriodicTag::Periodic: return "Periodic";
    case PeriodicTag::PeriodicFree: return "PeriodicFree";
    case PeriodicTag::Mixed: return "Mixed";
  }
  return "Mixed";
}

PeriodicClass classify(const FiniteMagma& x, const Subset& a, const Subset& b) {
  Subset k = periodic_kernel(x, a, b);
  Subset f = a - k;
  PeriodicTag tag = PeriodicTag::Mixed;
  if (k == a) {
    tag = PeriodicTag::Periodic;
  } else if (k.empty()) {
    tag = PeriodicTag::PeriodicFree;
  }
  return {tag, std::move(k), std::move(f)};
}

WellStartedReport well_started_report(const FiniteMagma& x, const Subset& a, const Subset& bb,
                                      const Subset& b) {
  Subset ba = product(x, b, a);
  if (!ba.is_subset_of(a)) {
    fail(ErrorCode::NotUpperPeriodic, "BA is not contained in A");
  }
  Subset reach = product(x, b, a - ba);
  WellStartedReport r{};
  r.well_started = (ba - periodic_kernel(x, a, bb)).is_subset_of(reach);
  r.via_upper_kernel = (ba - upper_periodic_kernel(x, a, bb)).is_subset_of(reach);
  r.via_summand = (ba - summand(x, a, bb)).is_subset_of(reach);
  r.complement_form = (ba & product(x, bb, a.complement())).is_subset_of(reach);
  return r;
}

bool is_well_started(const FiniteMagma& x, const Subset& a, const Subset& bb, const Subset& b) {
  return well_started_report(x, a, bb, b).well_started;
}

ThreeParts decompose_three_parts(const FiniteMagma& x, const Subset& a, const Subset& bb,
                                 const Subset& b, std::optional<Element> l) {
  x.check(a);
  x.check(bb);
  x.check(b);
  const Subset& ids = x.left_identities();
  if (!l) {
    if (ids.count() != 1) {
      fail(ErrorCode::PreconditionFailed, "B^-1 exists: pass the left identity explicitly");
    }
    l = ids.first();
  }
  Subset inv(x.size());
  try {
    inv = canonical_inverse(x, b, *l);
  } catch (const Error& e) {
    fail(ErrorCode::PreconditionFailed, std::string("B^-1 exists: ") + e.what());
  }
  if (!product(x, b, bb).is_subset_of(bb)) {
    fail(ErrorCode::PreconditionFailed, "B*bb within bb");
  }
  if (!inv.is_subset_of(bb | b)) {
    fail(ErrorCode::PreconditionFailed, "B^-1 within bb u B");
  }
  if (!inv.intersects(bb)) {
    fail(ErrorCode::PreconditionFailed, "B^-1 meets bb");
  }
  Subset ba = product(x, b, a);
  if (!ba.is_subset_of(a)) {
    fail(ErrorCode::PreconditionFailed, "BA within A");
  }
  Subset k = periodic_kernel(x, a, bb);
  Subset shifted = product(x, b, a - k);
  return {std::move(k), std::move(shifted), a - ba};
}

}  // namespace periodica
