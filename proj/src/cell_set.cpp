#include "periodica/cell_set.hpp"

#include <algorithm>

namespace periodica::real {

bool Cell::is_empty() const {
  auto c = lo <=> hi;
  if (c > 0) return true;
  return c == 0 && !(lo_closed && hi_closed);
}

bool Cell::contains(const ExactReal& x) const {
  auto a = lo <=> x;
  if (a > 0 || (a == 0 && !lo_closed)) return false;
  auto b = x <=> hi;
  return b < 0 || (b == 0 && hi_closed);
}

Cell Cell::shifted(const ExactReal& by) const { return {lo + by, hi + by, lo_closed, hi_closed}; }

Cell Cell::scaled(const mpq_class& f) const {
  if (f < 0) return {hi * f, lo * f, hi_closed, lo_closed};
  return {lo * f, hi * f, lo_closed, hi_closed};
}

bool Cell::self_translates() const {
  auto c = (hi - lo) <=> ExactReal(1);
  return c > 0 || (c == 0 && lo_closed && hi_closed);
}

Cell intersect(const Cell& a, const Cell& b) {
  Cell r;
  auto l = a.lo <=> b.lo;
  if (l > 0) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (l < 0) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  auto h = a.hi <=> b.hi;
  if (h < 0) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (h > 0) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

CellSet::CellSet(std::vector<Cell> cells) {
  std::erase_if(cells, [](const Cell& c) { return c.is_empty(); });
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    auto c = a.lo <=> b.lo;
    if (c != 0) return c < 0;
    return a.lo_closed && !b.lo_closed;
  });
  for (Cell& c : cells) {
    if (!cells_.empty()) {
      Cell& cur = cells_.back();
      auto touch = c.lo <=> cur.hi;
      if (touch < 0 || (touch == 0 && (cur.hi_closed || c.lo_closed))) {
        auto h = c.hi <=> cur.hi;
        if (h > 0) {
          cur.hi = c.hi;
          cur.hi_closed = c.hi_closed;
        } else if (h == 0) {
          cur.hi_closed = cur.hi_closed || c.hi_closed;
        }
        continue;
      }
    }
    cells_.push_back(std::move(c));
  }
}

bool CellSet::contains(const ExactReal& x) const {
  for (const Cell& c : cells_) {
    if (c.contains(x)) return true;
  }
  return false;
}

bool CellSet::all_points() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.is_point(); });
}

CellSet CellSet::unite(const CellSet& o) const {
  std::vector<Cell> all = cells_;
  all.insert(all.end(), o.cells_.begin(), o.cells_.end());
  return CellSet(std::move(all));
}

CellSet CellSet::intersect(const CellSet& o) const {
  std::vector<Cell> out;
  for (const Cell& a : cells_) {
    for (const Cell& b : o.cells_) {
      Cell c = real::intersect(a, b);
      if (!c.is_empty()) out.push_back(std::move(c));
    }
  }
  return CellSet(std::move(out));
}

CellSet CellSet::subtract(const CellSet& o) const {
  std::vector<Cell> pieces = cells_;
  for (const Cell& b : o.cells_) {
    std::vector<Cell> next;
    for (const Cell& p : pieces) {
      Cell left = real::intersect(p, Cell{p.lo, b.lo, p.lo_closed, !b.lo_closed});
      Cell right = real::intersect(p, Cell{b.hi, p.hi, !b.hi_closed, p.hi_closed});
      if (!left.is_empty()) next.push_back(std::move(left));
      if (!right.is_empty()) next.push_back(std::move(right));
    }
    pieces = std::move(next);
  }
  return CellSet(std::move(pieces));
}

CellSet CellSet::shifted(const ExactReal& by) const {
  std::vector<Cell> out;
  for (const Cell& c : cells_) out.push_back(c.shifted(by));
  return CellSet(std::move(out));
}

CellSet CellSet::scaled(const mpq_class& f) const {
  std::vector<Cell> out;
  for (const Cell& c : cells_) out.push_back(c.scaled(f));
  return CellSet(std::move(out));
}

CellSet CellSet::frac_image() const {
  std::vector<Cell> out;
  for (const Cell& c : cells_) {
    mpz_class first = c.lo.floor();
    mpz_class last = c.hi.floor();
    for (mpz_class k = first; k <= last; ++k) {
      ExactReal kk{mpq_class(k)};
      Cell unit{kk, kk + ExactReal(1), true, false};
      Cell piece = real::intersect(c, unit);
      if (!piece.is_empty()) out.push_back(piece.shifted(-kk));
    }
  }
  return CellSet(std::move(out));
}

}  // namespace periodica::real
