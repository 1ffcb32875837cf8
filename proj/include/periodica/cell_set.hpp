#ifndef PERIODICA_CELL_SET_HPP_
#define PERIODICA_CELL_SET_HPP_

#include <vector>

#include "periodica/exact_real.hpp"

namespace periodica::real {

// A point or a bounded interval with exact endpoints.
struct Cell {
  ExactReal lo;
  ExactReal hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Cell point(const ExactReal& v) { return {v, v, true, true}; }
  static Cell interval(const ExactReal& lo, const ExactReal& hi, bool lo_closed, bool hi_closed) {
    return {lo, hi, lo_closed, hi_closed};
  }

  bool is_point() const { return lo == hi; }
  bool is_empty() const;
  bool contains(const ExactReal& x) const;
  Cell shifted(const ExactReal& by) const;
  // Multiplies by f; a negative factor swaps the endpoints.
  Cell scaled(const mpq_class& f) const;
  // Some two members differ by a nonzero integer.
  bool self_translates() const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

Cell intersect(const Cell& a, const Cell& b);

// Finite union of cells, kept as sorted, pairwise separated components.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  bool empty() const noexcept { return cells_.empty(); }
  bool contains(const ExactReal& x) const;
  bool all_points() const;

  CellSet unite(const CellSet& o) const;
  CellSet intersect(const CellSet& o) const;
  CellSet subtract(const CellSet& o) const;
  bool intersects(const CellSet& o) const { return !intersect(o).empty(); }
  bool is_subset_of(const CellSet& o) const { return subtract(o).empty(); }
  CellSet shifted(const ExactReal& by) const;
  CellSet scaled(const mpq_class& f) const;

  // Image under x -> x - floor(x), inside [0, 1).
  CellSet frac_image() const;

  // Lowest and highest components; the set must be non-empty.
  const Cell& last() const { return cells_.back(); }
  const Cell& front() const { return cells_.front(); }

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<Cell> cells_;
};

}  // namespace periodica::real

#endif  // PERIODICA_CELL_SET_HPP_
