#include <algorithm>
#include <numeric>

#include "lcg/errors.hpp"
#include "lcg/lcg.hpp"

namespace lcg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

// Two live cells are in the same class iff a chain of live cells joins them
// with consecutive Chebyshev distance <= 2: one dead cell may sit between two
// live ones, two dead cells in a row may not.
std::vector<std::vector<Coord>> partition_cells(std::span<const Coord> live) {
  std::vector<Coord> cells(live.begin(), live.end());
  if (!std::is_sorted(cells.begin(), cells.end())) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  }
  const std::size_t n = cells.size();
  DisjointSets sets(n);

  // Forward half of the 5x5 window; the backward half is covered by symmetry.
  for (std::size_t i = 0; i < n; ++i) {
    const Coord c = cells[i];
    for (std::int64_t dy = 0; dy <= 2; ++dy) {
      const std::int64_t dx_lo = dy == 0 ? 1 : -2;
      Coord lo = add(c, {dx_lo, dy});
      const Coord hi = add(c, {2, dy});
      auto it = std::lower_bound(cells.begin() + static_cast<std::ptrdiff_t>(i), cells.end(), lo);
      for (; it != cells.end() && !(hi < *it); ++it) {
        sets.unite(i, static_cast<std::size_t>(it - cells.begin()));
      }
    }
  }

  std::vector<std::size_t> root_slot(n, n);
  std::vector<std::vector<Coord>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = sets.find(i);
    if (root_slot[r] == n) {
      root_slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[root_slot[r]].push_back(cells[i]);
  }
  // Cells were visited in sorted order, so each group is sorted and groups
  // are already ordered by their first cell.
  return groups;
}

std::vector<Coord> boundary_of(std::span<const Coord> live) {
  std::vector<Coord> out;
  out.reserve(live.size() * 4);
  for (const Coord& c : live) {
    for (const Coord& n : neighbors(c)) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<Coord> dead;
  dead.reserve(out.size());
  std::set_difference(out.begin(), out.end(), live.begin(), live.end(), std::back_inserter(dead));
  return dead;
}

LiveCellGroup::LiveCellGroup(std::vector<Coord> live) : live_(std::move(live)) {
  if (live_.empty()) throw DomainError("a live cell group needs at least one live cell");
  std::sort(live_.begin(), live_.end());
  live_.erase(std::unique(live_.begin(), live_.end()), live_.end());
  boundary_ = boundary_of(live_);
  id_ = canonicalize(live_, SymmetryMode::Translation);
}

Box LiveCellGroup::bounding_box() const { return *bounding_box_of(live_); }

std::vector<LiveCellGroup> partition(const Universe& u) {
  std::vector<LiveCellGroup> out;
  for (auto& cells : partition_cells(u.cells())) out.emplace_back(std::move(cells));
  return out;
}

std::vector<LiveCellGroup> lcg_successors(const LiveCellGroup& g, Engine engine, const Limits& limits) {
  return partition(advance(g.as_universe(), engine, limits));
}

}  // namespace lcg
