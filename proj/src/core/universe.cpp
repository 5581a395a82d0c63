#include <algorithm>
#include <limits>
#include <string>

#include "lcg/core.hpp"
#include "lcg/errors.hpp"

namespace lcg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("coordinate overflow in subtraction");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace

Coord add(Coord a, Coord b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
Coord sub(Coord a, Coord b) { return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)}; }

std::int64_t chebyshev_gap(const Box& a, const Box& b) {
  // Computed in wide arithmetic so distant boxes do not overflow.
  auto axis = [](std::int64_t lo1, std::int64_t hi1, std::int64_t lo2, std::int64_t hi2) {
    __int128 d = 0;
    d = std::max<__int128>(d, static_cast<__int128>(lo2) - hi1);
    d = std::max<__int128>(d, static_cast<__int128>(lo1) - hi2);
    return d;
  };
  __int128 g = std::max(axis(a.min.x, a.max.x, b.min.x, b.max.x), axis(a.min.y, a.max.y, b.min.y, b.max.y));
  if (g > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(g);
}

Box hull(const Box& a, const Box& b) {
  return {{std::min(a.min.x, b.min.x), std::min(a.min.y, b.min.y)},
          {std::max(a.max.x, b.max.x), std::max(a.max.y, b.max.y)}};
}

Coord apply(Symmetry s, Coord c) {
  switch (s) {
    case Symmetry::Identity: return c;
    case Symmetry::Rot90: return {checked_neg(c.y), c.x};
    case Symmetry::Rot180: return {checked_neg(c.x), checked_neg(c.y)};
    case Symmetry::Rot270: return {c.y, checked_neg(c.x)};
    case Symmetry::FlipX: return {checked_neg(c.x), c.y};
    case Symmetry::FlipY: return {c.x, checked_neg(c.y)};
    case Symmetry::Transpose: return {c.y, c.x};
    case Symmetry::AntiTranspose: return {checked_neg(c.y), checked_neg(c.x)};
  }
  return c;
}

Symmetry inverse(Symmetry s) {
  if (s == Symmetry::Rot90) return Symmetry::Rot270;
  if (s == Symmetry::Rot270) return Symmetry::Rot90;
  return s;
}

std::array<Coord, 8> neighbors(Coord c) {
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (c.x == lo || c.x == hi || c.y == lo || c.y == hi) {
    throw OverflowError("neighborhood of (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                        ") leaves the coordinate range");
  }
  return {{{c.x - 1, c.y - 1},
           {c.x, c.y - 1},
           {c.x + 1, c.y - 1},
           {c.x - 1, c.y},
           {c.x + 1, c.y},
           {c.x - 1, c.y + 1},
           {c.x, c.y + 1},
           {c.x + 1, c.y + 1}}};
}

Universe::Universe(std::vector<Coord> cells, std::uint64_t generation)
    : cells_(std::move(cells)), generation_(generation) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Universe Universe::from_sorted(std::vector<Coord> cells, std::uint64_t generation) {
  Universe u;
  u.cells_ = std::move(cells);
  u.generation_ = generation;
  return u;
}

bool Universe::contains(Coord c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

std::optional<Box> bounding_box_of(std::span<const Coord> cells) {
  if (cells.empty()) return std::nullopt;
  Box b{cells.front(), cells.front()};
  for (const Coord& c : cells) {
    b.min.x = std::min(b.min.x, c.x);
    b.max.x = std::max(b.max.x, c.x);
    b.min.y = std::min(b.min.y, c.y);
    b.max.y = std::max(b.max.y, c.y);
  }
  return b;
}

std::optional<Box> Universe::bounding_box() const { return bounding_box_of(cells_); }

Universe Universe::with_generation(std::uint64_t generation) const { return from_sorted(cells_, generation); }

bool same_cells(const Universe& a, const Universe& b) { return a.cell_vector() == b.cell_vector(); }

Universe translate(const Universe& u, Coord offset) {
  std::vector<Coord> out;
  out.reserve(u.population());
  for (const Coord& c : u.cells()) out.push_back(add(c, offset));
  // Translation preserves row-major order.
  return Universe::from_sorted(std::move(out), u.generation());
}

Universe transform(const Universe& u, Symmetry s) {
  std::vector<Coord> out;
  out.reserve(u.population());
  for (const Coord& c : u.cells()) out.push_back(apply(s, c));
  return Universe(std::move(out), u.generation());
}

Universe merge(const Universe& a, const Universe& b) {
  std::vector<Coord> out;
  out.reserve(a.population() + b.population());
  std::set_union(a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end(), std::back_inserter(out));
  return Universe::from_sorted(std::move(out), a.generation());
}

const char* to_string(Engine e) { return e == Engine::Naive ? "naive" : "fast"; }

Universe advance(const Universe& u, Engine engine, const Limits& limits) {
  return engine == Engine::Naive ? step(u, limits) : step_fast(u, limits);
}

Universe step_n(const Universe& u, std::uint64_t n, Engine engine, const Limits& limits) {
  Universe cur = u;
  for (std::uint64_t i = 0; i < n; ++i) cur = advance(cur, engine, limits);
  return cur;
}

}  // namespace lcg
