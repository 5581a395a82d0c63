#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <limits>
#include <string>

#include "lcg/core.hpp"
#include "lcg/errors.hpp"

namespace lcg {

namespace {

// 64x64 tiles; bit i of row r in tile (ty, tx) is cell (tx*64 + i, ty*64 + r).
constexpr int kTileShift = 6;
constexpr int kTileSize = 1 << kTileShift;

using Rows = std::array<std::uint64_t, kTileSize>;

struct TileKey {
  std::int64_t ty = 0;
  std::int64_t tx = 0;
  friend auto operator<=>(const TileKey&, const TileKey&) = default;
};

struct TileSet {
  std::vector<TileKey> keys;  // sorted
  std::vector<Rows> rows;

  const Rows* find(TileKey k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) return nullptr;
    return &rows[static_cast<std::size_t>(it - keys.begin())];
  }
};

TileKey tile_of(Coord c) { return {c.y >> kTileShift, c.x >> kTileShift}; }

TileSet build_tiles(std::span<const Coord> cells) {
  TileSet ts;
  ts.keys.reserve(cells.size() / 4 + 1);
  for (const Coord& c : cells) ts.keys.push_back(tile_of(c));
  std::sort(ts.keys.begin(), ts.keys.end());
  ts.keys.erase(std::unique(ts.keys.begin(), ts.keys.end()), ts.keys.end());
  ts.rows.assign(ts.keys.size(), Rows{});
  for (const Coord& c : cells) {
    const TileKey k = tile_of(c);
    auto idx = static_cast<std::size_t>(std::lower_bound(ts.keys.begin(), ts.keys.end(), k) - ts.keys.begin());
    ts.rows[idx][static_cast<std::size_t>(c.y & (kTileSize - 1))] |= std::uint64_t{1} << (c.x & (kTileSize - 1));
  }
  return ts;
}

// Output tiles that can hold a live cell next generation: every live tile,
// plus each neighbor tile that a live edge or corner cell can seed.
std::vector<TileKey> candidate_tiles(const TileSet& ts) {
  std::vector<TileKey> out;
  out.reserve(ts.keys.size() * 3);
  for (std::size_t i = 0; i < ts.keys.size(); ++i) {
    const TileKey k = ts.keys[i];
    const Rows& r = ts.rows[i];
    std::uint64_t any = 0;
    for (std::uint64_t w : r) any |= w;
    const bool west = (any & 1) != 0;
    const bool east = (any >> 63) != 0;
    const bool north = r.front() != 0;
    const bool south = r.back() != 0;
    out.push_back(k);
    if (west) out.push_back({k.ty, k.tx - 1});
    if (east) out.push_back({k.ty, k.tx + 1});
    if (north) out.push_back({k.ty - 1, k.tx});
    if (south) out.push_back({k.ty + 1, k.tx});
    if (r.front() & 1) out.push_back({k.ty - 1, k.tx - 1});
    if (r.front() >> 63) out.push_back({k.ty - 1, k.tx + 1});
    if (r.back() & 1) out.push_back({k.ty + 1, k.tx - 1});
    if (r.back() >> 63) out.push_back({k.ty + 1, k.tx + 1});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Counter {
  std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;

  void add(std::uint64_t b) {
    const std::uint64_t c0 = s0 & b;
    s0 ^= b;
    const std::uint64_t c1 = s1 & c0;
    s1 ^= c0;
    const std::uint64_t c2 = s2 & c1;
    s2 ^= c1;
    s3 |= c2;
  }
  std::uint64_t exactly2() const { return ~s0 & s1 & ~s2 & ~s3; }
  std::uint64_t exactly3() const { return s0 & s1 & ~s2 & ~s3; }
};

Rows next_tile(const TileSet& ts, TileKey k) {
  const Rows* nb[3][3];
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) nb[dy + 1][dx + 1] = ts.find({k.ty + dy, k.tx + dx});

  auto word = [&](int band, int col, int idx) -> std::uint64_t {
    const Rows* p = nb[band][col];
    return p ? (*p)[static_cast<std::size_t>(idx)] : 0;
  };

  Rows out{};
  for (int r = 0; r < kTileSize; ++r) {
    std::uint64_t west[3], mid[3], east[3];
    std::uint64_t any = 0;
    for (int k3 = 0; k3 < 3; ++k3) {
      const int src = r - 1 + k3;
      const int band = src < 0 ? 0 : (src >= kTileSize ? 2 : 1);
      const int idx = src & (kTileSize - 1);
      const std::uint64_t w = word(band, 0, idx);
      const std::uint64_t c = word(band, 1, idx);
      const std::uint64_t e = word(band, 2, idx);
      mid[k3] = c;
      west[k3] = (c << 1) | (w >> 63);
      east[k3] = (c >> 1) | (e << 63);
      any |= mid[k3] | west[k3] | east[k3];
    }
    if (!any) continue;
    Counter n;
    n.add(west[0]);
    n.add(mid[0]);
    n.add(east[0]);
    n.add(west[1]);
    n.add(east[1]);
    n.add(west[2]);
    n.add(mid[2]);
    n.add(east[2]);
    out[static_cast<std::size_t>(r)] = n.exactly3() | (mid[1] & n.exactly2());
  }
  return out;
}

}  // namespace

Universe step_fast(const Universe& u, const Limits& limits) {
  if (u.empty()) return Universe::from_sorted({}, u.generation() + 1);

  const Box box = *u.bounding_box();
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (box.min.x == lo || box.min.y == lo || box.max.x == hi || box.max.y == hi) {
    throw OverflowError("live cell on the coordinate range boundary");
  }

  const TileSet tiles = build_tiles(u.cells());
  const std::vector<TileKey> cand = candidate_tiles(tiles);
  std::vector<Rows> next(cand.size());

  const auto n = static_cast<std::ptrdiff_t>(cand.size());
#pragma omp parallel for schedule(dynamic, 4) if (n > 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    next[static_cast<std::size_t>(i)] = next_tile(tiles, cand[static_cast<std::size_t>(i)]);
  }

  std::size_t population = 0;
  for (const Rows& r : next)
    for (std::uint64_t w : r) population += static_cast<std::size_t>(std::popcount(w));
  if (population > limits.population_limit) {
    throw ResourceLimitError("population " + std::to_string(population) + " exceeds limit " +
                             std::to_string(limits.population_limit));
  }

  // Emit row-major: tiles sharing a tile row are interleaved row by row.
  std::vector<Coord> cells;
  cells.reserve(population);
  std::size_t band_begin = 0;
  while (band_begin < cand.size()) {
    std::size_t band_end = band_begin;
    while (band_end < cand.size() && cand[band_end].ty == cand[band_begin].ty) ++band_end;
    const std::int64_t y0 = cand[band_begin].ty * kTileSize;
    for (int r = 0; r < kTileSize; ++r) {
      for (std::size_t t = band_begin; t < band_end; ++t) {
        std::uint64_t w = next[t][static_cast<std::size_t>(r)];
        const std::int64_t x0 = cand[t].tx * kTileSize;
        while (w) {
          const int bit = std::countr_zero(w);
          cells.push_back({x0 + bit, y0 + r});
          w &= w - 1;
        }
      }
    }
    band_begin = band_end;
  }
  return Universe::from_sorted(std::move(cells), u.generation() + 1);
}

}  // namespace lcg
