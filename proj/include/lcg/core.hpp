#pragma once

// Unbounded B3/S23 universe: sparse live-cell sets over signed 64-bit
// coordinates, a serial reference stepper and a tiled parallel stepper.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lcg {

/// Grid cell. x grows rightward, y grows downward. Ordered row-major (y, then x).
struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Coord&, const Coord&) = default;
  friend constexpr std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

struct CoordHash {
  std::size_t operator()(const Coord& c) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(c.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Checked arithmetic; throws OverflowError.
Coord add(Coord a, Coord b);
Coord sub(Coord a, Coord b);

/// Inclusive bounding box.
struct Box {
  Coord min;
  Coord max;

  std::int64_t width() const { return max.x - min.x + 1; }
  std::int64_t height() const { return max.y - min.y + 1; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Chebyshev gap between the nearest cells of two boxes (0 when they overlap).
std::int64_t chebyshev_gap(const Box& a, const Box& b);
Box hull(const Box& a, const Box& b);

/// Empty input has no box.
std::optional<Box> bounding_box_of(std::span<const Coord> cells);

/// The 8 square symmetries. Index 0 is the identity.
enum class Symmetry : std::uint8_t {
  Identity = 0,
  Rot90,
  Rot180,
  Rot270,
  FlipX,      // (x, y) -> (-x, y)
  FlipY,      // (x, y) -> (x, -y)
  Transpose,  // (x, y) -> (y, x)
  AntiTranspose,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::Identity, Symmetry::Rot90,  Symmetry::Rot180,    Symmetry::Rot270,
    Symmetry::FlipX,    Symmetry::FlipY,  Symmetry::Transpose, Symmetry::AntiTranspose,
};

Coord apply(Symmetry s, Coord c);
Symmetry inverse(Symmetry s);

/// The Moore neighborhood: the 8 cells at Chebyshev distance 1.
std::array<Coord, 8> neighbors(Coord c);

struct Limits {
  std::size_t population_limit = 10'000'000;
};

/// Finite set of live cells plus a generation counter. Immutable after construction.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<Coord> cells, std::uint64_t generation = 0);

  /// Skips sorting; `cells` must already be strictly increasing.
  static Universe from_sorted(std::vector<Coord> cells, std::uint64_t generation = 0);

  std::span<const Coord> cells() const noexcept { return cells_; }
  const std::vector<Coord>& cell_vector() const noexcept { return cells_; }
  std::size_t population() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }
  std::uint64_t generation() const noexcept { return generation_; }
  bool contains(Coord c) const;

  /// Defined iff population > 0.
  std::optional<Box> bounding_box() const;

  Universe with_generation(std::uint64_t generation) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<Coord> cells_;
  std::uint64_t generation_ = 0;
};

bool same_cells(const Universe& a, const Universe& b);
Universe translate(const Universe& u, Coord offset);
Universe transform(const Universe& u, Symmetry s);
/// Union of live sets; generation taken from `a`.
Universe merge(const Universe& a, const Universe& b);

/// Serial reference engine.
Universe step(const Universe& u, const Limits& limits = {});

/// Tiled bit-parallel engine; same observable contract as step.
Universe step_fast(const Universe& u, const Limits& limits = {});

enum class Engine : std::uint8_t { Naive, Fast };

const char* to_string(Engine e);

Universe advance(const Universe& u, Engine engine, const Limits& limits = {});
Universe step_n(const Universe& u, std::uint64_t n, Engine engine = Engine::Naive, const Limits& limits = {});

}  // namespace lcg
