#pragma once

// Live cell groups: the connectedness classes of a universe, and canonical
// keys for comparing cell sets up to translation (and square symmetry).

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcg/core.hpp"

namespace lcg {

/// Which equivalence a canonical key quotients out.
enum class SymmetryMode : std::uint8_t {
  Translation,            // T
  TranslationAndSquare,   // T+D8
};

const char* to_string(SymmetryMode m);

/// Normal form of a non-empty cell set plus a SHA-256 fingerprint of it.
/// Equality and ordering use the normal form only.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  /// `normal_form` must be sorted and have its bounding-box minimum at the origin.
  explicit CanonicalKey(std::vector<Coord> normal_form);

  const std::vector<Coord>& normal_form() const noexcept { return normal_form_; }
  const std::array<std::uint8_t, 32>& fingerprint() const noexcept { return fingerprint_; }
  std::size_t population() const noexcept { return normal_form_.size(); }

  /// First 8 fingerprint bytes as lowercase hex.
  std::string id() const;

  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) { return a.normal_form_ == b.normal_form_; }
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.normal_form_ <=> b.normal_form_;
  }

 private:
  std::vector<Coord> normal_form_;
  std::array<std::uint8_t, 32> fingerprint_{};
};

/// canonicalize() plus how to get there: normal_form = apply(symmetry, cells) - min corner.
struct CanonicalForm {
  CanonicalKey key;
  Symmetry symmetry = Symmetry::Identity;
  /// Bounding-box minimum of the input cells.
  Coord anchor;
};

/// Throws DomainError on an empty input.
CanonicalKey canonicalize(std::span<const Coord> cells, SymmetryMode mode);
CanonicalForm canonical_form(std::span<const Coord> cells, SymmetryMode mode);

/// Translation-only normal form without the digest, for hot loops.
std::vector<Coord> translation_normal_form(std::span<const Coord> cells);

/// T+D8 normal form without the digest: the smallest oriented normal form.
std::vector<Coord> square_normal_form(std::span<const Coord> cells);

/// Sorted image of `cells` under `s`, translated so its minimum corner is the origin.
std::vector<Coord> oriented_normal_form(std::span<const Coord> cells, Symmetry s);

/// One connectedness class: live interior, dead boundary, translation key.
class LiveCellGroup {
 public:
  LiveCellGroup() = default;
  /// `live` must be non-empty and form a single group; boundary and id are derived.
  explicit LiveCellGroup(std::vector<Coord> live);

  const std::vector<Coord>& live() const noexcept { return live_; }
  const std::vector<Coord>& boundary() const noexcept { return boundary_; }
  const CanonicalKey& id() const noexcept { return id_; }
  std::size_t population() const noexcept { return live_.size(); }
  Box bounding_box() const;
  Universe as_universe(std::uint64_t generation = 0) const { return Universe::from_sorted(live_, generation); }

  /// Group equality is on live sets; the boundary is a function of them.
  friend bool operator==(const LiveCellGroup& a, const LiveCellGroup& b) { return a.live_ == b.live_; }

 private:
  std::vector<Coord> live_;
  std::vector<Coord> boundary_;
  CanonicalKey id_;
};

/// Dead cells with at least one live neighbor in `live`.
std::vector<Coord> boundary_of(std::span<const Coord> live);

/// Live cells grouped by transitive Chebyshev distance <= 2. Each group is
/// sorted; groups are ordered by their first cell.
std::vector<std::vector<Coord>> partition_cells(std::span<const Coord> live);

std::vector<LiveCellGroup> partition(const Universe& u);

/// Evolve the group alone for one step and partition the result.
std::vector<LiveCellGroup> lcg_successors(const LiveCellGroup& g, Engine engine = Engine::Fast,
                                          const Limits& limits = {});

}  // namespace lcg
