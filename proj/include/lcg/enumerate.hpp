#pragma once

// Finite slice of the basic-pattern set: every small connected seed up to
// square symmetry, classified, plus the closure over branching offspring.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcg/lcg.hpp"
#include "lcg/pattern.hpp"

namespace lcg {

inline constexpr std::size_t kDefaultEntryCap = 10'000;

struct DiscoveredFrom {
  std::string parent;  // id of the entry whose split produced this one
  std::uint64_t generation = 0;
  friend bool operator==(const DiscoveredFrom&, const DiscoveredFrom&) = default;
};

struct CatalogEntry {
  CanonicalKey id;  // T+D8
  Classification classification;
  std::optional<DiscoveredFrom> discovered_from;

  /// Normal-form live cells; classification was computed in this orientation.
  const std::vector<Coord>& cells() const noexcept { return id.normal_form(); }
  std::size_t population() const noexcept { return id.population(); }
  std::optional<Velocity> velocity() const { return velocity_of(classification); }
  LiveCellGroup seed() const { return LiveCellGroup(id.normal_form()); }

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Entry order: population, then canonical key.
bool entry_less(const CatalogEntry& a, const CatalogEntry& b);

struct CatalogParameters {
  std::size_t max_cells = 0;
  std::uint64_t budget = kDefaultBudget;
  bool closure = false;
  std::size_t entry_cap = kDefaultEntryCap;
  /// False when the entry cap cut the closure short.
  bool complete = true;
  friend bool operator==(const CatalogParameters&, const CatalogParameters&) = default;
};

struct Catalog {
  CatalogParameters parameters;
  std::vector<CatalogEntry> entries;  // sorted by entry_less, ids unique

  const CatalogEntry* find(const CanonicalKey& id) const;
  const CatalogEntry* find(std::string_view id) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

struct BuildOptions {
  Engine engine = Engine::Fast;
  Limits limits;
};

/// One representative per T+D8 class of single-group live sets with
/// 1..max_cells cells, ordered by (population, key).
std::vector<LiveCellGroup> enumerate_seeds(std::size_t max_cells);

/// Classify a seed (in its normal-form orientation) into an entry.
CatalogEntry make_entry(const CanonicalKey& id, std::uint64_t budget, const BuildOptions& opts = {});

Catalog build_catalog(std::size_t max_cells, std::uint64_t budget, bool closure,
                      std::size_t entry_cap = kDefaultEntryCap, const BuildOptions& opts = {});

/// Add entries for every branching offspring not yet present, repeating until
/// a fixed point or the entry cap. Returns false when the cap stopped it.
bool extend_closure(Catalog& catalog, const BuildOptions& opts = {});

/// Insert entries keeping sort order; entries whose id is present are dropped.
void insert_entries(Catalog& catalog, std::vector<CatalogEntry> entries);

}  // namespace lcg
