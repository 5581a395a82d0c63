#include <algorithm>
#include <map>
#include <set>

#include "lcg/enumerate.hpp"
#include "lcg/errors.hpp"

namespace lcg {

bool entry_less(const CatalogEntry& a, const CatalogEntry& b) {
  if (a.population() != b.population()) return a.population() < b.population();
  return a.id < b.id;
}

const CatalogEntry* Catalog::find(const CanonicalKey& id) const {
  CatalogEntry probe{id, Terminating{}, std::nullopt};
  auto it = std::lower_bound(entries.begin(), entries.end(), probe, entry_less);
  if (it == entries.end() || it->id != id) return nullptr;
  return &*it;
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const CatalogEntry& e : entries)
    if (e.id.id() == id) return &e;
  return nullptr;
}

namespace {

// Grow every (n)-cell class by one cell within Chebyshev distance 2 of it.
// Every connected (n+1)-set has a non-cut cell, so removing it leaves a
// connected n-set: growing all n-sets reaches every (n+1)-set.
std::vector<std::vector<Coord>> grow(const std::vector<std::vector<Coord>>& level) {
  std::vector<std::vector<std::vector<Coord>>> per_parent(level.size());
  const auto n = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& parent = level[static_cast<std::size_t>(i)];
    std::set<Coord> candidates;
    for (const Coord& c : parent)
      for (std::int64_t dy = -2; dy <= 2; ++dy)
        for (std::int64_t dx = -2; dx <= 2; ++dx) candidates.insert({c.x + dx, c.y + dy});
    for (const Coord& c : parent) candidates.erase(c);

    auto& out = per_parent[static_cast<std::size_t>(i)];
    for (const Coord& c : candidates) {
      std::vector<Coord> child = parent;
      child.push_back(c);
      out.push_back(square_normal_form(child));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  std::vector<std::vector<Coord>> next;
  for (auto& v : per_parent)
    for (auto& s : v) next.push_back(std::move(s));
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

std::vector<CatalogEntry> classify_all(const std::vector<CanonicalKey>& ids, std::uint64_t budget,
                                       const BuildOptions& opts) {
  std::vector<CatalogEntry> out(ids.size());
  const auto n = static_cast<std::ptrdiff_t>(ids.size());
  // Exceptions cannot leave an OpenMP region; carry the first one out.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = make_entry(ids[static_cast<std::size_t>(i)], budget, opts);
    } catch (...) {
#pragma omp critical(lcg_classify_all)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace

std::vector<LiveCellGroup> enumerate_seeds(std::size_t max_cells) {
  if (max_cells < 1) throw DomainError("max_cells must be at least 1");
  std::vector<LiveCellGroup> out;
  std::vector<std::vector<Coord>> level{{Coord{0, 0}}};
  for (std::size_t n = 1; n <= max_cells; ++n) {
    if (n > 1) level = grow(level);
    // `level` is sorted by normal form; all members share a population.
    for (const auto& cells : level) out.emplace_back(cells);
  }
  return out;
}

CatalogEntry make_entry(const CanonicalKey& id, std::uint64_t budget, const BuildOptions& opts) {
  ClassifyOptions co{opts.engine, opts.limits, false};
  OrbitRecord rec = classify(LiveCellGroup(id.normal_form()), budget, RepeatMode::Translation, co);
  return {id, std::move(rec.classification), std::nullopt};
}

void insert_entries(Catalog& catalog, std::vector<CatalogEntry> entries) {
  for (auto& e : entries) {
    if (!catalog.find(e.id)) catalog.entries.push_back(std::move(e));
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(), entry_less);
  catalog.entries.erase(std::unique(catalog.entries.begin(), catalog.entries.end(),
                                    [](const CatalogEntry& a, const CatalogEntry& b) { return a.id == b.id; }),
                        catalog.entries.end());
}

bool extend_closure(Catalog& catalog, const BuildOptions& opts) {
  std::vector<const CatalogEntry*> frontier;
  for (const auto& e : catalog.entries) frontier.push_back(&e);

  while (true) {
    // First discoverer in frontier order wins; frontier is in catalog order.
    std::map<CanonicalKey, DiscoveredFrom> found;
    for (const CatalogEntry* parent : frontier) {
      const auto* b = std::get_if<Branching>(&parent->classification);
      if (!b) continue;
      for (const Offspring& o : b->offspring) {
        if (catalog.find(o.key)) continue;
        found.try_emplace(o.key, DiscoveredFrom{parent->id.id(), b->at});
      }
    }
    if (found.empty()) return true;

    bool capped = false;
    std::vector<CanonicalKey> ids;
    for (const auto& [key, from] : found) {
      if (catalog.entries.size() + ids.size() >= catalog.parameters.entry_cap) {
        capped = true;
        break;
      }
      ids.push_back(key);
    }
    std::vector<CatalogEntry> fresh = classify_all(ids, catalog.parameters.budget, opts);
    for (auto& e : fresh) e.discovered_from = found.at(e.id);
    std::vector<CanonicalKey> fresh_ids = ids;
    insert_entries(catalog, std::move(fresh));
    if (capped) {
      catalog.parameters.complete = false;
      return false;
    }
    frontier.clear();
    for (const auto& id : fresh_ids) frontier.push_back(catalog.find(id));
  }
}

Catalog build_catalog(std::size_t max_cells, std::uint64_t budget, bool closure, std::size_t entry_cap,
                      const BuildOptions& opts) {
  if (budget < 1) throw DomainError("budget must be at least 1");
  Catalog cat;
  cat.parameters = {max_cells, budget, closure, entry_cap, true};

  std::vector<CanonicalKey> ids;
  for (const auto& seed : enumerate_seeds(max_cells)) {
    if (ids.size() >= entry_cap) {
      cat.parameters.complete = false;
      break;
    }
    ids.push_back(canonicalize(seed.live(), SymmetryMode::TranslationAndSquare));
  }
  cat.entries = classify_all(ids, budget, opts);
  std::sort(cat.entries.begin(), cat.entries.end(), entry_less);
  if (closure && cat.parameters.complete) extend_closure(cat, opts);
  return cat;
}

}  // namespace lcg
