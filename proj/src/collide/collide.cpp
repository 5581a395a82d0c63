#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "lcg/collide.hpp"
#include "lcg/errors.hpp"
#include "settle_internal.hpp"

namespace lcg {

const char* to_string(CollisionStatus s) {
  switch (s) {
    case CollisionStatus::Settled: return "settled";
    case CollisionStatus::NoInteraction: return "no_interaction";
    case CollisionStatus::Unresolved: return "unresolved";
  }
  return "unresolved";
}

std::vector<Coord> Participant::at_phase(std::uint64_t phase, const Limits& limits) const {
  if (phase >= period) throw InvalidSpecError("phase " + std::to_string(phase) + " is not below period " +
                                              std::to_string(period));
  Universe u = step_n(Universe(cells), phase, Engine::Fast, limits);
  return translation_normal_form(u.cells());
}

namespace {

Participant from_orbit(std::string id, std::span<const Coord> seed, const Classification& c, const Limits& limits) {
  const auto* r = std::get_if<Repeating>(&c);
  if (!r) throw InvalidSpecError("pattern " + id + " is " + kind_name(c) + ", not repeating");
  Universe on_cycle = step_n(Universe({seed.begin(), seed.end()}), r->transient, Engine::Fast, limits);
  return {std::move(id), translation_normal_form(on_cycle.cells()), r->period, r->displacement};
}

const CatalogEntry& lookup(const Catalog& catalog, const std::string& id) {
  const CatalogEntry* e = catalog.find(id);
  if (!e) throw InvalidSpecError("no catalog entry with id " + id);
  return *e;
}

struct Placed {
  Universe a;
  Universe b;
  Universe joint;
};

Placed place(const Participant& a, const Participant& b, const CollisionSpec& spec, const Limits& limits) {
  Placed p;
  p.a = Universe::from_sorted(a.at_phase(spec.phase_a, limits));
  p.b = translate(Universe::from_sorted(b.at_phase(spec.phase_b, limits)), spec.offset);
  p.joint = merge(p.a, p.b);
  const auto groups = partition_cells(p.joint.cells());
  if (groups.size() != 2 || p.joint.population() != p.a.population() + p.b.population()) {
    throw InvalidSpecError("placement at offset (" + std::to_string(spec.offset.x) + "," +
                           std::to_string(spec.offset.y) + ") does not start as two separate groups");
  }
  return p;
}

bool splits_as(const std::vector<std::vector<Coord>>& groups, const Universe& a, const Universe& b) {
  if (groups.size() != 2) return false;
  const auto& ca = a.cell_vector();
  const auto& cb = b.cell_vector();
  return (groups[0] == ca && groups[1] == cb) || (groups[0] == cb && groups[1] == ca);
}

CollisionOutcome run(const Participant& pa, const Participant& pb, const CollisionSpec& spec,
                     const CollideOptions& opts, bool stop_at_onset) {
  CollisionOutcome out;
  out.spec = spec;
  Placed p = place(pa, pb, spec, opts.limits);
  CycleOracle oracle(opts);
  const std::uint64_t common = std::lcm(pa.period, pb.period);

  try {
    for (std::uint64_t t = 0;; ++t) {
      if (t > 0) {
        p.joint = advance(p.joint, opts.engine, opts.limits);
        p.a = advance(p.a, opts.engine, opts.limits);
        p.b = advance(p.b, opts.engine, opts.limits);
      }
      const auto groups = partition_cells(p.joint.cells());
      if (!splits_as(groups, p.a, p.b)) {
        out.onset = t;
        break;
      }
      const bool at_horizon = t >= spec.horizon;
      if (at_horizon || t % common == 0) {
        std::vector<const CycleInfo*> infos{&oracle.lookup(groups[0]), &oracle.lookup(groups[1])};
        if (at_horizon || detail::never_interact(groups, infos, opts)) {
          out.status = CollisionStatus::NoInteraction;
          out.census_generation = t;
          out.census = detail::census_of(groups, infos);
          for (const auto& c : out.census)
            if (c.moving()) out.escaping.push_back(c);
          return out;
        }
      }
    }
  } catch (const ResourceLimitError& e) {
    out.status = CollisionStatus::Unresolved;
    out.diagnostic = e.what();
    return out;
  }
  if (stop_at_onset) return out;

  SettleResult s = settle(p.joint, spec.horizon, oracle, opts);
  out.status = s.status == SettleStatus::Settled ? CollisionStatus::Settled : CollisionStatus::Unresolved;
  out.census_generation = s.generation;
  out.census = std::move(s.census);
  for (const auto& c : out.census)
    if (c.moving()) out.escaping.push_back(c);
  out.diagnostic = std::move(s.diagnostic);
  return out;
}

}  // namespace

Participant participant_from(const CatalogEntry& entry, const Limits& limits) {
  return from_orbit(entry.id.id(), entry.cells(), entry.classification, limits);
}

Participant participant_from_cells(std::span<const Coord> cells, std::uint64_t budget, const Limits& limits) {
  const auto groups = partition_cells(cells);
  if (groups.size() != 1) throw InvalidSpecError("a collision participant must be a single live cell group");
  LiveCellGroup g(groups.front());
  OrbitRecord rec = classify(g, budget, RepeatMode::Translation, {Engine::Fast, limits, false});
  return from_orbit(rec.seed.id(), g.live(), rec.classification, limits);
}

Universe arrange(const Participant& a, const Participant& b, const CollisionSpec& spec, const Limits& limits) {
  return place(a, b, spec, limits).joint;
}

Universe arrange(const CollisionSpec& spec, const Catalog& catalog, const Limits& limits) {
  return arrange(participant_from(lookup(catalog, spec.a), limits), participant_from(lookup(catalog, spec.b), limits),
                 spec, limits);
}

std::optional<std::uint64_t> interaction_onset(const Participant& a, const Participant& b, const CollisionSpec& spec,
                                               const CollideOptions& opts) {
  return run(a, b, spec, opts, true).onset;
}

std::optional<std::uint64_t> interaction_onset(const CollisionSpec& spec, const Catalog& catalog,
                                               const CollideOptions& opts) {
  return interaction_onset(participant_from(lookup(catalog, spec.a), opts.limits),
                           participant_from(lookup(catalog, spec.b), opts.limits), spec, opts);
}

CollisionOutcome collide(const Participant& a, const Participant& b, const CollisionSpec& spec,
                         const CollideOptions& opts) {
  return run(a, b, spec, opts, false);
}

CollisionOutcome collide(const CollisionSpec& spec, const Catalog& catalog, const CollideOptions& opts) {
  return collide(participant_from(lookup(catalog, spec.a), opts.limits),
                 participant_from(lookup(catalog, spec.b), opts.limits), spec, opts);
}

std::vector<Coord> window_offsets(std::int64_t window) {
  if (window < 0) throw DomainError("window must be non-negative");
  std::vector<Coord> out;
  for (std::int64_t dy = -window; dy <= window; ++dy)
    for (std::int64_t dx = -window; dx <= window; ++dx) out.push_back({dx, dy});
  std::stable_sort(out.begin(), out.end(), [](Coord p, Coord q) {
    return std::max(std::abs(p.x), std::abs(p.y)) < std::max(std::abs(q.x), std::abs(q.y));
  });
  return out;
}

CollisionTable collision_table(const Participant& a, const Participant& b, std::int64_t window, std::uint64_t horizon,
                               const Catalog& catalog, const CollideOptions& opts) {
  std::vector<CollisionSpec> specs;
  for (const Coord& off : window_offsets(window))
    for (std::uint64_t pa = 0; pa < a.period; ++pa)
      for (std::uint64_t pb = 0; pb < b.period; ++pb) specs.push_back({a.id, b.id, off, pa, pb, horizon});

  std::vector<std::optional<CollisionOutcome>> results(specs.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = collide(a, b, specs[static_cast<std::size_t>(i)], opts);
    } catch (const InvalidSpecError&) {
      // Overlapping or touching placement: not part of the table.
    } catch (...) {
#pragma omp critical(lcg_collision_table)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CollisionTable table{a.id, b.id, window, horizon, {}, {}};
  std::map<CanonicalKey, DiscoveredFrom> novel;
  for (auto& r : results) {
    if (!r) continue;
    if (r->status == CollisionStatus::Settled) {
      for (const auto& c : r->census)
        if (!catalog.find(c.id)) novel.try_emplace(c.id, DiscoveredFrom{a.id + "+" + b.id, r->census_generation});
    }
    table.rows.push_back(std::move(*r));
  }
  const std::uint64_t budget = catalog.parameters.budget > 0 ? catalog.parameters.budget : kDefaultBudget;
  for (const auto& [key, from] : novel) {
    CatalogEntry e = make_entry(key, budget, {opts.engine, opts.limits});
    e.discovered_from = from;
    table.catalog_additions.push_back(std::move(e));
  }
  std::sort(table.catalog_additions.begin(), table.catalog_additions.end(), entry_less);
  return table;
}

}  // namespace lcg
