#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lcg/collide.hpp"
#include "lcg/errors.hpp"
#include "settle_internal.hpp"

namespace lcg {

namespace {

struct CellsHash {
  std::size_t operator()(const std::vector<Coord>& v) const noexcept {
    CoordHash h;
    std::size_t s = v.size();
    for (const Coord& c : v) s = s * 1099511628211ULL ^ h(c);
    return s;
  }
};

Box shifted(const Box& b, Coord d) { return {add(b.min, d), add(b.max, d)}; }

Coord scaled(Coord d, std::uint64_t k) {
  const auto m = static_cast<std::int64_t>(k);
  std::int64_t x, y;
  if (__builtin_mul_overflow(d.x, m, &x) || __builtin_mul_overflow(d.y, m, &y)) {
    throw OverflowError("displacement overflow");
  }
  return {x, y};
}

}  // namespace

bool census_less(const CensusItem& a, const CensusItem& b) {
  if (a.id != b.id) return a.id < b.id;
  if (a.anchor != b.anchor) return a.anchor < b.anchor;
  return a.phase < b.phase;
}

const CycleInfo& CycleOracle::lookup(std::span<const Coord> cells) {
  std::vector<Coord> nf = translation_normal_form(cells);
  if (auto it = memo_.find(nf); it != memo_.end()) return it->second;

  CycleInfo info;
  ClassifyOptions co{opts_.engine, opts_.limits, true};
  OrbitRecord rec = classify(LiveCellGroup(nf), opts_.settle_budget, RepeatMode::Translation, co);
  if (const auto* r = std::get_if<Repeating>(&rec.classification); r && r->transient == 0) {
    info.cyclic = true;
    info.period = r->period;
    info.displacement = r->displacement;
    // Representative: smallest (T+D8 form, T form) over the cycle's states.
    std::size_t best = 0;
    std::vector<Coord> best_sq = square_normal_form(rec.trace[0].normal_form);
    for (std::size_t i = 1; i < r->period; ++i) {
      std::vector<Coord> sq = square_normal_form(rec.trace[i].normal_form);
      if (sq < best_sq || (sq == best_sq && rec.trace[i].normal_form < rec.trace[best].normal_form)) {
        best = i;
        best_sq = std::move(sq);
      }
    }
    info.cycle_id = CanonicalKey(std::move(best_sq));
    info.phase = (r->period - best) % r->period;
  }
  return memo_.emplace(std::move(nf), std::move(info)).first->second;
}

namespace detail {

bool never_interact(const std::vector<std::vector<Coord>>& groups, const std::vector<const CycleInfo*>& infos,
                    const CollideOptions& opts) {
  std::uint64_t common = 1;
  std::uint64_t stationary_common = 1;
  std::vector<std::size_t> stationary;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!infos[i]->cyclic) return false;
    common = std::lcm(common, infos[i]->period);
    if (common > opts.max_common_period) return false;
    if (infos[i]->displacement == Coord{}) {
      stationary.push_back(i);
      stationary_common = std::lcm(stationary_common, infos[i]->period);
    }
  }

  // Stationary groups: their union must return to itself after the common
  // period without ever merging, which makes it periodic forever.
  if (stationary.size() > 1) {
    std::vector<Coord> cells;
    for (std::size_t i : stationary) cells.insert(cells.end(), groups[i].begin(), groups[i].end());
    const Universe start(std::move(cells));
    Universe cur = start;
    for (std::uint64_t s = 0; s < stationary_common; ++s) {
      cur = advance(cur, opts.engine, opts.limits);
      if (partition_cells(cur.cells()).size() != stationary.size()) return false;
    }
    if (!same_cells(cur, start)) return false;
  }
  if (stationary.size() == groups.size()) return true;

  // Hull of each group over one common period, and its drift per period.
  std::vector<Box> hulls(groups.size());
  std::vector<Coord> drift(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Universe cur = Universe::from_sorted(groups[i]);
    Box h = *cur.bounding_box();
    for (std::uint64_t s = 0; s < common; ++s) {
      cur = advance(cur, opts.engine, opts.limits);
      h = hull(h, *cur.bounding_box());
    }
    hulls[i] = h;
    drift[i] = scaled(infos[i]->displacement, common / infos[i]->period);
  }
  // The box gap of two linearly moving hulls is convex in time, so a gap of
  // at least 3 now that does not shrink over one period never shrinks later.
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (drift[i] == Coord{} && drift[j] == Coord{}) continue;
      const std::int64_t now = chebyshev_gap(hulls[i], hulls[j]);
      if (now < 3) return false;
      if (drift[i] == drift[j]) continue;
      const std::int64_t later = chebyshev_gap(shifted(hulls[i], drift[i]), shifted(hulls[j], drift[j]));
      if (later <= now) return false;
    }
  }
  return true;
}

std::vector<CensusItem> census_of(const std::vector<std::vector<Coord>>& groups,
                                  const std::vector<const CycleInfo*>& infos) {
  std::vector<CensusItem> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const CycleInfo& c = *infos[i];
    if (!c.cyclic) {
      out.push_back({canonicalize(groups[i], SymmetryMode::TranslationAndSquare), bounding_box_of(groups[i])->min, 0, 0,
                     Velocity{}});
      continue;
    }
    const auto p = static_cast<std::int64_t>(c.period);
    out.push_back({c.cycle_id, bounding_box_of(groups[i])->min, c.phase, c.period,
                   Velocity{Rational::of(c.displacement.x, p), Rational::of(c.displacement.y, p)}});
  }
  std::sort(out.begin(), out.end(), census_less);
  return out;
}

}  // namespace detail

SettleResult settle(const Universe& u, std::uint64_t horizon, CycleOracle& oracle, const CollideOptions& opts) {
  SettleResult res;
  // A group can only be on a cycle if its shape was seen at an earlier
  // generation; this keeps chaotic phases away from the oracle.
  std::unordered_map<std::vector<Coord>, std::uint64_t, CellsHash> last_seen;
  Universe cur = u;
  try {
    while (true) {
      const std::uint64_t t = cur.generation();
      auto groups = partition_cells(cur.cells());
      bool candidates = true;
      std::vector<std::vector<Coord>> shapes;
      for (const auto& g : groups) {
        shapes.push_back(translation_normal_form(g));
        auto it = last_seen.find(shapes.back());
        if (it == last_seen.end() || it->second >= t) candidates = false;
      }
      for (auto& s : shapes) last_seen[std::move(s)] = t;
      if (candidates) {
        std::vector<const CycleInfo*> infos;
        for (const auto& g : groups) infos.push_back(&oracle.lookup(g));
        if (detail::never_interact(groups, infos, opts)) {
          res.status = SettleStatus::Settled;
          res.generation = t;
          res.census = detail::census_of(groups, infos);
          return res;
        }
      }
      if (groups.empty()) {
        res.status = SettleStatus::Settled;
        res.generation = t;
        return res;
      }
      if (t >= horizon) {
        res.generation = t;
        res.diagnostic = "horizon reached before the groups settled";
        return res;
      }
      cur = advance(cur, opts.engine, opts.limits);
    }
  } catch (const ResourceLimitError& e) {
    res.generation = cur.generation();
    res.diagnostic = e.what();
    return res;
  }
}

SettleResult settle(const Universe& u, std::uint64_t horizon, const CollideOptions& opts) {
  CycleOracle oracle(opts);
  return settle(u, horizon, oracle, opts);
}

}  // namespace lcg
