#include <algorithm>
#include <map>
#include <sstream>

#include "lcg/pattern.hpp"

namespace lcg {

namespace {

ReplayReport diverged(std::uint64_t gen, const std::string& why) {
  return {false, gen, "generation " + std::to_string(gen) + ": " + why};
}

// Walks the orbit with the reference engine and checks the claim generation
// by generation. Recurrence is tracked with an ordered map so this path shares
// nothing with classify's hashing.
ReplayReport check(const Classification& claimed, RepeatMode mode, const LiveCellGroup& seed,
                   const std::vector<TraceEntry>* trace, const Limits& limits) {
  std::uint64_t stop = 0;
  bool single_at_stop = false;
  if (const auto* t = std::get_if<Terminating>(&claimed)) {
    stop = t->length;
  } else if (const auto* r = std::get_if<Repeating>(&claimed)) {
    if (r->period == 0) return diverged(0, "period must be positive");
    stop = r->transient + r->period;
    single_at_stop = true;
  } else if (const auto* b = std::get_if<Branching>(&claimed)) {
    stop = b->at;
  } else {
    stop = std::get<Unresolved>(claimed).budget;
    single_at_stop = true;
  }
  if (stop == 0) return diverged(0, "orbit cannot stop at generation 0");

  if (trace && !trace->empty()) {
    const std::size_t expected = single_at_stop ? stop + 1 : stop;
    if (trace->size() != expected) {
      return diverged(std::min<std::uint64_t>(trace->size(), expected),
                      "trace holds " + std::to_string(trace->size()) + " states, expected " + std::to_string(expected));
    }
  }

  std::map<std::pair<std::vector<Coord>, Coord>, std::uint64_t> seen;
  std::vector<Coord> anchors;
  Universe state = seed.as_universe();

  for (std::uint64_t gen = 0; gen <= stop; ++gen) {
    if (gen > 0) state = step(state, limits);
    const bool last = gen == stop;

    if (last && std::holds_alternative<Terminating>(claimed)) {
      if (!state.empty()) return diverged(gen, "expected no live cells");
      return {};
    }
    if (state.empty()) return diverged(gen, "all cells died");

    const auto groups = partition_cells(state.cells());
    if (last) {
      if (const auto* b = std::get_if<Branching>(&claimed)) {
        if (groups.size() < 2) return diverged(gen, "expected a split into several groups");
        std::vector<Offspring> got;
        for (const auto& g : groups) {
          CanonicalForm f = canonical_form(g, SymmetryMode::TranslationAndSquare);
          got.push_back({std::move(f.key), f.anchor});
        }
        auto less = [](const Offspring& x, const Offspring& y) {
          if (auto c = x.key <=> y.key; c != 0) return c < 0;
          return x.anchor < y.anchor;
        };
        std::sort(got.begin(), got.end(), less);
        if (got != b->offspring) return diverged(gen, "offspring differ");
        return {};
      }
    }
    if (groups.size() != 1) return diverged(gen, "split into " + std::to_string(groups.size()) + " groups");

    const Coord anchor = bounding_box_of(state.cells())->min;
    std::vector<Coord> nf = translation_normal_form(state.cells());
    if (trace && !trace->empty()) {
      const TraceEntry& te = (*trace)[gen];
      if (te.normal_form != nf || te.anchor != anchor) return diverged(gen, "state differs from the recorded trace");
    }
    anchors.push_back(anchor);
    auto key = std::make_pair(std::move(nf), mode == RepeatMode::Strict ? anchor : Coord{});
    auto it = seen.find(key);

    if (last) {
      if (const auto* r = std::get_if<Repeating>(&claimed)) {
        if (it == seen.end()) return diverged(gen, "expected a recurrence");
        if (it->second != r->transient) {
          return diverged(gen, "recurs to generation " + std::to_string(it->second) + ", not " +
                                   std::to_string(r->transient));
        }
        if (sub(anchor, anchors[r->transient]) != r->displacement) return diverged(gen, "displacement differs");
        return {};
      }
      if (it != seen.end()) return diverged(gen, "recurrence inside the budget");
      return {};
    }
    if (it != seen.end()) return diverged(gen, "state recurs early (first seen " + std::to_string(it->second) + ")");
    seen.emplace(std::move(key), gen);
  }
  return {};
}

}  // namespace

ReplayReport replay(const OrbitRecord& record, const LiveCellGroup& seed, const Limits& limits) {
  if (canonicalize(seed.live(), SymmetryMode::TranslationAndSquare) != record.seed) {
    return diverged(0, "seed key does not match the record");
  }
  if (const auto* u = std::get_if<Unresolved>(&record.classification); u && u->budget != record.budget) {
    return diverged(0, "unresolved budget differs from the record budget");
  }
  return check(record.classification, record.mode, seed, &record.trace, limits);
}

ReplayReport replay(const Classification& claimed, RepeatMode mode, const LiveCellGroup& seed, const Limits& limits) {
  return check(claimed, mode, seed, nullptr, limits);
}

}  // namespace lcg
