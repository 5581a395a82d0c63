// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            run all
//   acceptance --only N   run criterion N
// Exit status is non-zero when any selected criterion fails.

#include <omp.h>

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "helpers.hpp"
#include "lcg/collide.hpp"
#include "lcg/errors.hpp"
#include "lcg/formats.hpp"

using namespace lcg;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits per criterion, in seconds. All other checks are exact.
constexpr double kLimit1 = 1, kLimit2 = 1, kLimit3 = 60, kLimit4 = 60, kLimit5 = 1, kLimit6 = 60, kLimit7 = 30,
                 kLimit8 = 30, kLimit9 = 30, kLimit10 = 300, kLimit11 = 30;

constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

// 1. Glider law.
void glider_law(Outcome& o) {
  const OrbitRecord r = classify(LiveCellGroup(testing::kGlider), kDefaultBudget, RepeatMode::Translation);
  const auto* rep = std::get_if<Repeating>(&r.classification);
  o.require(rep != nullptr, "glider is Repeating");
  if (!rep) return;
  o.note << describe(r.classification);
  o.require(rep->transient == 0 && rep->period == 4, "transient 0, period 4");
  o.require(std::abs(rep->displacement.x) == 1 && std::abs(rep->displacement.y) == 1, "displacement (+-1,+-1)");
  const Universe g(testing::kGlider);
  o.require(same_cells(step_n(g, 4, Engine::Naive), translate(g, rep->displacement)), "step_n(glider,4) = shifted");
  o.require(same_cells(step_n(g, 4, Engine::Fast), translate(g, rep->displacement)), "fast engine agrees");
}

// 2. Strict-mode contrast.
void strict_contrast(Outcome& o) {
  const OrbitRecord r = classify(LiveCellGroup(testing::kGlider), 4096, RepeatMode::Strict);
  o.note << describe(r.classification);
  o.require(r.classification == Classification{Unresolved{4096}}, "Unresolved at budget 4096");
}

const Catalog& closure_catalog() {
  static const Catalog c = build_catalog(4, 4096, true);
  return c;
}

// 3. Taxonomy completeness.
void taxonomy(Outcome& o) {
  const Catalog& c = closure_catalog();
  std::map<std::string, std::size_t> kinds;
  std::size_t replayed = 0;
  for (const auto& e : c.entries) {
    ++kinds[kind_name(e.classification)];
    const ReplayReport rep = replay(e.classification, RepeatMode::Translation, e.seed());
    if (rep.ok) {
      ++replayed;
    } else {
      o.require(false, "replay of " + e.id.id() + ": " + rep.detail);
    }
  }
  o.note << c.entries.size() << " entries (";
  for (const auto& [k, n] : kinds) o.note << k << " " << n << ", ";
  o.note << "replayed " << replayed << ")";
  o.require(kinds["unresolved"] == 0, "no Unresolved entries");
  o.require(c.parameters.complete, "closure complete");
}

// 4. Seed counts against the brute-force enumerator.
void seed_counts(Outcome& o) {
  std::size_t expected = 0;
  for (int k = 1; k <= 4; ++k) {
    expected += oracle::brute_force_seed_count(k);
    const std::size_t got = enumerate_seeds(static_cast<std::size_t>(k)).size();
    o.note << "K=" << k << ": " << got << "/" << expected << " ";
    o.require(got == expected, "K=" + std::to_string(k));
  }
}

// 5. Triomino facts, as stated by the criterion.
void triominoes(Outcome& o) {
  const OrbitRecord straight = classify(LiveCellGroup(testing::kStraightTriomino));
  const OrbitRecord l = classify(LiveCellGroup(testing::kLTromino));
  o.note << "straight: " << describe(straight.classification) << "; L: " << describe(l.classification);
  const auto* s = std::get_if<Repeating>(&straight.classification);
  const auto* lr = std::get_if<Repeating>(&l.classification);
  o.require(s && s->transient == 1 && s->period == 2, "straight triomino transient 1, period 2");
  o.require(lr && lr->transient == 1 && lr->period == 1, "L-tromino transient 1, period 1");
}

// 6. Branching census of the B-heptomino and R-pentomino.
void branching_census(Outcome& o) {
  for (const char* name : {"bheptomino.rle", "rpentomino.rle"}) {
    const PatternFile pf = parse_rle(testing::read_data(name));
    const LiveCellGroup seed(pf.cells);
    const OrbitRecord rec = classify(seed);
    o.require(std::holds_alternative<Branching>(rec.classification), std::string(name) + " branches");

    // Closure over the seed's offspring.
    Catalog cat;
    cat.parameters = {pf.cells.size(), kDefaultBudget, true, kDefaultEntryCap, true};
    insert_entries(cat, {make_entry(rec.seed, kDefaultBudget)});
    const bool closed = extend_closure(cat);
    o.require(closed, std::string(name) + " closure complete");

    std::vector<SettleResult> runs;
    for (Engine e : {Engine::Fast, Engine::Naive, Engine::Fast}) {
      CollideOptions opts;
      opts.engine = e;
      runs.push_back(settle(Universe(pf.cells), 4096, opts));
    }
    for (const auto& r : runs) o.require(r.status == SettleStatus::Settled, std::string(name) + " settles");
    o.require(runs[0].census == runs[1].census && runs[0].census == runs[2].census &&
                  runs[0].generation == runs[1].generation,
              std::string(name) + " census identical across runs and engines");

    std::size_t still = 0, oscillating = 0, moving = 0;
    for (const auto& c : runs[0].census) {
      if (c.moving()) {
        ++moving;
      } else if (c.period == 1) {
        ++still;
      } else {
        ++oscillating;
      }
    }
    const Participant glider = participant_from_cells(testing::kGlider);
    const CanonicalKey glider_id = canonicalize(glider.cells, SymmetryMode::TranslationAndSquare);
    std::size_t gliders = 0;
    for (const auto& c : runs[0].census) gliders += c.moving() && c.id == glider_id;
    o.note << name << ": settled at " << runs[0].generation << " into " << runs[0].census.size() << " groups ("
           << still << " still lifes, " << oscillating << " oscillators, " << gliders << " gliders"
           << (moving > gliders ? ", other spaceships" : "") << "), closure " << cat.entries.size()
           << " entries; vs 4 still lifes + 2 gliders: "
           << (still == 4 && oscillating == 0 && gliders == 2 && moving == 2 ? "matches" : "differs") << ". ";
  }
}

// 7. Engine differential.
void engine_differential(Outcome& o) {
  std::mt19937_64 rng(kSeed + 7);
  std::size_t checked = 0;
  for (int soup = 0; soup < 100; ++soup) {
    Universe u(testing::random_soup(rng, 32, 0.375));
    for (int g = 0; g < 256; ++g) {
      const Universe naive = step(u);
      if (!(step_fast(u) == naive)) {
        o.require(false, "soup " + std::to_string(soup) + " generation " + std::to_string(g));
        return;
      }
      u = naive;
      ++checked;
    }
  }
  o.note << checked << " generation pairs identical";
}

// 8. Isolation fuzz.
void isolation(Outcome& o) {
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_int_distribution<std::int64_t> side(4, 40);
  std::uniform_real_distribution<double> density(0.02, 0.5);
  std::size_t groups_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Universe u(testing::random_soup(rng, side(rng), density(rng), {-20, 7}));
    const auto groups = partition(u);
    groups_seen += groups.size();
    std::unordered_map<Coord, std::size_t, CoordHash> owner;
    for (const Coord& c : u.cells()) owner[c] = SIZE_MAX;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (const Coord& c : groups[i].live()) owner[c] = i;
    // Every dead cell adjacent to any live cell sees a single owning group.
    for (const auto& g : groups) {
      for (const Coord& d : g.boundary()) {
        std::set<std::size_t> touching;
        for (const Coord& n : neighbors(d))
          if (auto it = owner.find(n); it != owner.end()) touching.insert(it->second);
        if (touching.size() != 1) {
          o.require(false, "trial " + std::to_string(trial) + ": dead cell touches two groups");
          return;
        }
      }
    }
    // Idempotence: each group partitions to itself, and re-partitioning the
    // union of groups reproduces the groups.
    std::vector<Coord> all;
    for (const auto& g : groups) {
      const auto again = partition_cells(g.live());
      if (again.size() != 1 || again[0] != g.live()) {
        o.require(false, "trial " + std::to_string(trial) + ": group re-partitions");
        return;
      }
      all.insert(all.end(), g.live().begin(), g.live().end());
    }
    std::vector<std::vector<Coord>> original;
    for (const auto& g : groups) original.push_back(g.live());
    if (partition_cells(Universe(all).cells()) != original) {
      o.require(false, "trial " + std::to_string(trial) + ": partition not idempotent");
      return;
    }
  }
  o.note << "1000 universes, " << groups_seen << " groups";
}

// 9. Compositionality until contact.
void compositionality(Outcome& o) {
  std::mt19937_64 rng(kSeed + 9);
  std::uniform_int_distribution<int> count(2, 5);
  std::uniform_int_distribution<std::int64_t> pos(-30, 30);
  std::size_t steps = 0, universes = 0;
  while (universes < 100) {
    std::vector<Coord> cells;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const auto piece = testing::random_soup(rng, 5, 0.5, {pos(rng), pos(rng)});
      cells.insert(cells.end(), piece.begin(), piece.end());
    }
    Universe joint(cells);
    std::vector<LiveCellGroup> groups = partition(joint);
    if (groups.size() < 2) continue;
    ++universes;
    for (int gen = 0; gen < 128 && !groups.empty(); ++gen) {
      const Universe next = step(joint);
      std::vector<Coord> union_of_isolated;
      std::vector<std::vector<Coord>> isolated;
      for (const auto& g : groups) {
        const Universe alone = step(g.as_universe());
        // Joint step restricted to the group's influence region.
        std::vector<Coord> region = g.live();
        region.insert(region.end(), g.boundary().begin(), g.boundary().end());
        std::vector<Coord> restricted;
        for (const Coord& c : region)
          if (next.contains(c)) restricted.push_back(c);
        std::sort(restricted.begin(), restricted.end());
        if (restricted != alone.cell_vector()) {
          o.require(false, "universe " + std::to_string(universes) + " generation " + std::to_string(gen));
          return;
        }
        union_of_isolated.insert(union_of_isolated.end(), alone.cells().begin(), alone.cells().end());
        isolated.push_back(alone.cell_vector());
      }
      if (!same_cells(Universe(union_of_isolated), next)) {
        o.require(false, "joint step is not the union of isolated steps");
        return;
      }
      ++steps;
      // Stop at the first partition divergence: a next-generation group that
      // does not descend from a single current group.
      const auto next_groups = partition(next);
      bool diverged = false;
      for (const auto& ng : next_groups) {
        std::size_t parents = 0;
        for (const auto& iso : isolated)
          parents += std::any_of(ng.live().begin(), ng.live().end(),
                                 [&](const Coord& c) { return std::binary_search(iso.begin(), iso.end(), c); });
        if (parents != 1) diverged = true;
      }
      if (diverged) break;
      joint = next;
      groups = next_groups;
    }
  }
  o.note << universes << " universes, " << steps << " joint steps checked";
}

// 10. Collision sweep.
void collision_sweep(Outcome& o) {
  const Participant glider = participant_from_cells(testing::kGlider);
  const Participant block = participant_from_cells(testing::kBlock);
  const Catalog& catalog = closure_catalog();
  std::vector<std::string> renders;
  const int max_threads = omp_get_max_threads();
  std::vector<int> levels{1, std::max(2, max_threads), max_threads};
  CollisionTable first;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    omp_set_num_threads(levels[i]);
    CollisionTable t = collision_table(glider, block, 15, 2048, catalog);
    renders.push_back(table_to_string(t));
    if (i == 0) first = std::move(t);
  }
  omp_set_num_threads(max_threads);
  for (const auto& r : renders) o.require(r == renders[0], "byte-identical tables across thread counts");

  std::map<CollisionStatus, std::size_t> status;
  std::set<std::vector<CanonicalKey>> settled_classes;
  for (const auto& r : first.rows) {
    ++status[r.status];
    if (r.status == CollisionStatus::Settled) {
      std::vector<CanonicalKey> ids;
      for (const auto& c : r.census) ids.push_back(c.id);
      settled_classes.insert(ids);
    }
  }
  o.note << first.rows.size() << " rows (settled " << status[CollisionStatus::Settled] << ", no_interaction "
         << status[CollisionStatus::NoInteraction] << ", unresolved " << status[CollisionStatus::Unresolved] << "), "
         << settled_classes.size() << " settled census classes, thread levels";
  for (int l : levels) o.note << " " << l;
  o.require(settled_classes.size() >= 2, "at least 2 settled census classes");
}

// 11. Format round-trips.
void round_trips(Outcome& o) {
  const Catalog& c = closure_catalog();
  std::size_t patterns = 0;
  auto check = [&](const std::vector<Coord>& cells) {
    const std::vector<Coord> nf = cells.empty() ? std::vector<Coord>{} : translation_normal_form(cells);
    if (parse_rle(emit_rle(cells)).cells != nf) o.require(false, "RLE round-trip");
    if (parse_plaintext(emit_plaintext(cells)).cells != nf) o.require(false, "plaintext round-trip");
    ++patterns;
  };
  for (const auto& e : c.entries) check(e.cells());
  std::mt19937_64 rng(kSeed + 11);
  std::uniform_int_distribution<std::int64_t> side(1, 64), off(-1'000'000, 1'000'000);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int i = 0; i < 100; ++i) check(testing::random_soup(rng, side(rng), density(rng), {off(rng), off(rng)}));

  const std::string a = catalog_to_string(c);
  const std::string b = catalog_to_string(c);
  o.require(a == b, "two saves byte-equal");
  const Catalog loaded = catalog_from_string(a);
  o.require(loaded == c, "load(save(c)) = c");
  o.require(catalog_to_string(loaded) == a, "save(load(save(c))) byte-equal");
  o.note << patterns << " patterns round-tripped, catalog of " << c.entries.size() << " entries (" << a.size()
         << " bytes)";
}

struct Criterion {
  int number;
  const char* title;
  double limit;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "glider law", kLimit1, glider_law},
      {2, "strict-mode contrast", kLimit2, strict_contrast},
      {3, "taxonomy completeness", kLimit3, taxonomy},
      {4, "seed-count oracle", kLimit4, seed_counts},
      {5, "triomino facts", kLimit5, triominoes},
      {6, "branching census", kLimit6, branching_census},
      {7, "engine differential", kLimit7, engine_differential},
      {8, "isolation fuzz", kLimit8, isolation},
      {9, "compositionality", kLimit9, compositionality},
      {10, "collision sweep", kLimit10, collision_sweep},
      {11, "format round-trips", kLimit11, round_trips},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.number != only) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.limit) o.require(false, "time limit " + std::to_string(c.limit) + " s");
    all = all && o.pass;
    std::printf("%s criterion %2d %-24s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.title, secs,
                o.note.str().c_str());
  }
  return all ? 0 : 1;
}
