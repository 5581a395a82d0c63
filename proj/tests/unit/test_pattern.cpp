#include <doctest.h>

#include "helpers.hpp"
#include "lcg/errors.hpp"
#include "lcg/pattern.hpp"

using namespace lcg;
using testing::cells;

namespace {

OrbitRecord run(const std::vector<Coord>& live, std::uint64_t budget = kDefaultBudget,
                RepeatMode mode = RepeatMode::Translation) {
  return classify(LiveCellGroup(live), budget, mode);
}

std::vector<Coord> rotate(const std::vector<Coord>& live, Symmetry s) {
  std::vector<Coord> out;
  for (const Coord& c : live) out.push_back(apply(s, c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("classification examples") {
  CHECK(run(cells({{0, 0}})).classification == Classification{Terminating{1}});

  const OrbitRecord g = run(testing::kGlider);
  CHECK(g.classification == Classification{Repeating{0, 4, {1, 1}}});
  CHECK(g.velocity() == Velocity{Rational{1, 4}, Rational{1, 4}});
  CHECK(describe(g.classification) == "repeating transient=0 period=4 displacement=(1,1) velocity=(1/4,1/4)");

  CHECK(run(testing::kBlock).classification == Classification{Repeating{0, 1, {0, 0}}});
  CHECK(run(testing::kLTromino).classification == Classification{Repeating{1, 1, {0, 0}}});
}

TEST_CASE("straight triomino is already a blinker phase") {
  // Hand simulation: the row {(0,0),(1,0),(2,0)} becomes the column
  // {(1,-1),(1,0),(1,1)} and then the row again, so generation 2 recurs to
  // generation 0: no transient, period 2.
  const OrbitRecord r = run(testing::kStraightTriomino);
  CHECK(r.classification == Classification{Repeating{0, 2, {0, 0}}});
  REQUIRE(r.trace.size() >= 2);
  CHECK(r.trace[1].normal_form == cells({{0, 0}, {0, 1}, {0, 2}}));
  CHECK(r.trace[1].anchor == Coord{1, -1});
}

TEST_CASE("strict mode never repeats a moving pattern") {
  CHECK(run(testing::kGlider, 4096, RepeatMode::Strict).classification == Classification{Unresolved{4096}});
  CHECK(run(testing::kGlider, 17, RepeatMode::Strict).classification == Classification{Unresolved{17}});
  CHECK(run(testing::kBlinkerH, 64, RepeatMode::Strict).classification == Classification{Repeating{0, 2, {0, 0}}});
}

TEST_CASE("branching stops at the first split") {
  const OrbitRecord r = run(testing::cells({{1, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 2}}));  // R-pentomino
  const auto* b = std::get_if<Branching>(&r.classification);
  REQUIRE(b != nullptr);
  CHECK(r.trace.size() == b->at);
  const auto split = step_n(Universe(cells({{1, 0}, {2, 0}, {0, 1}, {1, 1}, {1, 2}})), b->at);
  CHECK(partition(split).size() == b->offspring.size());
  CHECK(std::is_sorted(b->offspring.begin(), b->offspring.end(),
                       [](const Offspring& x, const Offspring& y) { return x.key < y.key; }));
}

TEST_CASE("budget counts steps") {
  // A glider needs 4 steps to show its period.
  CHECK(run(testing::kGlider, 3).classification == Classification{Unresolved{3}});
  CHECK(run(testing::kGlider, 4).classification == Classification{Repeating{0, 4, {1, 1}}});
  CHECK(run(cells({{0, 0}}), 1).classification == Classification{Terminating{1}});
  CHECK_THROWS_AS(run(testing::kGlider, 0), DomainError);
}

TEST_CASE("budget monotonicity") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto groups = partition(Universe(testing::random_soup(rng, 4, 0.5)));
    if (groups.empty()) continue;
    const OrbitRecord small = classify(groups[0], 64);
    if (std::holds_alternative<Unresolved>(small.classification)) continue;
    for (std::uint64_t b : {65, 200, 1000}) {
      const OrbitRecord big = classify(groups[0], b);
      CHECK(big.classification == small.classification);
      CHECK(big.trace == small.trace);
    }
  }
}

TEST_CASE("symmetry covariance of classification") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const auto groups = partition(Universe(testing::random_soup(rng, 4, 0.55)));
    if (groups.empty()) continue;
    const OrbitRecord base = classify(groups[0], 512);
    for (Symmetry s : kAllSymmetries) {
      const OrbitRecord r = classify(LiveCellGroup(rotate(groups[0].live(), s)), 512);
      CHECK(r.classification.index() == base.classification.index());
      if (const auto* rb = std::get_if<Repeating>(&base.classification)) {
        const auto& rr = std::get<Repeating>(r.classification);
        CHECK(rr.transient == rb->transient);
        CHECK(rr.period == rb->period);
        CHECK(rr.displacement == apply(s, rb->displacement));
      }
    }
  }
  const OrbitRecord g = classify(LiveCellGroup(rotate(testing::kGlider, Symmetry::FlipX)));
  CHECK(g.classification == Classification{Repeating{0, 4, {-1, 1}}});
}

TEST_CASE("velocity bound and mode refinement") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto groups = partition(Universe(testing::random_soup(rng, 5, 0.45)));
    for (const auto& g : groups) {
      const OrbitRecord t = classify(g, 300);
      if (const auto* r = std::get_if<Repeating>(&t.classification)) {
        CHECK(std::abs(r->displacement.x) * 2 <= static_cast<std::int64_t>(r->period));
        CHECK(std::abs(r->displacement.y) * 2 <= static_cast<std::int64_t>(r->period));
      }
      const OrbitRecord s = classify(g, 300, RepeatMode::Strict);
      if (const auto* rs = std::get_if<Repeating>(&s.classification)) {
        const auto* rt = std::get_if<Repeating>(&t.classification);
        REQUIRE(rt != nullptr);
        CHECK(rt->displacement == Coord{0, 0});
        CHECK(rt->transient + rt->period <= rs->transient + rs->period);
      }
    }
  }
}

TEST_CASE("rationals are reduced") {
  CHECK(Rational::of(2, 4).str() == "1/2");
  CHECK(Rational::of(-2, 4).str() == "-1/2");
  CHECK(Rational::of(0, 7).str() == "0");
  CHECK(Rational::of(3, -6) == Rational{-1, 2});
  CHECK(describe(Terminating{1}) == "terminating length=1");
}

TEST_CASE("replay round-trips classify") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    for (const auto& g : partition(Universe(testing::random_soup(rng, 5, 0.4)))) {
      for (RepeatMode m : {RepeatMode::Translation, RepeatMode::Strict}) {
        const OrbitRecord r = classify(g, 128, m);
        CHECK(replay(r, g).ok);
        CHECK(replay(r.classification, m, g).ok);
      }
    }
  }
}

TEST_CASE("replay reports the first divergence for a perturbed seed") {
  const OrbitRecord r = run(testing::kGlider);
  auto moved = testing::kGlider;
  moved[0].x -= 1;  // (1,0) -> (0,0)
  const ReplayReport rep = replay(r, LiveCellGroup(moved));
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.first_divergence.has_value());
  CHECK(*rep.first_divergence == 0);
  CHECK_FALSE(rep.detail.empty());

  const OrbitRecord dies = run(cells({{0, 0}, {1, 0}}));
  CHECK(dies.classification == Classification{Terminating{1}});
  CHECK(replay(dies, LiveCellGroup(cells({{0, 0}, {1, 0}}))).ok);
  const ReplayReport wrong = replay(Classification{Terminating{2}}, RepeatMode::Translation,
                                    LiveCellGroup(cells({{0, 0}, {1, 0}})));
  CHECK_FALSE(wrong.ok);
  CHECK(wrong.first_divergence == 1);
}
