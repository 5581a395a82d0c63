#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "lcg/errors.hpp"
#include "lcg/lcg.hpp"

using namespace lcg;
using testing::cells;

namespace {

std::vector<oracle::CellSet> library_groups(std::span<const Coord> live) {
  std::vector<oracle::CellSet> out;
  for (const auto& g : partition_cells(live)) out.push_back(testing::to_oracle(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("partition examples") {
  CHECK(partition(Universe{}).empty());
  CHECK(partition(Universe(cells({{0, 0}, {2, 2}}))).size() == 1);
  CHECK(partition(Universe(cells({{0, 0}, {3, 3}}))).size() == 2);
  CHECK(partition(Universe(cells({{0, 0}, {2, 0}}))).size() == 1);
  CHECK(partition(Universe(cells({{0, 0}, {3, 1}}))).size() == 2);

  const Universe glider(testing::kGlider);
  const Universe block = translate(Universe(testing::kBlock), {12, 0});
  const auto groups = partition(merge(glider, block));
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].live() == glider.cell_vector());
  CHECK(groups[1].live() == block.cell_vector());
}

TEST_CASE("partition matches the dead-cell chain definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto live = testing::random_soup(rng, 14, trial % 2 ? 0.08 : 0.15);
    CHECK(library_groups(live) == oracle::chain_groups(testing::to_oracle(live)));
  }
}

TEST_CASE("partition is idempotent and composes over separated universes") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Universe a(testing::random_soup(rng, 10, 0.2));
    const Universe b = translate(Universe(testing::random_soup(rng, 10, 0.2)), {13, 0});
    const auto ga = partition_cells(a.cells());
    for (const auto& g : ga) CHECK(partition_cells(g).size() == 1);
    const auto gb = partition_cells(b.cells());
    CHECK(partition_cells(merge(a, b).cells()).size() == ga.size() + gb.size());
  }
}

TEST_CASE("boundary is exactly the dead cells with a live neighbor") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    for (const auto& g : partition(Universe(testing::random_soup(rng, 9, 0.3)))) {
      oracle::CellSet expect;
      const oracle::CellSet live = testing::to_oracle(g.live());
      for (auto [x, y] : live)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx)
            if (!live.count({x + dx, y + dy})) expect.insert({x + dx, y + dy});
      CHECK(testing::to_oracle(g.boundary()) == expect);
    }
  }
}

TEST_CASE("isolation: no dead cell touches two groups") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto groups = partition(Universe(testing::random_soup(rng, 16, 0.12)));
    std::map<Coord, std::size_t> owner;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (const Coord& d : groups[i].boundary()) {
        const auto [it, fresh] = owner.emplace(d, i);
        CHECK((fresh || it->second == i));
      }
    }
  }
}

TEST_CASE("lcg_successors") {
  CHECK(lcg_successors(LiveCellGroup(cells({{0, 0}}))).empty());
  const auto s = lcg_successors(LiveCellGroup(testing::kBlinkerH));
  REQUIRE(s.size() == 1);
  CHECK(s[0].live() == testing::kBlinkerV);
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(cells({{5, 5}}), SymmetryMode::Translation) ==
        canonicalize(cells({{0, 0}}), SymmetryMode::Translation));
  std::vector<Coord> rotated;
  for (const Coord& c : testing::kGlider) rotated.push_back(apply(Symmetry::Rot90, c));
  CHECK(canonicalize(testing::kGlider, SymmetryMode::TranslationAndSquare) ==
        canonicalize(rotated, SymmetryMode::TranslationAndSquare));
  CHECK(canonicalize(testing::kGlider, SymmetryMode::Translation) !=
        canonicalize(rotated, SymmetryMode::Translation));
  CHECK_THROWS_AS(canonicalize(std::vector<Coord>{}, SymmetryMode::Translation), DomainError);

  const CanonicalKey k = canonicalize(testing::kGlider, SymmetryMode::TranslationAndSquare);
  CHECK(canonicalize(k.normal_form(), SymmetryMode::TranslationAndSquare) == k);
  CHECK(k.id().size() == 16);
}

TEST_CASE("square normal form matches the independent oracle") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    auto live = testing::random_soup(rng, 6, 0.4, {-3, 8});
    if (live.empty()) continue;
    std::vector<Coord> expect;
    for (auto [y, x] : oracle::d8_normal_form(testing::to_oracle(live))) expect.push_back({x, y});
    CHECK(square_normal_form(live) == expect);
    const CanonicalForm f = canonical_form(live, SymmetryMode::TranslationAndSquare);
    CHECK(oriented_normal_form(live, f.symmetry) == expect);
    CHECK(f.anchor == bounding_box_of(live)->min);
  }
}

TEST_CASE("canonical keys are invariant under all symmetries and translations") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const Universe u(testing::random_soup(rng, 5, 0.5));
    if (u.empty()) continue;
    const CanonicalKey k = canonicalize(u.cells(), SymmetryMode::TranslationAndSquare);
    for (Symmetry s : kAllSymmetries) {
      const Universe v = translate(transform(u, s), {trial * 7, -trial});
      CHECK(canonicalize(v.cells(), SymmetryMode::TranslationAndSquare) == k);
    }
  }
}
