#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcg/core.hpp"
#include "oracles.hpp"

namespace testing {

inline std::vector<lcg::Coord> cells(std::initializer_list<std::pair<std::int64_t, std::int64_t>> xy) {
  std::vector<lcg::Coord> out;
  for (auto [x, y] : xy) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::CellSet to_oracle(std::span<const lcg::Coord> cs) {
  oracle::CellSet s;
  for (const auto& c : cs) s.insert({c.x, c.y});
  return s;
}

inline std::vector<lcg::Coord> from_oracle(const oracle::CellSet& s) {
  std::vector<lcg::Coord> out;
  for (auto [x, y] : s) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

/// Each cell of a side x side square alive with probability `density`.
inline std::vector<lcg::Coord> random_soup(std::mt19937_64& rng, std::int64_t side, double density,
                                           lcg::Coord origin = {}) {
  std::bernoulli_distribution alive(density);
  std::vector<lcg::Coord> out;
  for (std::int64_t y = 0; y < side; ++y)
    for (std::int64_t x = 0; x < side; ++x)
      if (alive(rng)) out.push_back({origin.x + x, origin.y + y});
  return out;
}

inline std::string data_path(const std::string& name) { return std::string(LCG_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const std::vector<lcg::Coord> kGlider = cells({{1, 0}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
inline const std::vector<lcg::Coord> kBlock = cells({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
inline const std::vector<lcg::Coord> kBlinkerH = cells({{-1, 0}, {0, 0}, {1, 0}});
inline const std::vector<lcg::Coord> kBlinkerV = cells({{0, -1}, {0, 0}, {0, 1}});
inline const std::vector<lcg::Coord> kLTromino = cells({{0, 0}, {1, 0}, {0, 1}});
inline const std::vector<lcg::Coord> kStraightTriomino = cells({{0, 0}, {1, 0}, {2, 0}});

}  // namespace testing
