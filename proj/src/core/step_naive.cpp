#include <map>
#include <string>

#include "lcg/core.hpp"
#include "lcg/errors.hpp"

namespace lcg {

// Reference engine: count live neighbors per cell, apply B3/S23.
// Kept deliberately direct; step_fast is checked against it.
Universe step(const Universe& u, const Limits& limits) {
  std::map<Coord, int> counts;
  for (const Coord& c : u.cells()) {
    for (const Coord& n : neighbors(c)) ++counts[n];
  }
  std::vector<Coord> next;
  for (const auto& [cell, count] : counts) {
    if (count == 3 || (count == 2 && u.contains(cell))) next.push_back(cell);
  }
  if (next.size() > limits.population_limit) {
    throw ResourceLimitError("population " + std::to_string(next.size()) + " exceeds limit " +
                             std::to_string(limits.population_limit));
  }
  return Universe::from_sorted(std::move(next), u.generation() + 1);
}

}  // namespace lcg
