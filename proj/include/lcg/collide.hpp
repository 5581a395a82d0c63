#pragma once

// Pairwise encounters between repeating basic patterns: arrangement, onset
// of interaction, and the settled census of what comes out.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcg/enumerate.hpp"

namespace lcg {

inline constexpr std::uint64_t kDefaultSettleBudget = 256;

struct CollideOptions {
  Engine engine = Engine::Fast;
  Limits limits;
  /// Budget for classifying each candidate settled group in isolation.
  std::uint64_t settle_budget = kDefaultSettleBudget;
  /// Largest common period the non-interaction proof will simulate.
  std::uint64_t max_common_period = 1024;
};

/// Cycle membership of one group shape, as seen in isolation.
struct CycleInfo {
  bool cyclic = false;  // Repeating with transient 0 within the settle budget
  std::uint64_t period = 0;
  Coord displacement;  // per period
  CanonicalKey cycle_id;  // T+D8 key of the cycle's representative state
  std::uint64_t phase = 0;  // steps from the representative state to this one
};

/// Memoized cycle lookups keyed by translation normal form.
class CycleOracle {
 public:
  explicit CycleOracle(const CollideOptions& opts) : opts_(opts) {}
  const CycleInfo& lookup(std::span<const Coord> cells);

 private:
  CollideOptions opts_;
  std::map<std::vector<Coord>, CycleInfo> memo_;
};

struct CensusItem {
  CanonicalKey id;  // cycle representative, T+D8
  Coord anchor;     // bounding-box minimum at the census generation
  std::uint64_t phase = 0;
  std::uint64_t period = 0;
  Velocity velocity;

  bool moving() const { return velocity.dx.num != 0 || velocity.dy.num != 0; }
  friend bool operator==(const CensusItem&, const CensusItem&) = default;
};

bool census_less(const CensusItem& a, const CensusItem& b);

enum class SettleStatus : std::uint8_t { Settled, Unresolved };

struct SettleResult {
  SettleStatus status = SettleStatus::Unresolved;
  std::uint64_t generation = 0;  // generation of the census, or where the search stopped
  std::vector<CensusItem> census;  // sorted by census_less
  std::string diagnostic;
};

/// Evolve until every group is on a cycle and provably never meets another
/// (stationary groups jointly periodic, moving ones receding), or `horizon`.
SettleResult settle(const Universe& u, std::uint64_t horizon, const CollideOptions& opts = {});
SettleResult settle(const Universe& u, std::uint64_t horizon, CycleOracle& oracle, const CollideOptions& opts);

/// A repeating pattern in a fixed orientation, ready to be placed.
struct Participant {
  std::string id;            // T+D8 id of the source
  std::vector<Coord> cells;  // phase 0: the first on-cycle state, min corner at origin
  std::uint64_t period = 1;
  Coord displacement;

  /// Cells at `phase` (0 <= phase < period), min corner at origin.
  std::vector<Coord> at_phase(std::uint64_t phase, const Limits& limits = {}) const;
};

/// Throws InvalidSpecError unless the entry is Repeating.
Participant participant_from(const CatalogEntry& entry, const Limits& limits = {});
/// Classifies `cells` in their given orientation; throws InvalidSpecError unless Repeating.
Participant participant_from_cells(std::span<const Coord> cells, std::uint64_t budget = kDefaultBudget,
                                   const Limits& limits = {});

struct CollisionSpec {
  std::string a;
  std::string b;
  Coord offset;  // b's anchor relative to a's
  std::uint64_t phase_a = 0;
  std::uint64_t phase_b = 0;
  std::uint64_t horizon = 2048;
  friend bool operator==(const CollisionSpec&, const CollisionSpec&) = default;
};

enum class CollisionStatus : std::uint8_t { Settled, NoInteraction, Unresolved };

const char* to_string(CollisionStatus s);

struct CollisionOutcome {
  CollisionSpec spec;
  std::optional<std::uint64_t> onset;
  CollisionStatus status = CollisionStatus::Unresolved;
  std::uint64_t census_generation = 0;
  std::vector<CensusItem> census;
  std::vector<CensusItem> escaping;  // members of census with nonzero velocity
  std::string diagnostic;

  friend bool operator==(const CollisionOutcome&, const CollisionOutcome&) = default;
};

/// `a` at phase_a with min corner at the origin, `b` at phase_b with min
/// corner at `offset`. Throws InvalidSpecError unless they form two groups.
Universe arrange(const Participant& a, const Participant& b, const CollisionSpec& spec, const Limits& limits = {});
Universe arrange(const CollisionSpec& spec, const Catalog& catalog, const Limits& limits = {});

std::optional<std::uint64_t> interaction_onset(const Participant& a, const Participant& b, const CollisionSpec& spec,
                                               const CollideOptions& opts = {});
std::optional<std::uint64_t> interaction_onset(const CollisionSpec& spec, const Catalog& catalog,
                                               const CollideOptions& opts = {});

CollisionOutcome collide(const Participant& a, const Participant& b, const CollisionSpec& spec,
                         const CollideOptions& opts = {});
CollisionOutcome collide(const CollisionSpec& spec, const Catalog& catalog, const CollideOptions& opts = {});

struct CollisionTable {
  std::string a;
  std::string b;
  std::int64_t window = 0;
  std::uint64_t horizon = 0;
  std::vector<CollisionOutcome> rows;
  /// Settled census ids missing from the input catalog, classified.
  std::vector<CatalogEntry> catalog_additions;

  friend bool operator==(const CollisionTable&, const CollisionTable&) = default;
};

/// Offsets with |dx|, |dy| <= window in ring order (Chebyshev radius, then
/// row-major), so a larger window only appends rows.
std::vector<Coord> window_offsets(std::int64_t window);

/// Every offset in the window times every phase pair; invalid placements are skipped.
CollisionTable collision_table(const Participant& a, const Participant& b, std::int64_t window, std::uint64_t horizon,
                               const Catalog& catalog, const CollideOptions& opts = {});

}  // namespace lcg
