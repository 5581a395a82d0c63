#pragma once

// Orbit classification of a single live cell group: follow its successor
// chain until it dies, recurs, splits, or the generation budget runs out.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcg/core.hpp"
#include "lcg/lcg.hpp"

namespace lcg {

/// How recurrence is judged: up to translation, or at the same absolute position.
enum class RepeatMode : std::uint8_t { Translation, Strict };

const char* to_string(RepeatMode m);

inline constexpr std::uint64_t kDefaultBudget = 4096;

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  std::string str() const;  // "1/4", "0", "-1/2"
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Velocity {
  Rational dx;
  Rational dy;
  friend bool operator==(const Velocity&, const Velocity&) = default;
};

struct Terminating {
  std::uint64_t length = 0;  // first generation with no live cells
  friend bool operator==(const Terminating&, const Terminating&) = default;
};

struct Repeating {
  std::uint64_t transient = 0;
  std::uint64_t period = 1;
  Coord displacement;  // per period; x rightward, y downward
  friend bool operator==(const Repeating&, const Repeating&) = default;
};

struct Offspring {
  CanonicalKey key;  // T+D8
  Coord anchor;      // bounding-box minimum, in the seed's frame
  friend bool operator==(const Offspring&, const Offspring&) = default;
};

struct Branching {
  std::uint64_t at = 0;  // first generation whose live cells form several groups
  std::vector<Offspring> offspring;
  friend bool operator==(const Branching&, const Branching&) = default;
};

struct Unresolved {
  std::uint64_t budget = 0;
  friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

using Classification = std::variant<Terminating, Repeating, Branching, Unresolved>;

const char* kind_name(const Classification& c);
/// Defined only for Repeating.
std::optional<Velocity> velocity_of(const Classification& c);
/// One-line summary, e.g. "repeating transient=0 period=4 displacement=(1,1) velocity=(1/4,1/4)".
std::string describe(const Classification& c);

struct TraceEntry {
  std::vector<Coord> normal_form;  // translation normal form
  Coord anchor;                    // bounding-box minimum
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct OrbitRecord {
  CanonicalKey seed;  // T+D8
  RepeatMode mode = RepeatMode::Translation;
  std::uint64_t budget = 0;
  std::vector<TraceEntry> trace;  // generation 0 .. last single-group generation
  Classification classification;

  std::optional<Velocity> velocity() const { return velocity_of(classification); }
};

struct ClassifyOptions {
  Engine engine = Engine::Fast;
  Limits limits;
  bool keep_trace = true;
};

/// Budget counts steps: at most `budget` successor computations are made.
OrbitRecord classify(const LiveCellGroup& seed, std::uint64_t budget = kDefaultBudget,
                     RepeatMode mode = RepeatMode::Translation, const ClassifyOptions& opts = {});

struct ReplayReport {
  bool ok = true;
  std::optional<std::uint64_t> first_divergence;
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// Re-simulates `seed` with the reference engine and checks every field of
/// `record` (the trace only when present).
ReplayReport replay(const OrbitRecord& record, const LiveCellGroup& seed, const Limits& limits = {});

/// Replay against a bare classification (no trace), e.g. from a loaded catalog.
ReplayReport replay(const Classification& claimed, RepeatMode mode, const LiveCellGroup& seed,
                    const Limits& limits = {});

}  // namespace lcg
