#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "lcg/errors.hpp"
#include "lcg/pattern.hpp"

namespace lcg {

namespace {

struct StateKey {
  std::vector<Coord> normal_form;
  Coord anchor;  // zeroed in translation mode
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    CoordHash h;
    std::size_t seed = h(k.anchor) ^ k.normal_form.size();
    for (const Coord& c : k.normal_form) seed = seed * 1099511628211ULL ^ h(c);
    return seed;
  }
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

const char* to_string(RepeatMode m) { return m == RepeatMode::Translation ? "T" : "strict"; }

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {num, den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

const char* kind_name(const Classification& c) {
  return std::visit(overloaded{[](const Terminating&) { return "terminating"; },
                               [](const Repeating&) { return "repeating"; },
                               [](const Branching&) { return "branching"; },
                               [](const Unresolved&) { return "unresolved"; }},
                    c);
}

std::optional<Velocity> velocity_of(const Classification& c) {
  const auto* r = std::get_if<Repeating>(&c);
  if (!r) return std::nullopt;
  const auto p = static_cast<std::int64_t>(r->period);
  return Velocity{Rational::of(r->displacement.x, p), Rational::of(r->displacement.y, p)};
}

std::string describe(const Classification& c) {
  std::ostringstream os;
  std::visit(overloaded{[&](const Terminating& t) { os << "terminating length=" << t.length; },
                        [&](const Repeating& r) {
                          const Velocity v = *velocity_of(c);
                          os << "repeating transient=" << r.transient << " period=" << r.period << " displacement=("
                             << r.displacement.x << "," << r.displacement.y << ") velocity=(" << v.dx.str() << ","
                             << v.dy.str() << ")";
                        },
                        [&](const Branching& b) { os << "branching at=" << b.at << " offspring=" << b.offspring.size(); },
                        [&](const Unresolved& u) { os << "unresolved budget=" << u.budget; }},
             c);
  return os.str();
}

OrbitRecord classify(const LiveCellGroup& seed, std::uint64_t budget, RepeatMode mode, const ClassifyOptions& opts) {
  if (budget < 1) throw DomainError("classification budget must be at least 1");

  OrbitRecord rec;
  rec.seed = canonicalize(seed.live(), SymmetryMode::TranslationAndSquare);
  rec.mode = mode;
  rec.budget = budget;

  std::unordered_map<StateKey, std::uint64_t, StateKeyHash> seen;
  std::vector<Coord> anchors;

  auto key_of = [&](std::span<const Coord> cells, Coord& anchor_out) {
    anchor_out = bounding_box_of(cells)->min;
    return StateKey{translation_normal_form(cells), mode == RepeatMode::Strict ? anchor_out : Coord{}};
  };

  Universe cur = seed.as_universe();
  {
    Coord anchor;
    StateKey k = key_of(cur.cells(), anchor);
    if (opts.keep_trace) rec.trace.push_back({k.normal_form, anchor});
    anchors.push_back(anchor);
    seen.emplace(std::move(k), 0);
  }

  for (std::uint64_t gen = 1; gen <= budget; ++gen) {
    Universe next = advance(cur, opts.engine, opts.limits);
    if (next.empty()) {
      rec.classification = Terminating{gen};
      return rec;
    }
    auto groups = partition_cells(next.cells());
    if (groups.size() > 1) {
      Branching b{gen, {}};
      for (const auto& g : groups) {
        CanonicalForm f = canonical_form(g, SymmetryMode::TranslationAndSquare);
        b.offspring.push_back({std::move(f.key), f.anchor});
      }
      std::sort(b.offspring.begin(), b.offspring.end(), [](const Offspring& x, const Offspring& y) {
        if (auto c = x.key <=> y.key; c != 0) return c < 0;
        return x.anchor < y.anchor;
      });
      rec.classification = std::move(b);
      return rec;
    }
    Coord anchor;
    StateKey k = key_of(next.cells(), anchor);
    if (opts.keep_trace) rec.trace.push_back({k.normal_form, anchor});
    anchors.push_back(anchor);
    if (auto it = seen.find(k); it != seen.end()) {
      const std::uint64_t first = it->second;
      rec.classification = Repeating{first, gen - first, sub(anchor, anchors[first])};
      return rec;
    }
    seen.emplace(std::move(k), gen);
    cur = std::move(next);
  }
  rec.classification = Unresolved{budget};
  return rec;
}

}  // namespace lcg
