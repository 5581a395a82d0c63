#include <openssl/sha.h>

#include <algorithm>
#include <cstdio>

#include "lcg/errors.hpp"
#include "lcg/lcg.hpp"

namespace lcg {

namespace {

std::array<std::uint8_t, 32> digest_of(const std::vector<Coord>& cells) {
  // Fixed little-endian encoding: count, then (x, y) pairs.
  std::vector<std::uint8_t> buf;
  buf.reserve(8 + cells.size() * 16);
  auto put = [&buf](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  put(cells.size());
  for (const Coord& c : cells) {
    put(static_cast<std::uint64_t>(c.x));
    put(static_cast<std::uint64_t>(c.y));
  }
  std::array<std::uint8_t, 32> out{};
  SHA256(buf.data(), buf.size(), out.data());
  return out;
}

Coord min_corner(std::span<const Coord> cells) {
  Coord m = cells.front();
  for (const Coord& c : cells) {
    m.x = std::min(m.x, c.x);
    m.y = std::min(m.y, c.y);
  }
  return m;
}

}  // namespace

const char* to_string(SymmetryMode m) { return m == SymmetryMode::Translation ? "T" : "T+D8"; }

CanonicalKey::CanonicalKey(std::vector<Coord> normal_form)
    : normal_form_(std::move(normal_form)), fingerprint_(digest_of(normal_form_)) {}

std::string CanonicalKey::id() const {
  std::string s;
  s.reserve(16);
  char buf[3];
  for (int i = 0; i < 8; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", fingerprint_[static_cast<std::size_t>(i)]);
    s += buf;
  }
  return s;
}

std::vector<Coord> translation_normal_form(std::span<const Coord> cells) {
  if (cells.empty()) return {};
  const Coord m = min_corner(cells);
  std::vector<Coord> out;
  out.reserve(cells.size());
  for (const Coord& c : cells) out.push_back(sub(c, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coord> oriented_normal_form(std::span<const Coord> cells, Symmetry s) {
  if (cells.empty()) return {};
  // Move to the origin first so the symmetry never negates an extreme value.
  const Coord m = min_corner(cells);
  std::vector<Coord> out;
  out.reserve(cells.size());
  for (const Coord& c : cells) out.push_back(apply(s, sub(c, m)));
  return translation_normal_form(out);
}

std::vector<Coord> square_normal_form(std::span<const Coord> cells) {
  std::vector<Coord> best;
  for (Symmetry s : kAllSymmetries) {
    std::vector<Coord> nf = oriented_normal_form(cells, s);
    if (best.empty() || nf < best) best = std::move(nf);
  }
  return best;
}

CanonicalForm canonical_form(std::span<const Coord> cells, SymmetryMode mode) {
  if (cells.empty()) throw DomainError("cannot canonicalize an empty cell set");
  const Coord anchor = min_corner(cells);
  if (mode == SymmetryMode::Translation) {
    return {CanonicalKey(translation_normal_form(cells)), Symmetry::Identity, anchor};
  }
  std::vector<Coord> best;
  Symmetry best_sym = Symmetry::Identity;
  for (Symmetry s : kAllSymmetries) {
    std::vector<Coord> nf = oriented_normal_form(cells, s);
    if (best.empty() || nf < best) {
      best = std::move(nf);
      best_sym = s;
    }
  }
  return {CanonicalKey(std::move(best)), best_sym, anchor};
}

CanonicalKey canonicalize(std::span<const Coord> cells, SymmetryMode mode) {
  return canonical_form(cells, mode).key;
}

}  // namespace lcg
