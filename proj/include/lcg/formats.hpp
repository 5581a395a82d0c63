#pragma once

// Pattern files (RLE, plaintext .cells) and JSON persistence for catalogs
// and collision tables.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcg/collide.hpp"
#include "lcg/core.hpp"
#include "lcg/enumerate.hpp"

namespace lcg {

struct PatternFile {
  std::vector<std::string> comments;
  std::optional<std::int64_t> width;
  std::optional<std::int64_t> height;
  std::vector<Coord> cells;  // sorted; top-left of the declared box at (0, 0)
};

/// RLE with header `x = M, y = N[, rule = B3/S23]`. Throws ParseError.
PatternFile parse_rle(std::string_view text);
/// Body tokens only (no header, no extent checks).
std::vector<Coord> parse_rle_body(std::string_view body);

/// Canonical RLE: min corner at the origin, maximal runs, lines of at most
/// 70 characters, no trailing newline. The empty set is "x = 0, y = 0\n!".
std::string emit_rle(std::span<const Coord> cells);
/// Body only; `wrap` = 0 disables line wrapping.
std::string emit_rle_body(std::span<const Coord> cells, std::size_t wrap = 0);

/// `.cells` plaintext: `!` comments, `.` dead, `O` alive. Throws ParseError.
PatternFile parse_plaintext(std::string_view text);
std::string emit_plaintext(std::span<const Coord> cells);

enum class PatternFormat : std::uint8_t { Rle, Plaintext };

/// By extension: `.cells`/`.txt` plaintext, anything else RLE.
PatternFormat format_for_path(std::string_view path);
PatternFile parse_pattern(std::string_view text, PatternFormat format);

inline constexpr int kCatalogVersion = 1;
inline constexpr int kTableVersion = 1;

void save_catalog(const Catalog& catalog, std::ostream& sink);
std::string catalog_to_string(const Catalog& catalog);
/// Throws VersionError or SchemaError; never returns a partial catalog.
Catalog load_catalog(std::istream& source);
Catalog catalog_from_string(std::string_view text);

std::string table_to_string(const CollisionTable& table);
CollisionTable table_from_string(std::string_view text);

}  // namespace lcg
