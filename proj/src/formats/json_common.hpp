#pragma once

#include <json.hpp>
#include <string>

#include "lcg/enumerate.hpp"

namespace lcg::json_io {

using Json = nlohmann::ordered_json;

Json coord_to_json(Coord c);
Coord coord_from_json(const Json& j, const std::string& where);

Json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const Json& j, const std::string& where);

const Json& field(const Json& obj, const char* name, const std::string& where);
std::uint64_t get_unsigned(const Json& obj, const char* name, const std::string& where);
std::int64_t get_signed(const Json& obj, const char* name, const std::string& where);
std::string get_string(const Json& obj, const char* name, const std::string& where);
bool get_bool(const Json& obj, const char* name, const std::string& where);

/// Cells from an RLE body, in normal form; `expect_canonical` also requires T+D8 normal form.
CanonicalKey key_from_cells(const std::string& body, const std::string& id, bool expect_canonical,
                            const std::string& where);

Json velocity_to_json(const std::optional<Velocity>& v);
std::optional<Velocity> velocity_from_json(const Json& j, const std::string& where);

Json parse_document(std::string_view text);
void check_version(const Json& doc, int expected);

}  // namespace lcg::json_io
