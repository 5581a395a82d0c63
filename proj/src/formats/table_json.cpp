#include "json_common.hpp"
#include "lcg/errors.hpp"
#include "lcg/formats.hpp"

namespace lcg {

using json_io::Json;

namespace {

CollisionStatus status_from_string(const std::string& s, const std::string& where) {
  for (auto st : {CollisionStatus::Settled, CollisionStatus::NoInteraction, CollisionStatus::Unresolved})
    if (s == to_string(st)) return st;
  throw SchemaError(where + ": unknown status '" + s + "'");
}

Json census_to_json(const CensusItem& c) {
  Json j;
  j["id"] = c.id.id();
  j["cells"] = emit_rle_body(c.id.normal_form());
  j["anchor"] = json_io::coord_to_json(c.anchor);
  j["phase"] = c.phase;
  j["period"] = c.period;
  j["velocity"] = json_io::velocity_to_json(c.velocity);
  return j;
}

CensusItem census_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": census item must be an object");
  CensusItem c;
  c.id = json_io::key_from_cells(json_io::get_string(j, "cells", where), json_io::get_string(j, "id", where), true,
                                 where);
  c.anchor = json_io::coord_from_json(json_io::field(j, "anchor", where), where + ".anchor");
  c.phase = json_io::get_unsigned(j, "phase", where);
  c.period = json_io::get_unsigned(j, "period", where);
  const auto v = json_io::velocity_from_json(json_io::field(j, "velocity", where), where + ".velocity");
  if (!v) throw SchemaError(where + ": census velocity must not be null");
  c.velocity = *v;
  return c;
}

Json row_to_json(const CollisionOutcome& r) {
  Json j;
  j["offset"] = json_io::coord_to_json(r.spec.offset);
  j["phase_a"] = r.spec.phase_a;
  j["phase_b"] = r.spec.phase_b;
  j["onset"] = r.onset ? Json(*r.onset) : Json(nullptr);
  j["status"] = to_string(r.status);
  j["census_generation"] = r.census_generation;
  Json census = Json::array();
  Json escaping = Json::array();
  for (std::size_t i = 0; i < r.census.size(); ++i) {
    census.push_back(census_to_json(r.census[i]));
    if (r.census[i].moving()) escaping.push_back(i);
  }
  j["census"] = std::move(census);
  j["escaping"] = std::move(escaping);
  j["diagnostic"] = r.diagnostic;
  return j;
}

CollisionOutcome row_from_json(const Json& j, const CollisionTable& t, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": row must be an object");
  CollisionOutcome r;
  r.spec = {t.a, t.b, json_io::coord_from_json(json_io::field(j, "offset", where), where + ".offset"),
            json_io::get_unsigned(j, "phase_a", where), json_io::get_unsigned(j, "phase_b", where), t.horizon};
  const Json& onset = json_io::field(j, "onset", where);
  if (!onset.is_null()) r.onset = json_io::get_unsigned(j, "onset", where);
  r.status = status_from_string(json_io::get_string(j, "status", where), where);
  r.census_generation = json_io::get_unsigned(j, "census_generation", where);
  const Json& census = json_io::field(j, "census", where);
  if (!census.is_array()) throw SchemaError(where + ": census must be an array");
  for (std::size_t i = 0; i < census.size(); ++i)
    r.census.push_back(census_from_json(census[i], where + ".census[" + std::to_string(i) + "]"));
  const Json& escaping = json_io::field(j, "escaping", where);
  if (!escaping.is_array()) throw SchemaError(where + ": escaping must be an array");
  for (const auto& e : escaping) {
    if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= r.census.size()) {
      throw SchemaError(where + ": escaping index out of range");
    }
    r.escaping.push_back(r.census[e.get<std::size_t>()]);
  }
  std::vector<CensusItem> moving;
  for (const auto& c : r.census)
    if (c.moving()) moving.push_back(c);
  if (moving != r.escaping) throw SchemaError(where + ": escaping does not list exactly the moving census items");
  r.diagnostic = json_io::get_string(j, "diagnostic", where);
  return r;
}

}  // namespace

std::string table_to_string(const CollisionTable& table) {
  Json doc;
  doc["version"] = kTableVersion;
  doc["a"] = table.a;
  doc["b"] = table.b;
  doc["window"] = table.window;
  doc["horizon"] = table.horizon;
  Json rows = Json::array();
  for (const auto& r : table.rows) rows.push_back(row_to_json(r));
  doc["rows"] = std::move(rows);
  Json additions = Json::array();
  for (const auto& e : table.catalog_additions) additions.push_back(json_io::entry_to_json(e));
  doc["catalog_additions"] = std::move(additions);
  return doc.dump(2) + "\n";
}

CollisionTable table_from_string(std::string_view text) {
  const Json doc = json_io::parse_document(text);
  json_io::check_version(doc, kTableVersion);
  CollisionTable t;
  t.a = json_io::get_string(doc, "a", "table");
  t.b = json_io::get_string(doc, "b", "table");
  t.window = json_io::get_signed(doc, "window", "table");
  t.horizon = json_io::get_unsigned(doc, "horizon", "table");
  const Json& rows = json_io::field(doc, "rows", "table");
  if (!rows.is_array()) throw SchemaError("rows must be an array");
  for (std::size_t i = 0; i < rows.size(); ++i)
    t.rows.push_back(row_from_json(rows[i], t, "rows[" + std::to_string(i) + "]"));
  const Json& additions = json_io::field(doc, "catalog_additions", "table");
  if (!additions.is_array()) throw SchemaError("catalog_additions must be an array");
  for (std::size_t i = 0; i < additions.size(); ++i)
    t.catalog_additions.push_back(
        json_io::entry_from_json(additions[i], "catalog_additions[" + std::to_string(i) + "]"));
  return t;
}

}  // namespace lcg
