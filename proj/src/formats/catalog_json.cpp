#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>

#include "json_common.hpp"
#include "lcg/errors.hpp"
#include "lcg/formats.hpp"

namespace lcg {

namespace json_io {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

std::string rational_to_string(const Rational& r) { return r.str(); }

Rational rational_from_string(const std::string& s, const std::string& where) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* end = part.data() + part.size();
    const auto [p, ec] = std::from_chars(part.data(), end, v);
    if (ec != std::errc() || p != end || part.empty()) schema(where, "bad rational '" + s + "'");
    return v;
  };
  const std::size_t slash = s.find('/');
  const std::string_view sv(s);
  const std::int64_t num = parse_int(sv.substr(0, slash));
  const std::int64_t den = slash == std::string::npos ? 1 : parse_int(sv.substr(slash + 1));
  if (den <= 0) schema(where, "bad rational '" + s + "'");
  Rational r = Rational::of(num, den);
  if (r.str() != s) schema(where, "rational '" + s + "' is not in lowest terms");
  return r;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["kind"] = kind_name(c);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Terminating>) {
          j["length"] = v.length;
        } else if constexpr (std::is_same_v<T, Repeating>) {
          j["transient"] = v.transient;
          j["period"] = v.period;
          j["displacement"] = coord_to_json(v.displacement);
        } else if constexpr (std::is_same_v<T, Branching>) {
          j["at"] = v.at;
          Json off = Json::array();
          for (const auto& o : v.offspring) {
            Json oj;
            oj["id"] = o.key.id();
            oj["cells"] = emit_rle_body(o.key.normal_form());
            oj["anchor"] = coord_to_json(o.anchor);
            off.push_back(std::move(oj));
          }
          j["offspring"] = std::move(off);
        } else {
          j["budget"] = v.budget;
        }
      },
      c);
  return j;
}

Classification classification_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "classification must be an object");
  const std::string kind = get_string(j, "kind", where);
  if (kind == "terminating") return Terminating{get_unsigned(j, "length", where)};
  if (kind == "repeating") {
    Repeating r{get_unsigned(j, "transient", where), get_unsigned(j, "period", where),
                coord_from_json(field(j, "displacement", where), where + ".displacement")};
    if (r.period == 0) schema(where, "period must be positive");
    return r;
  }
  if (kind == "branching") {
    Branching b;
    b.at = get_unsigned(j, "at", where);
    const Json& off = field(j, "offspring", where);
    if (!off.is_array()) schema(where, "offspring must be an array");
    for (std::size_t i = 0; i < off.size(); ++i) {
      const std::string w = where + ".offspring[" + std::to_string(i) + "]";
      if (!off[i].is_object()) schema(w, "must be an object");
      Offspring o;
      o.key = key_from_cells(get_string(off[i], "cells", w), get_string(off[i], "id", w), true, w);
      o.anchor = coord_from_json(field(off[i], "anchor", w), w + ".anchor");
      b.offspring.push_back(std::move(o));
    }
    return b;
  }
  if (kind == "unresolved") return Unresolved{get_unsigned(j, "budget", where)};
  schema(where, "unknown classification kind '" + kind + "'");
}

}  // namespace

Json coord_to_json(Coord c) { return Json::array({c.x, c.y}); }

Coord coord_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    schema(where, "expected [x, y] integers");
  }
  if (j[0].is_number_unsigned() && j[0].get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema(where, "coordinate out of range");
  }
  if (j[1].is_number_unsigned() && j[1].get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema(where, "coordinate out of range");
  }
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

const Json& field(const Json& obj, const char* name, const std::string& where) {
  const auto it = obj.find(name);
  if (it == obj.end()) schema(where, std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t get_unsigned(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_unsigned()) schema(where, std::string("'") + name + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::int64_t get_signed(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_integer()) schema(where, std::string("'") + name + "' must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    schema(where, std::string("'") + name + "' out of range");
  }
  return v.get<std::int64_t>();
}

std::string get_string(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_string()) schema(where, std::string("'") + name + "' must be a string");
  return v.get<std::string>();
}

bool get_bool(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_boolean()) schema(where, std::string("'") + name + "' must be a boolean");
  return v.get<bool>();
}

CanonicalKey key_from_cells(const std::string& body, const std::string& id, bool expect_canonical,
                            const std::string& where) {
  std::vector<Coord> cells;
  try {
    cells = parse_rle_body(body);
  } catch (const ParseError& e) {
    schema(where, std::string("cells: ") + e.what());
  }
  if (cells.empty()) schema(where, "cells must not be empty");
  const std::vector<Coord> nf = expect_canonical ? square_normal_form(cells) : translation_normal_form(cells);
  if (nf != cells) schema(where, "cells are not in normal form");
  CanonicalKey key(std::move(cells));
  if (key.id() != id) schema(where, "id " + id + " does not match its cells (" + key.id() + ")");
  return key;
}

Json velocity_to_json(const std::optional<Velocity>& v) {
  if (!v) return nullptr;
  return Json::array({rational_to_string(v->dx), rational_to_string(v->dy)});
}

std::optional<Velocity> velocity_from_json(const Json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    schema(where, "velocity must be null or two rational strings");
  }
  return Velocity{rational_from_string(j[0].get<std::string>(), where),
                  rational_from_string(j[1].get<std::string>(), where)};
}

Json entry_to_json(const CatalogEntry& e) {
  Json j;
  j["id"] = e.id.id();
  j["cells"] = emit_rle_body(e.cells());
  j["population"] = e.population();
  j["classification"] = classification_to_json(e.classification);
  j["velocity"] = velocity_to_json(e.velocity());
  if (e.discovered_from) {
    j["discovered_from"] = Json{{"parent", e.discovered_from->parent}, {"generation", e.discovered_from->generation}};
  } else {
    j["discovered_from"] = nullptr;
  }
  return j;
}

CatalogEntry entry_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema(where, "entry must be an object");
  CatalogEntry e;
  e.id = key_from_cells(get_string(j, "cells", where), get_string(j, "id", where), true, where);
  if (get_unsigned(j, "population", where) != e.population()) schema(where, "population does not match cells");
  e.classification = classification_from_json(field(j, "classification", where), where + ".classification");
  if (velocity_from_json(field(j, "velocity", where), where + ".velocity") != e.velocity()) {
    schema(where, "velocity does not match the classification");
  }
  const Json& df = field(j, "discovered_from", where);
  if (!df.is_null()) {
    if (!df.is_object()) schema(where, "discovered_from must be null or an object");
    e.discovered_from = DiscoveredFrom{get_string(df, "parent", where + ".discovered_from"),
                                       get_unsigned(df, "generation", where + ".discovered_from")};
  }
  return e;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
}

void check_version(const Json& doc, int expected) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  const auto it = doc.find("version");
  if (it == doc.end()) throw SchemaError("missing field 'version'");
  if (!it->is_number_integer() || it->get<std::int64_t>() != expected) {
    throw VersionError("unsupported version " + it->dump() + ", expected " + std::to_string(expected));
  }
}

}  // namespace json_io

using json_io::Json;

std::string catalog_to_string(const Catalog& catalog) {
  Json doc;
  doc["version"] = kCatalogVersion;
  const auto& p = catalog.parameters;
  doc["parameters"] = Json{{"max_cells", p.max_cells},
                           {"budget", p.budget},
                           {"closure", p.closure},
                           {"entry_cap", p.entry_cap},
                           {"complete", p.complete}};
  Json entries = Json::array();
  for (const auto& e : catalog.entries) entries.push_back(json_io::entry_to_json(e));
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

void save_catalog(const Catalog& catalog, std::ostream& sink) { sink << catalog_to_string(catalog); }

Catalog catalog_from_string(std::string_view text) {
  const Json doc = json_io::parse_document(text);
  json_io::check_version(doc, kCatalogVersion);
  Catalog c;
  const Json& p = json_io::field(doc, "parameters", "catalog");
  if (!p.is_object()) throw SchemaError("parameters must be an object");
  c.parameters.max_cells = json_io::get_unsigned(p, "max_cells", "parameters");
  c.parameters.budget = json_io::get_unsigned(p, "budget", "parameters");
  c.parameters.closure = json_io::get_bool(p, "closure", "parameters");
  c.parameters.entry_cap = json_io::get_unsigned(p, "entry_cap", "parameters");
  c.parameters.complete = json_io::get_bool(p, "complete", "parameters");
  const Json& entries = json_io::field(doc, "entries", "catalog");
  if (!entries.is_array()) throw SchemaError("entries must be an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    c.entries.push_back(json_io::entry_from_json(entries[i], "entries[" + std::to_string(i) + "]"));
    if (i > 0 && !entry_less(c.entries[i - 1], c.entries[i])) {
      throw SchemaError("entries[" + std::to_string(i) + "]: entries out of order or duplicated");
    }
  }
  return c;
}

Catalog load_catalog(std::istream& source) {
  const std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  return catalog_from_string(text);
}

}  // namespace lcg
