#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "lcg/cli.hpp"
#include "lcg/collide.hpp"
#include "lcg/errors.hpp"
#include "lcg/formats.hpp"

namespace lcg::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Input problems that are not parse errors (missing files, bad flag values).
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out.flush()) throw UsageError("cannot write " + path);
}

PatternFile read_pattern(const std::string& path, const std::string& format) {
  PatternFormat f = format_for_path(path);
  if (format == "rle") f = PatternFormat::Rle;
  if (format == "plaintext") f = PatternFormat::Plaintext;
  return parse_pattern(read_file(path), f);
}

std::string coord_str(Coord c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

std::string velocity_str(const std::optional<Velocity>& v) {
  return v ? "(" + v->dx.str() + "," + v->dy.str() + ")" : "none";
}

Json velocity_json(const std::optional<Velocity>& v) {
  if (!v) return nullptr;
  return Json::array({v->dx.str(), v->dy.str()});
}

Json classification_json(const Classification& c) {
  Json j;
  j["kind"] = kind_name(c);
  if (const auto* t = std::get_if<Terminating>(&c)) j["length"] = t->length;
  if (const auto* r = std::get_if<Repeating>(&c)) {
    j["transient"] = r->transient;
    j["period"] = r->period;
    j["displacement"] = Json::array({r->displacement.x, r->displacement.y});
  }
  if (const auto* b = std::get_if<Branching>(&c)) {
    j["at"] = b->at;
    Json off = Json::array();
    for (const auto& o : b->offspring)
      off.push_back(Json{{"id", o.key.id()}, {"anchor", Json::array({o.anchor.x, o.anchor.y})}});
    j["offspring"] = std::move(off);
  }
  if (const auto* u = std::get_if<Unresolved>(&c)) j["budget"] = u->budget;
  return j;
}

Engine parse_engine(const std::string& s) { return s == "naive" ? Engine::Naive : Engine::Fast; }

struct Context {
  std::ostream& out;
  std::ostream& err;
  Settings settings;
  Limits limits() const { return Limits{static_cast<std::size_t>(settings.population_limit)}; }
};

// ---- run

struct RunArgs {
  std::string file;
  std::uint64_t steps = 0;
  std::string engine = "fast";
  std::string format;
  std::string out;
};

int cmd_run(const RunArgs& a, const Context& ctx) {
  const PatternFile pf = read_pattern(a.file, a.format);
  const Universe u = step_n(Universe(pf.cells), a.steps, parse_engine(a.engine), ctx.limits());
  ctx.out << "generation " << u.generation() << "\n";
  ctx.out << "population " << u.population() << "\n";
  if (const auto box = u.bounding_box()) {
    ctx.out << "bbox " << coord_str(box->min) << " " << coord_str(box->max) << "\n";
  } else {
    ctx.out << "bbox empty\n";
  }
  if (!a.out.empty()) write_file(a.out, emit_rle(u.cells()) + "\n");
  return kExitOk;
}

// ---- classify

struct ClassifyArgs {
  std::string file;
  std::optional<std::uint64_t> budget;
  std::string mode = "T";
  bool json = false;
  std::string format;
};

int cmd_classify(const ClassifyArgs& a, const Context& ctx) {
  const PatternFile pf = read_pattern(a.file, a.format);
  const std::uint64_t budget = a.budget.value_or(ctx.settings.budget);
  const RepeatMode mode = a.mode == "strict" ? RepeatMode::Strict : RepeatMode::Translation;
  const auto groups = partition(Universe(pf.cells));
  Json records = Json::array();
  for (const auto& g : groups) {
    const OrbitRecord rec = classify(g, budget, mode, {Engine::Fast, ctx.limits(), false});
    if (a.json) {
      const Coord anchor = g.bounding_box().min;
      records.push_back(Json{{"id", rec.seed.id()},
                             {"anchor", Json::array({anchor.x, anchor.y})},
                             {"cells", emit_rle_body(translation_normal_form(g.live()))},
                             {"mode", to_string(mode)},
                             {"budget", budget},
                             {"classification", classification_json(rec.classification)},
                             {"velocity", velocity_json(rec.velocity())}});
    } else {
      ctx.out << describe(rec.classification) << "\n";
    }
  }
  if (a.json) ctx.out << records.dump(2) << "\n";
  return kExitOk;
}

// ---- enumerate

struct EnumerateArgs {
  std::size_t cells = 0;
  std::optional<std::uint64_t> budget;
  bool closure = false;
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& a, const Context& ctx) {
  if (a.cells < 1) throw UsageError("--cells must be at least 1");
  const Catalog c = build_catalog(a.cells, a.budget.value_or(ctx.settings.budget), a.closure, ctx.settings.entry_cap,
                                  {Engine::Fast, ctx.limits()});
  write_file(a.out, catalog_to_string(c));

  std::map<std::string, std::size_t> kinds{{"terminating", 0}, {"repeating", 0}, {"branching", 0}, {"unresolved", 0}};
  std::map<std::uint64_t, std::size_t> periods;
  for (const auto& e : c.entries) {
    ++kinds[kind_name(e.classification)];
    if (const auto* r = std::get_if<Repeating>(&e.classification)) ++periods[r->period];
  }
  ctx.out << "entries " << c.entries.size() << "\n";
  for (const char* k : {"terminating", "repeating", "branching", "unresolved"}) ctx.out << k << " " << kinds[k] << "\n";
  for (const auto& [p, n] : periods) ctx.out << "repeating period=" << p << " " << n << "\n";
  ctx.out << "complete " << (c.parameters.complete ? "true" : "false") << "\n";
  if (!c.parameters.complete) {
    ctx.err << "entry cap " << ctx.settings.entry_cap << " reached; catalog is partial\n";
    return kExitResource;
  }
  return kExitOk;
}

// ---- collide

struct CollideArgs {
  std::string a;
  std::string b;
  std::int64_t window = 0;
  std::uint64_t horizon = 2048;
  std::string catalog;
  std::string out;
};

Participant resolve(const std::string& ref, const std::optional<Catalog>& catalog, const Context& ctx) {
  if (std::filesystem::is_regular_file(ref)) {
    return participant_from_cells(read_pattern(ref, "").cells, ctx.settings.budget, ctx.limits());
  }
  if (!catalog) throw UsageError("'" + ref + "' is not a file and no --catalog was given to look it up");
  const CatalogEntry* e = catalog->find(std::string_view(ref));
  if (!e) throw UsageError("no catalog entry with id " + ref);
  return participant_from(*e, ctx.limits());
}

std::string outcome_class(const CollisionOutcome& r) {
  std::string s = to_string(r.status);
  if (r.status != CollisionStatus::Settled) return s;
  std::vector<std::string> ids;
  for (const auto& c : r.census) ids.push_back(c.id.id());
  std::sort(ids.begin(), ids.end());
  s += " [";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + ids[i];
  return s + "]";
}

int cmd_collide(const CollideArgs& a, const Context& ctx) {
  if (a.window < 0) throw UsageError("--window must be non-negative");
  std::optional<Catalog> catalog;
  if (!a.catalog.empty()) catalog = catalog_from_string(read_file(a.catalog));
  const Participant pa = resolve(a.a, catalog, ctx);
  const Participant pb = resolve(a.b, catalog, ctx);
  CollideOptions opts;
  opts.limits = ctx.limits();
  const CollisionTable t = collision_table(pa, pb, a.window, a.horizon, catalog.value_or(Catalog{}), opts);
  write_file(a.out, table_to_string(t));

  std::map<std::string, std::size_t> histogram;
  for (const auto& r : t.rows) ++histogram[outcome_class(r)];
  ctx.out << "rows " << t.rows.size() << "\n";
  for (const auto& [cls, n] : histogram) ctx.out << n << " " << cls << "\n";
  ctx.out << "catalog_additions " << t.catalog_additions.size() << "\n";
  return kExitOk;
}

// ---- info

struct InfoArgs {
  std::string catalog;
  std::string id;
};

int cmd_info(const InfoArgs& a, const Context& ctx) {
  const Catalog c = catalog_from_string(read_file(a.catalog));
  const CatalogEntry* e = c.find(std::string_view(a.id));
  if (!e) throw UsageError("no catalog entry with id " + a.id);
  ctx.out << "#C id " << e->id.id() << "\n";
  ctx.out << "#C population " << e->population() << "\n";
  ctx.out << "#C classification " << describe(e->classification) << "\n";
  if (const auto* r = std::get_if<Repeating>(&e->classification)) {
    ctx.out << "#C period " << r->period << "\n";
    ctx.out << "#C displacement " << coord_str(r->displacement) << "\n";
  }
  ctx.out << "#C velocity " << velocity_str(e->velocity()) << "\n";
  if (e->discovered_from) {
    ctx.out << "#C discovered_from " << e->discovered_from->parent << " generation "
            << e->discovered_from->generation << "\n";
  }
  ctx.out << emit_rle(e->cells()) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Live cell group engine for B3/S23", "lcg-engine"};
  app.require_subcommand(1, 1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Evolve a pattern file");
  run->add_option("file", run_args.file, "RLE or .cells file")->required();
  run->add_option("--steps", run_args.steps, "Generations to advance")->required();
  run->add_option("--engine", run_args.engine)->check(CLI::IsMember({"naive", "fast"}));
  run->add_option("--format", run_args.format)->check(CLI::IsMember({"rle", "plaintext"}));
  run->add_option("--out", run_args.out, "Write the final universe as RLE");

  ClassifyArgs classify_args;
  auto* cls = app.add_subcommand("classify", "Classify every live cell group in a file");
  cls->add_option("file", classify_args.file)->required();
  cls->add_option("--budget", classify_args.budget)->check(CLI::PositiveNumber);
  cls->add_option("--mode", classify_args.mode)->check(CLI::IsMember({"T", "strict"}));
  cls->add_flag("--json", classify_args.json);
  cls->add_option("--format", classify_args.format)->check(CLI::IsMember({"rle", "plaintext"}));

  EnumerateArgs enum_args;
  auto* en = app.add_subcommand("enumerate", "Build the catalog of small seeds");
  en->add_option("--cells", enum_args.cells)->required()->check(CLI::PositiveNumber);
  en->add_option("--budget", enum_args.budget)->check(CLI::PositiveNumber);
  en->add_flag("--closure", enum_args.closure);
  en->add_option("--out", enum_args.out)->required();

  CollideArgs collide_args;
  auto* co = app.add_subcommand("collide", "Sweep relative placements of two repeating patterns");
  co->add_option("--a", collide_args.a, "Catalog id or pattern file")->required();
  co->add_option("--b", collide_args.b, "Catalog id or pattern file")->required();
  co->add_option("--window", collide_args.window)->required();
  co->add_option("--horizon", collide_args.horizon);
  co->add_option("--catalog", collide_args.catalog);
  co->add_option("--out", collide_args.out)->required();

  InfoArgs info_args;
  auto* info = app.add_subcommand("info", "Show one catalog entry as RLE with metadata");
  info->add_option("catalog", info_args.catalog)->required();
  info->add_option("id", info_args.id)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx{out, err, {}};
    if (const auto path = config_path()) ctx.settings = load_settings(*path);
    if (run->parsed()) return cmd_run(run_args, ctx);
    if (cls->parsed()) return cmd_classify(classify_args, ctx);
    if (en->parsed()) return cmd_enumerate(enum_args, ctx);
    if (co->parsed()) return cmd_collide(collide_args, ctx);
    return cmd_info(info_args, ctx);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const OverflowError& e) {
    err << "coordinate overflow: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lcg::cli
