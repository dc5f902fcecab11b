#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <sstream>

#include "knot818/knot818.hpp"

namespace knot818::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormatEnv = "KNOT818_FORMAT";
constexpr const char* kDefaultBraid = "1 -2 1 -2 1 -2 1 -2";
constexpr double kPhaseTolerance = 1e-9;

enum class Format { Text, Csv, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("unknown format '" + text + "' (expected text, csv or json)");
}

Format resolve_format(const std::string& flag) {
  if (!flag.empty()) return parse_format(flag);
  if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env != '\0') return parse_format(env);
  return Format::Text;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAKnot:
    case ErrorCode::VertexRuleInapplicable: return kDomain;
    case ErrorCode::UnknownToken:
    case ErrorCode::RoleMismatch:
    case ErrorCode::Multiplicity:
    case ErrorCode::OutOfRange:
    case ErrorCode::Empty:
    case ErrorCode::NonInteger:
    case ErrorCode::InvalidWord:
    case ErrorCode::ParityViolation:
    case ErrorCode::BadRadii:
    case ErrorCode::StartNotFound:
    case ErrorCode::RoleMissing:
    case ErrorCode::InvalidStartSpec:
    case ErrorCode::FixtureParseError: return kUsage;
    default: return kFailure;
  }
}

std::string format_phase(double phase, bool radians) {
  std::ostringstream out;
  if (!radians) {
    const double multiple = std::round(phase / std::numbers::pi);
    if (std::abs(phase - multiple * std::numbers::pi) < kPhaseTolerance) {
      const auto k = static_cast<long long>(multiple);
      if (k == 0) return "0";
      if (k == 1) return "π";
      if (k == -1) return "-π";
      return std::to_string(k) + "π";
    }
  }
  out << std::setprecision(17) << phase;
  return out.str();
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

DiagramWord word_from(const std::string& gauss) {
  return gauss.empty() ? canonical_818() : parse_extended_gauss(gauss);
}

// build ----------------------------------------------------------------------

struct BuildArgs {
  std::string braid = kDefaultBraid;
  int strands = 3;
  std::string format;
};

int cmd_build(const BuildArgs& args, std::ostream& out) {
  const auto braid = parse_braid_word(args.braid, args.strands);
  const auto diagram = closure_diagram(braid);
  const int w = writhe(diagram.crossings);
  const std::string gauss = emit_extended_gauss(diagram.word);
  const std::string dt = format_dt(gauss_to_dt(diagram.word));
  std::string match = "none";
  if (diagram.fixture_match) {
    match = "offset " + std::to_string(diagram.fixture_match->offset) +
            (diagram.fixture_match->reversed ? " reversed" : " forward");
  }
  switch (resolve_format(args.format)) {
    case Format::Text:
      out << "braid: " << format_braid_word(braid) << " (" << braid.strands() << " strands)\n"
          << "crossings: " << diagram.crossings.size() << "\n"
          << "writhe: " << w << "\n"
          << "vertices: " << diagram.word.vertex_count() << "\n"
          << "gauss: " << gauss << "\n"
          << "dt: " << dt << "\n"
          << "fixture-match: " << match << "\n";
      break;
    case Format::Csv:
      out << "field,value\n"
          << "braid," << format_braid_word(braid) << "\n"
          << "strands," << braid.strands() << "\n"
          << "crossings," << diagram.crossings.size() << "\n"
          << "writhe," << w << "\n"
          << "vertices," << diagram.word.vertex_count() << "\n"
          << "gauss," << gauss << "\n"
          << "dt," << dt << "\n"
          << "fixture_match," << match << "\n";
      break;
    case Format::Json: {
      Json j;
      j["braid"] = braid.letters();
      j["strands"] = braid.strands();
      j["crossings"] = diagram.crossings.size();
      j["writhe"] = w;
      j["vertices"] = diagram.word.vertex_count();
      j["gauss"] = gauss;
      j["dt"] = gauss_to_dt(diagram.word).entries;
      j["fixture_match"] = match;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// invariants -----------------------------------------------------------------

struct InvariantArgs {
  std::string braid = kDefaultBraid;
  int strands = 3;
  bool radians = false;
  std::size_t points = 64;
  std::string format;
};

int cmd_invariants(const InvariantArgs& args, std::ostream& out) {
  const auto braid = parse_braid_word(args.braid, args.strands);
  const auto diagram = closure_diagram(braid);
  const auto delta = alexander_from_braid(braid);
  std::vector<double> radii;
  for (int k = 1; k <= braid.strands(); ++k) radii.push_back(static_cast<double>(k));
  const double phase = winding_phase(annular_embed(braid, radii, args.points));
  const Rational det = evaluate(delta, Rational(-1));
  const Rational determinant = det < 0 ? Rational(-det) : det;
  const int w = writhe(diagram.crossings);
  switch (resolve_format(args.format)) {
    case Format::Text:
      out << "alexander: " << to_string(delta) << "\n"
          << "writhe: " << w << "\n"
          << "phase: " << format_phase(phase, args.radians) << "\n"
          << "determinant: " << to_string(determinant) << "\n";
      break;
    case Format::Csv:
      out << "field,value\n"
          << "alexander," << to_string(delta) << "\n"
          << "writhe," << w << "\n"
          << "phase," << format_phase(phase, args.radians) << "\n"
          << "determinant," << to_string(determinant) << "\n";
      break;
    case Format::Json: {
      Json j;
      j["alexander"] = to_string(delta);
      Json coefficients = Json::array();
      for (const auto& c : delta.coefficients()) coefficients.push_back(c.str());
      j["alexander_coefficients"] = coefficients;
      j["writhe"] = w;
      j["phase"] = format_phase(phase, args.radians);
      j["phase_radians"] = phase;
      j["determinant"] = to_string(determinant);
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// traverse -------------------------------------------------------------------

struct TraverseArgs {
  std::string start;
  std::string dir = "cw";
  std::string role;
  std::string gauss;
  std::string format;
};

void print_table_text(const std::string& label, const TraversalTable& table, std::ostream& out) {
  out << "state: " << label << "\n";
  const auto sites = table.sites();
  const bool lettered = std::all_of(sites.begin(), sites.end(), [](const SiteLabel& s) { return s.is_letter(); });
  if (!lettered) {
    for (const auto& e : table.entries()) out << e.site.name() << " " << to_string(e.role) << " " << e.value << "\n";
    return;
  }
  std::ostringstream header, over, under;
  header << std::left << std::setw(6) << "site";
  over << std::left << std::setw(6) << "over";
  under << std::left << std::setw(6) << "under";
  for (const auto& site : sites) {
    header << std::right << std::setw(4) << site.name();
    // Branch values share the upper row, as in the printed table.
    const auto top = table.get(site, VisitRole::Over) ? table.get(site, VisitRole::Over)
                                                      : table.get(site, VisitRole::Through);
    over << std::right << std::setw(4) << (top ? std::to_string(*top) : "");
    const auto bottom = table.get(site, VisitRole::Under);
    under << std::right << std::setw(4) << (bottom ? std::to_string(*bottom) : "");
  }
  auto trimmed = [](std::string s) {
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  out << trimmed(header.str()) << "\n" << trimmed(over.str()) << "\n" << trimmed(under.str()) << "\n";
}

Json table_json(const std::string& label, const TraversalTable& table) {
  Json j;
  j["state"] = label;
  Json values = Json::array();
  for (const auto& e : table.entries()) {
    values.push_back({{"site", e.site.name()}, {"role", std::string(to_string(e.role))}, {"value", e.value}});
  }
  j["values"] = values;
  return j;
}

int cmd_traverse(const TraverseArgs& args, std::ostream& out) {
  std::string spec_text = args.start + "," + args.dir;
  if (!args.role.empty()) spec_text += "," + args.role;
  const auto spec = StartSpec::parse(spec_text);
  const auto table = traverse(word_from(args.gauss), spec);
  switch (resolve_format(args.format)) {
    case Format::Text: print_table_text(spec.label(), table, out); break;
    case Format::Csv:
      out << "site,role,value\n";
      for (const auto& e : table.entries()) out << e.site.name() << "," << to_string(e.role) << "," << e.value << "\n";
      break;
    case Format::Json: out << table_json(spec.label(), table).dump(2) << "\n"; break;
  }
  return kOk;
}

// analyze --------------------------------------------------------------------

struct AnalyzeArgs {
  std::string ensemble = "reps10";
  std::string state;
  std::string format;
};

SiteAllocation allocation_for(const AnalyzeArgs& args) {
  const auto& word = canonical_818();
  if (!args.state.empty()) {
    const auto spec = StartSpec::parse(args.state);
    return site_totals(traverse(word, spec), spec.label());
  }
  if (args.ensemble == "reps10") return ensemble_totals(enumerate_representatives(word), "reps10");
  if (args.ensemble == "all40") return ensemble_totals(enumerate_all(word), "all40");
  if (args.ensemble == "with_mirrors") {
    return ensemble_totals(with_mirrors(enumerate_representatives(word)), "with_mirrors");
  }
  throw UsageError("unknown ensemble '" + args.ensemble + "' (expected reps10, all40 or with_mirrors)");
}

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  const auto allocation = allocation_for(args);
  const auto report = defect_report(allocation);
  switch (resolve_format(args.format)) {
    case Format::Text:
      out << "ensemble: " << report.source << " (" << report.state_count << " states)\n";
      for (const auto& c : report.classes) {
        out << to_string(c.site_class) << ":";
        for (const auto& [site, total] : c.totals) out << " " << site.name() << "=" << total;
        out << " mean=" << to_string(c.mean) << " max_deviation=" << to_string(c.max_deviation)
            << " mismatch=" << (c.mismatch ? "yes" : "no") << "\n";
      }
      break;
    case Format::Csv:
      out << "class,site,total\n";
      for (const auto& c : report.classes) {
        for (const auto& [site, total] : c.totals) out << to_string(c.site_class) << "," << site.name() << "," << total << "\n";
      }
      break;
    case Format::Json: {
      Json j;
      j["ensemble"] = report.source;
      j["states"] = report.state_count;
      j["grand_total"] = allocation.grand_total();
      Json classes = Json::array();
      for (const auto& c : report.classes) {
        Json entry;
        entry["class"] = std::string(to_string(c.site_class));
        Json totals = Json::object();
        for (const auto& [site, total] : c.totals) totals[site.name()] = total;
        entry["totals"] = totals;
        entry["mean"] = to_string(c.mean);
        entry["max_deviation"] = to_string(c.max_deviation);
        entry["mismatch"] = c.mismatch;
        classes.push_back(entry);
      }
      j["classes"] = classes;
      j["any_mismatch"] = report.any_mismatch();
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

// check-fixture --------------------------------------------------------------

struct FixtureArgs {
  std::string fixture;
  std::string errata;
  std::string format;
};

int cmd_check_fixture(const FixtureArgs& args, std::ostream& out) {
  const auto fixture = load_fixture(args.fixture);
  const auto errata = args.errata.empty() ? std::vector<Erratum>{} : load_errata(args.errata);
  const auto ensemble = with_mirrors(enumerate_representatives(canonical_818()));
  const auto report = check_fixture(ensemble, fixture, errata);
  switch (resolve_format(args.format)) {
    case Format::Text:
    case Format::Csv: {
      const bool csv = resolve_format(args.format) == Format::Csv;
      if (csv) out << "case,status,state,notes\n";
      for (const auto& c : report.cases) {
        std::string notes;
        for (const auto& p : c.raw_problems) notes += (notes.empty() ? "" : "; ") + p;
        for (const auto& p : c.corrections) notes += (notes.empty() ? "erratum " : "; erratum ") + p;
        if (csv) {
          out << c.name << "," << to_string(c.status) << "," << (c.matched_state ? *c.matched_state : "") << ",\""
              << notes << "\"\n";
        } else {
          out << c.name << " " << to_string(c.status);
          if (c.matched_state) out << " " << *c.matched_state;
          if (!notes.empty()) out << " [" << notes << "]";
          out << "\n";
        }
      }
      break;
    }
    case Format::Json: {
      Json cases = Json::array();
      for (const auto& c : report.cases) {
        Json entry;
        entry["case"] = c.name;
        entry["status"] = std::string(to_string(c.status));
        entry["state"] = c.matched_state ? Json(*c.matched_state) : Json(nullptr);
        entry["raw_problems"] = c.raw_problems;
        entry["corrections"] = c.corrections;
        cases.push_back(entry);
      }
      out << Json{{"cases", cases}, {"all_matched", report.all_matched()}}.dump(2) << "\n";
      break;
    }
  }
  return report.all_matched() ? kOk : kFailure;
}

// embed / dt -----------------------------------------------------------------

struct EmbedArgs {
  std::string braid = kDefaultBraid;
  int strands = 3;
  std::vector<double> radii;
  std::size_t points = 64;
};

int cmd_embed(const EmbedArgs& args, std::ostream& out) {
  const auto braid = parse_braid_word(args.braid, args.strands);
  if (!braid.closes_to_knot()) throw KnotError(ErrorCode::NotAKnot, "closure of the braid is a link");
  std::vector<double> radii = args.radii;
  if (radii.empty()) {
    for (int k = 1; k <= braid.strands(); ++k) radii.push_back(static_cast<double>(k));
  }
  const auto embedding = annular_embed(braid, radii, args.points);
  out << "x,y\n" << std::setprecision(17);
  for (const auto& p : embedding.polyline()) out << p.x << "," << p.y << "\n";
  return kOk;
}

int cmd_dt(const std::string& gauss, std::ostream& out) {
  out << format_dt(gauss_to_dt(parse_extended_gauss(gauss))) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"knot818: the 8_18 knot diagram, its invariants and traversal tables"};
  app.require_subcommand(1);

  const std::string format_help = "Output format: text, csv or json (default from $KNOT818_FORMAT, else text)";

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a braid-closure diagram and summarize it");
  build_cmd->add_option("--braid", build.braid, "Signed generator indices, e.g. \"1 -2 1 -2\"");
  build_cmd->add_option("--strands", build.strands, "Strand count");
  build_cmd->add_option("--format", build.format, format_help);

  InvariantArgs inv;
  auto* inv_cmd = app.add_subcommand("invariants", "Alexander polynomial, writhe, winding phase, determinant");
  inv_cmd->add_option("--braid", inv.braid, "Signed generator indices");
  inv_cmd->add_option("--strands", inv.strands, "Strand count");
  inv_cmd->add_flag("--radians", inv.radians, "Print the phase as a raw float");
  inv_cmd->add_option("--points", inv.points, "Polyline points per braid letter");
  inv_cmd->add_option("--format", inv.format, format_help);

  TraverseArgs trav;
  auto* trav_cmd = app.add_subcommand("traverse", "Value allocation for one start specification");
  trav_cmd->add_option("--start", trav.start, "Start site (A..L)")->required();
  trav_cmd->add_option("--dir", trav.dir, "cw or ccw");
  trav_cmd->add_option("--role", trav.role, "Entry role at a crossing: over or under");
  trav_cmd->add_option("--gauss", trav.gauss, "Extended Gauss code (default: built-in 8_18 word)");
  trav_cmd->add_option("--format", trav.format, format_help);

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "Per-site allocation totals and class mismatch report");
  an_cmd->add_option("--ensemble", an.ensemble, "reps10, all40 or with_mirrors");
  an_cmd->add_option("--state", an.state, "Single state, e.g. \"K,cw\" or \"F,ccw,over\"");
  an_cmd->add_option("--format", an.format, format_help);

  FixtureArgs fx;
  auto* fx_cmd = app.add_subcommand("check-fixture", "Match a reference-table fixture CSV against generated tables");
  fx_cmd->add_option("--fixture", fx.fixture, "Fixture CSV (case,site,role,value)")->required();
  fx_cmd->add_option("--errata", fx.errata, "Errata CSV (case,site,role,value,corrected_value)");
  fx_cmd->add_option("--format", fx.format, format_help);

  EmbedArgs emb;
  auto* emb_cmd = app.add_subcommand("embed", "Export the annular embedding as x,y CSV");
  emb_cmd->add_option("--braid", emb.braid, "Signed generator indices");
  emb_cmd->add_option("--strands", emb.strands, "Strand count");
  emb_cmd->add_option("--radii", emb.radii, "Strand circle radii, strictly increasing")->delimiter(',');
  emb_cmd->add_option("--points", emb.points, "Polyline points per braid letter");

  std::string dt_gauss;
  auto* dt_cmd = app.add_subcommand("dt", "Convert an extended Gauss code to a DT code");
  dt_cmd->add_option("--gauss", dt_gauss, "Extended Gauss code")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*build_cmd) return cmd_build(build, out);
    if (*inv_cmd) return cmd_invariants(inv, out);
    if (*trav_cmd) return cmd_traverse(trav, out);
    if (*an_cmd) return cmd_analyze(an, out);
    if (*fx_cmd) return cmd_check_fixture(fx, out);
    if (*emb_cmd) return cmd_embed(emb, out);
    if (*dt_cmd) return cmd_dt(dt_gauss, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const KnotError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace knot818::cli
