#include "knot818/fixture.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>

#include "knot818/error.hpp"

namespace knot818 {

namespace {

constexpr std::size_t kModelLength = 20;

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const auto comma = line.find(',', begin);
    auto field = line.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
      field.remove_suffix(1);
    }
    fields.push_back(field);
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  return fields;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw KnotError(ErrorCode::FixtureParseError, "line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view text, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    parse_error(line, "'" + std::string(text) + "' is not an integer");
  }
  return value;
}

SiteLabel parse_site(std::string_view text, std::size_t line) {
  auto site = SiteLabel::parse(text);
  if (!site) parse_error(line, "bad site '" + std::string(text) + "'");
  return *site;
}

VisitRole parse_visit_role(std::string_view text, const SiteLabel& site, std::size_t line) {
  auto role = parse_role(text);
  if (!role) parse_error(line, "bad role '" + std::string(text) + "'");
  const bool vertex = site.site_class() == SiteClass::BranchCenter;
  if (site.is_letter() && vertex != (*role == VisitRole::Through)) {
    parse_error(line, "role " + std::string(text) + " not allowed at site " + site.name());
  }
  return *role;
}

// Reads non-blank lines, checks the header, and hands each data row to `row`.
template <typename RowFn>
void read_csv(std::istream& in, std::string_view header, std::size_t columns, RowFn row) {
  std::string text;
  std::size_t line = 0;
  bool saw_header = false;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    if (!saw_header) {
      if (text != header) parse_error(line, "expected header '" + std::string(header) + "'");
      saw_header = true;
      continue;
    }
    const auto fields = split_csv(text);
    if (fields.size() != columns) {
      parse_error(line, "expected " + std::to_string(columns) + " fields, got " + std::to_string(fields.size()));
    }
    row(fields, line);
  }
  if (!saw_header) parse_error(line + 1, "missing header '" + std::string(header) + "'");
}

std::string cell(const SiteLabel& site, VisitRole role) {
  return site.name() + "/" + std::string(to_string(role));
}

}  // namespace

const FixtureCase* Table1Fixture::find(std::string_view name) const {
  auto it = std::find_if(cases.begin(), cases.end(), [&](const FixtureCase& c) { return c.name == name; });
  return it == cases.end() ? nullptr : &*it;
}

Table1Fixture parse_fixture(std::istream& in) {
  Table1Fixture fixture;
  read_csv(in, "case,site,role,value", 4, [&](const std::vector<std::string_view>& f, std::size_t line) {
    if (f[0].empty()) parse_error(line, "empty case name");
    const auto site = parse_site(f[1], line);
    const auto role = parse_visit_role(f[2], site, line);
    const int value = parse_int(f[3], line);
    auto it = std::find_if(fixture.cases.begin(), fixture.cases.end(),
                           [&](const FixtureCase& c) { return c.name == f[0]; });
    if (it == fixture.cases.end()) {
      fixture.cases.push_back({std::string(f[0]), {}});
      it = std::prev(fixture.cases.end());
    }
    it->entries.push_back({site, role, value, line});
  });
  return fixture;
}

Table1Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KnotError(ErrorCode::FixtureParseError, "cannot open " + path);
  return parse_fixture(in);
}

std::vector<Erratum> parse_errata(std::istream& in) {
  std::vector<Erratum> errata;
  read_csv(in, "case,site,role,value,corrected_value", 5,
           [&](const std::vector<std::string_view>& f, std::size_t line) {
             if (f[0].empty()) parse_error(line, "empty case name");
             const auto site = parse_site(f[1], line);
             const auto role = parse_visit_role(f[2], site, line);
             errata.push_back({std::string(f[0]), site, role, parse_int(f[3], line), parse_int(f[4], line), line});
           });
  return errata;
}

std::vector<Erratum> load_errata(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KnotError(ErrorCode::FixtureParseError, "cannot open " + path);
  return parse_errata(in);
}

std::vector<std::string> validate_fixture_case(const FixtureCase& fixture_case) {
  std::vector<std::string> problems;
  std::map<std::pair<SiteLabel, VisitRole>, int> cells;
  for (const auto& e : fixture_case.entries) {
    if (++cells[{e.site, e.role}] == 2) problems.push_back("cell " + cell(e.site, e.role) + " listed twice");
  }
  for (const auto& site : lettered_sites()) {
    const std::vector<VisitRole> roles = site.site_class() == SiteClass::BranchCenter
                                             ? std::vector<VisitRole>{VisitRole::Through}
                                             : std::vector<VisitRole>{VisitRole::Over, VisitRole::Under};
    for (VisitRole role : roles) {
      if (!cells.contains({site, role})) problems.push_back("cell " + cell(site, role) + " missing");
    }
  }
  std::map<int, std::vector<std::string>> by_value;
  for (const auto& e : fixture_case.entries) by_value[e.value].push_back(cell(e.site, e.role));
  for (const auto& [value, where] : by_value) {
    if (value < 1 || value > static_cast<int>(kModelLength)) {
      problems.push_back("value " + std::to_string(value) + " outside 1..20");
    } else if (where.size() > 1) {
      std::string list;
      for (const auto& w : where) list += (list.empty() ? "" : ", ") + w;
      problems.push_back("value " + std::to_string(value) + " appears " + std::to_string(where.size()) +
                         " times (" + list + ")");
    }
  }
  for (int v = 1; v <= static_cast<int>(kModelLength); ++v) {
    if (!by_value.contains(v)) problems.push_back("value " + std::to_string(v) + " missing");
  }
  return problems;
}

TraversalTable to_table(const FixtureCase& fixture_case) {
  TraversalTable table;
  for (const auto& e : fixture_case.entries) table.set(e.site, e.role, e.value);
  return table;
}

FixtureCase apply_errata(const FixtureCase& fixture_case, const std::vector<Erratum>& errata) {
  FixtureCase out = fixture_case;
  for (const auto& fix : errata) {
    if (fix.case_name != fixture_case.name) continue;
    auto it = std::find_if(out.entries.begin(), out.entries.end(),
                           [&](const FixtureEntry& e) { return e.site == fix.site && e.role == fix.role; });
    if (it == out.entries.end() || it->value != fix.value) {
      parse_error(fix.line, "erratum for case " + fix.case_name + " cell " + cell(fix.site, fix.role) +
                                " does not match the fixture value " + std::to_string(fix.value));
    }
    it->value = fix.corrected_value;
  }
  return out;
}

std::string_view to_string(MatchStatus status) noexcept {
  switch (status) {
    case MatchStatus::Matched: return "MATCHED";
    case MatchStatus::MatchedWithErratum: return "MATCHED_WITH_ERRATUM";
    case MatchStatus::Unmatched: return "UNMATCHED";
  }
  return "UNMATCHED";
}

bool FixtureReport::all_matched() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status != MatchStatus::Unmatched; });
}

namespace {

std::optional<std::string> find_match(const StateEnsemble& ensemble, const TraversalTable& table) {
  for (const auto& state : ensemble) {
    if (state.table == table) return state.label();
  }
  return std::nullopt;
}

}  // namespace

FixtureReport check_fixture(const StateEnsemble& ensemble, const Table1Fixture& fixture,
                            const std::vector<Erratum>& errata) {
  FixtureReport report;
  for (const auto& fixture_case : fixture.cases) {
    CaseResult result{fixture_case.name, MatchStatus::Unmatched, std::nullopt, {}, {}};
    result.raw_problems = validate_fixture_case(fixture_case);
    if (result.raw_problems.empty()) result.matched_state = find_match(ensemble, to_table(fixture_case));
    if (result.matched_state) {
      result.status = MatchStatus::Matched;
    } else {
      const bool has_errata = std::any_of(errata.begin(), errata.end(),
                                          [&](const Erratum& e) { return e.case_name == fixture_case.name; });
      if (has_errata) {
        const auto corrected = apply_errata(fixture_case, errata);
        for (const auto& e : errata) {
          if (e.case_name != fixture_case.name) continue;
          result.corrections.push_back(cell(e.site, e.role) + " " + std::to_string(e.value) + " -> " +
                                       std::to_string(e.corrected_value));
        }
        if (validate_fixture_case(corrected).empty()) {
          result.matched_state = find_match(ensemble, to_table(corrected));
          if (result.matched_state) result.status = MatchStatus::MatchedWithErratum;
        }
      }
    }
    report.cases.push_back(std::move(result));
  }
  return report;
}

}  // namespace knot818
