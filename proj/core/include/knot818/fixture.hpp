#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knot818/traversal.hpp"

namespace knot818 {

/// One row of the fixture CSV `case,site,role,value`.
struct FixtureEntry {
  SiteLabel site;
  VisitRole role;
  int value;
  std::size_t line;
};

struct FixtureCase {
  std::string name;
  std::vector<FixtureEntry> entries;
};

/// Cases in order of first appearance.
struct Table1Fixture {
  std::vector<FixtureCase> cases;

  const FixtureCase* find(std::string_view name) const;
};

/// One row of the errata CSV `case,site,role,value,corrected_value`.
struct Erratum {
  std::string case_name;
  SiteLabel site;
  VisitRole role;
  int value;
  int corrected_value;
  std::size_t line;
};

/// Throws FixtureParseError naming the 1-based line.
Table1Fixture parse_fixture(std::istream& in);
Table1Fixture load_fixture(const std::string& path);
std::vector<Erratum> parse_errata(std::istream& in);
std::vector<Erratum> load_errata(const std::string& path);

/// Problems that stop a case from being a traversal table: missing or
/// repeated cells, and values that are not exactly 1..20.
std::vector<std::string> validate_fixture_case(const FixtureCase& fixture_case);

TraversalTable to_table(const FixtureCase& fixture_case);

/// Applies every erratum for this case; throws FixtureParseError when an
/// erratum's recorded value disagrees with the fixture.
FixtureCase apply_errata(const FixtureCase& fixture_case, const std::vector<Erratum>& errata);

enum class MatchStatus : std::uint8_t { Matched, MatchedWithErratum, Unmatched };
std::string_view to_string(MatchStatus status) noexcept;

struct CaseResult {
  std::string name;
  MatchStatus status = MatchStatus::Unmatched;
  std::optional<std::string> matched_state;  // TraversalState::label()
  std::vector<std::string> raw_problems;
  std::vector<std::string> corrections;
};

struct FixtureReport {
  std::vector<CaseResult> cases;

  bool all_matched() const;
};

FixtureReport check_fixture(const StateEnsemble& ensemble, const Table1Fixture& fixture,
                            const std::vector<Erratum>& errata = {});

}  // namespace knot818
