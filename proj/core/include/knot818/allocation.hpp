#pragma once

#include <map>
#include <string>
#include <vector>

#include "knot818/laurent.hpp"
#include "knot818/traversal.hpp"

namespace knot818 {

/// Per-site total: over + under at crossings, the through value at vertices.
struct SiteAllocation {
  std::map<SiteLabel, long long> totals;
  std::string source;  // state label, or the ensemble name
  std::size_t state_count = 1;

  long long grand_total() const;
};

SiteAllocation site_totals(const TraversalTable& table, std::string source = "state");

/// Sum of site_totals over the members; throws EmptyEnsemble.
SiteAllocation ensemble_totals(const StateEnsemble& ensemble, std::string source = "ensemble");

struct ClassDefect {
  SiteClass site_class = SiteClass::Generic;
  std::vector<std::pair<SiteLabel, long long>> totals;
  Rational mean;
  Rational max_deviation;  // max |total - mean|
  bool mismatch = false;   // totals not all equal
};

struct DefectReport {
  std::string source;
  std::size_t state_count = 0;
  std::vector<ClassDefect> classes;  // branch centre, outer shoulder, inner shoulder

  const ClassDefect& for_class(SiteClass cls) const;
  bool any_mismatch() const;
};

/// Throws IncompleteAllocation unless all twelve lettered sites are present.
DefectReport defect_report(const SiteAllocation& allocation);

}  // namespace knot818
