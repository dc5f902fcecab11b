#include "knot818/allocation.hpp"

#include <algorithm>
#include <numeric>

#include "knot818/error.hpp"

namespace knot818 {

long long SiteAllocation::grand_total() const {
  return std::accumulate(totals.begin(), totals.end(), 0LL, [](long long acc, const auto& kv) { return acc + kv.second; });
}

SiteAllocation site_totals(const TraversalTable& table, std::string source) {
  SiteAllocation out;
  out.source = std::move(source);
  for (const auto& e : table.entries()) out.totals[e.site] += e.value;
  return out;
}

SiteAllocation ensemble_totals(const StateEnsemble& ensemble, std::string source) {
  if (ensemble.empty()) throw KnotError(ErrorCode::EmptyEnsemble, "ensemble has no states");
  SiteAllocation out;
  out.source = std::move(source);
  out.state_count = ensemble.size();
  for (const auto& state : ensemble) {
    for (const auto& e : state.table.entries()) out.totals[e.site] += e.value;
  }
  return out;
}

const ClassDefect& DefectReport::for_class(SiteClass cls) const {
  auto it = std::find_if(classes.begin(), classes.end(), [&](const ClassDefect& c) { return c.site_class == cls; });
  if (it == classes.end()) throw KnotError(ErrorCode::IncompleteAllocation, "class not in report");
  return *it;
}

bool DefectReport::any_mismatch() const {
  return std::any_of(classes.begin(), classes.end(), [](const ClassDefect& c) { return c.mismatch; });
}

DefectReport defect_report(const SiteAllocation& allocation) {
  for (const auto& site : lettered_sites()) {
    if (!allocation.totals.contains(site)) {
      throw KnotError(ErrorCode::IncompleteAllocation, "no total for site " + site.name());
    }
  }
  DefectReport report{allocation.source, allocation.state_count, {}};
  for (SiteClass cls : {SiteClass::BranchCenter, SiteClass::OuterShoulder, SiteClass::InnerShoulder}) {
    ClassDefect defect;
    defect.site_class = cls;
    Integer sum = 0;
    for (const auto& site : lettered_sites()) {
      if (site.site_class() != cls) continue;
      const long long total = allocation.totals.at(site);
      defect.totals.emplace_back(site, total);
      sum += total;
    }
    defect.mean = Rational(sum, static_cast<long long>(defect.totals.size()));
    defect.max_deviation = 0;
    for (const auto& [site, total] : defect.totals) {
      Rational deviation = Rational(total) - defect.mean;
      if (deviation < 0) deviation = -deviation;
      defect.max_deviation = std::max(defect.max_deviation, deviation);
    }
    defect.mismatch = std::any_of(defect.totals.begin(), defect.totals.end(),
                                  [&](const auto& kv) { return kv.second != defect.totals.front().second; });
    report.classes.push_back(std::move(defect));
  }
  return report;
}

}  // namespace knot818
