#include "knot818/traversal.hpp"

#include <algorithm>
#include <set>

#include "knot818/error.hpp"

namespace knot818 {

std::string_view to_string(Direction d) noexcept { return d == Direction::CW ? "cw" : "ccw"; }

std::optional<Direction> parse_direction(std::string_view text) noexcept {
  if (text == "cw") return Direction::CW;
  if (text == "ccw") return Direction::CCW;
  return std::nullopt;
}

std::string StartSpec::label() const {
  std::string out = site.name() + "," + std::string(to_string(direction));
  if (entry_role) out += "," + std::string(to_string(*entry_role));
  return out;
}

StartSpec StartSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const auto comma = text.find(',', begin);
    parts.push_back(text.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin));
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  if (parts.size() < 2 || parts.size() > 3) {
    throw KnotError(ErrorCode::InvalidStartSpec, "expected SITE,DIR[,ROLE], got '" + std::string(text) + "'");
  }
  const auto site = SiteLabel::parse(parts[0]);
  if (!site) throw KnotError(ErrorCode::InvalidStartSpec, "bad site '" + std::string(parts[0]) + "'");
  const auto dir = parse_direction(parts[1]);
  if (!dir) throw KnotError(ErrorCode::InvalidStartSpec, "direction must be cw or ccw");
  StartSpec spec{*site, *dir, std::nullopt};
  if (parts.size() == 3) {
    const auto role = parse_role(parts[2]);
    if (!role || *role == VisitRole::Through) {
      throw KnotError(ErrorCode::InvalidStartSpec, "entry role must be over or under");
    }
    spec.entry_role = role;
  }
  return spec;
}

void TraversalTable::set(const SiteLabel& site, VisitRole role, int value) { values_[{site, role}] = value; }

std::optional<int> TraversalTable::get(const SiteLabel& site, VisitRole role) const {
  auto it = values_.find({site, role});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

int TraversalTable::at(const SiteLabel& site, VisitRole role) const {
  if (auto v = get(site, role)) return *v;
  throw KnotError(ErrorCode::InvalidWord, "no " + std::string(to_string(role)) + " value at " + site.name());
}

std::vector<TraversalTable::Entry> TraversalTable::entries() const {
  std::vector<Entry> out;
  out.reserve(values_.size());
  for (const auto& [key, value] : values_) out.push_back({key.first, key.second, value});
  return out;
}

std::vector<SiteLabel> TraversalTable::sites() const {
  std::vector<SiteLabel> out;
  for (const auto& [key, value] : values_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

bool TraversalTable::is_permutation() const {
  std::vector<int> values;
  for (const auto& [key, value] : values_) values.push_back(value);
  std::sort(values.begin(), values.end());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

TraversalTable traverse(const DiagramWord& word, const StartSpec& start) {
  std::optional<std::size_t> origin;
  bool site_present = false;
  bool site_is_vertex = false;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const auto& v = word[k];
    if (v.site != start.site) continue;
    site_present = true;
    site_is_vertex = v.role == VisitRole::Through;
    if (site_is_vertex || (start.entry_role && v.role == *start.entry_role)) {
      origin = k;
      break;
    }
  }
  if (!site_present) throw KnotError(ErrorCode::StartNotFound, "site " + start.site.name() + " not in word");
  if (site_is_vertex && start.entry_role) {
    throw KnotError(ErrorCode::InvalidStartSpec, "vertex " + start.site.name() + " takes no entry role");
  }
  if (!origin) {
    throw KnotError(ErrorCode::RoleMissing, "crossing " + start.site.name() + " needs an over or under entry role");
  }
  TraversalTable table;
  const long long step = start.direction == Direction::CW ? 1 : -1;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const auto& v = word.at_cyclic(static_cast<long long>(*origin) + step * static_cast<long long>(k));
    table.set(v.site, v.role, static_cast<int>(k) + 1);
  }
  return table;
}

TraversalTable apply_symmetry(const TraversalTable& table, const SymmetryOp& op) {
  TraversalTable out;
  for (const auto& e : table.entries()) out.set(apply_symmetry(e.site, op), apply_symmetry(e.role, op), e.value);
  return out;
}

TraversalTable mirror_table(const TraversalTable& table) { return apply_symmetry(table, SymmetryOp{0, true}); }

StartSpec apply_symmetry(const StartSpec& spec, const SymmetryOp& op) {
  StartSpec out = spec;
  out.site = apply_symmetry(spec.site, op);
  if (spec.entry_role) out.entry_role = apply_symmetry(*spec.entry_role, op);
  return out;
}

std::string TraversalState::label() const { return mirrored ? "mirror(" + spec.label() + ")" : spec.label(); }

namespace {

std::vector<StartSpec> specs_for(const SiteLabel& site, bool crossing) {
  std::vector<StartSpec> out;
  for (Direction d : {Direction::CW, Direction::CCW}) {
    if (crossing) {
      out.push_back({site, d, VisitRole::Over});
      out.push_back({site, d, VisitRole::Under});
    } else {
      out.push_back({site, d, std::nullopt});
    }
  }
  return out;
}

void require_model(const DiagramWord& word) {
  if (auto problems = validate_word(word); !problems.empty()) {
    throw KnotError(ErrorCode::InvalidWord, problems.front().message);
  }
}

}  // namespace

StateEnsemble enumerate_representatives(const DiagramWord& word) {
  require_model(word);
  StateEnsemble out;
  for (char letter : {'K', 'F', 'A'}) {
    const auto site = SiteLabel::letter(letter);
    for (const auto& spec : specs_for(site, site.is_shoulder())) out.push_back({spec, false, traverse(word, spec)});
  }
  return out;
}

StateEnsemble enumerate_all(const DiagramWord& word) {
  if (auto problems = validate_structure(word); !problems.empty()) {
    throw KnotError(ErrorCode::InvalidWord, problems.front().message);
  }
  std::map<SiteLabel, bool> crossing;
  for (const auto& v : word) crossing[v.site] = v.role != VisitRole::Through;
  StateEnsemble out;
  for (const auto& [site, is_crossing] : crossing) {
    for (const auto& spec : specs_for(site, is_crossing)) out.push_back({spec, false, traverse(word, spec)});
  }
  return out;
}

StateEnsemble with_mirrors(const StateEnsemble& ensemble) {
  StateEnsemble out = ensemble;
  for (const auto& state : ensemble) out.push_back({state.spec, !state.mirrored, mirror_table(state.table)});
  return out;
}

std::vector<std::vector<std::size_t>> rotation_orbits(const StateEnsemble& ensemble) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> assigned(ensemble.size(), false);
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> orbit;
    for (int r = 0; r < 4; ++r) {
      const auto image = apply_symmetry(ensemble[i].table, SymmetryOp{r, false});
      for (std::size_t j = 0; j < ensemble.size(); ++j) {
        if (!assigned[j] && ensemble[j].table == image) {
          assigned[j] = true;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace knot818
