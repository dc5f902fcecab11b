#include "knot818/diagram.hpp"

#include <algorithm>
#include <tuple>

#include "knot818/error.hpp"

namespace knot818 {

namespace {

constexpr std::size_t kModelLength = 20;

std::size_t wrap(long long i, std::size_t n) {
  const auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

bool role_allowed(const SiteLabel& site, VisitRole role) {
  switch (site.site_class()) {
    case SiteClass::BranchCenter: return role == VisitRole::Through;
    case SiteClass::InnerShoulder:
    case SiteClass::OuterShoulder: return role != VisitRole::Through;
    case SiteClass::Generic: return true;
  }
  return false;
}

struct RoleCounts {
  int over = 0;
  int under = 0;
  int through = 0;
};

std::map<SiteLabel, RoleCounts> count_roles(const DiagramWord& word) {
  std::map<SiteLabel, RoleCounts> counts;
  for (const auto& v : word) {
    auto& c = counts[v.site];
    switch (v.role) {
      case VisitRole::Over: ++c.over; break;
      case VisitRole::Under: ++c.under; break;
      case VisitRole::Through: ++c.through; break;
    }
  }
  return counts;
}

}  // namespace

const Visit& DiagramWord::at_cyclic(long long i) const {
  if (visits_.empty()) throw KnotError(ErrorCode::InvalidWord, "cyclic access into an empty word");
  return visits_[wrap(i, visits_.size())];
}

std::size_t DiagramWord::crossing_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(visits_.begin(), visits_.end(), [](const Visit& v) { return v.role == VisitRole::Over; }));
}

std::size_t DiagramWord::vertex_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(visits_.begin(), visits_.end(), [](const Visit& v) { return v.role == VisitRole::Through; }));
}

DiagramWord rotate_word(const DiagramWord& word, long long offset) {
  std::vector<Visit> out;
  out.reserve(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) out.push_back(word.at_cyclic(offset + static_cast<long long>(j)));
  return DiagramWord(std::move(out));
}

DiagramWord reverse_word(const DiagramWord& word) {
  std::vector<Visit> out(word.begin(), word.end());
  std::reverse(out.begin(), out.end());
  return DiagramWord(std::move(out));
}

DiagramWord relabel(const DiagramWord& word, const std::map<SiteLabel, SiteLabel>& mapping) {
  std::vector<Visit> out;
  out.reserve(word.size());
  for (const auto& v : word) {
    auto it = mapping.find(v.site);
    out.push_back({it == mapping.end() ? v.site : it->second, v.role});
  }
  return DiagramWord(std::move(out));
}

std::vector<Diagnostic> validate_structure(const DiagramWord& word) {
  std::vector<Diagnostic> out;
  for (const auto& v : word) {
    if (!role_allowed(v.site, v.role)) {
      out.push_back({"role " + std::string(to_string(v.role)) + " not allowed at " +
                         std::string(to_string(v.site.site_class())) + " site " + v.site.name(),
                     v.site});
    }
  }
  for (const auto& [site, c] : count_roles(word)) {
    const bool crossing = c.through == 0 && c.over == 1 && c.under == 1;
    const bool vertex = c.through == 1 && c.over == 0 && c.under == 0;
    if (crossing || vertex) continue;
    if (c.through > 0) {
      out.push_back({"multiplicity violation at " + site.name() + ": a vertex must be visited exactly once", site});
    } else {
      out.push_back({"role-pair violation at " + site.name() + ": expected one over and one under visit, got " +
                         std::to_string(c.over) + " over and " + std::to_string(c.under) + " under",
                     site});
    }
  }
  return out;
}

std::vector<Diagnostic> validate_word(const DiagramWord& word) {
  std::vector<Diagnostic> out;
  if (word.size() != kModelLength) {
    out.push_back({"length " + std::to_string(word.size()) + " != " + std::to_string(kModelLength), std::nullopt});
  }
  for (const auto& v : word) {
    if (!v.site.is_letter()) out.push_back({"site " + v.site.name() + " is not one of A..L", v.site});
  }
  auto structural = validate_structure(word);
  out.insert(out.end(), structural.begin(), structural.end());
  const auto counts = count_roles(word);
  for (const auto& site : lettered_sites()) {
    if (!counts.contains(site)) out.push_back({"site " + site.name() + " never visited", site});
  }
  return out;
}

const DiagramWord& canonical_818() {
  // Inverse of reference case (a): position v holds the visit whose value is v.
  static const DiagramWord word = [] {
    constexpr const char* kTokens[] = {"VK", "UG", "OC", "UD", "OE", "VJ", "UF", "OB", "UC", "OH",
                                       "VI", "UE", "OA", "UB", "OG", "VL", "UH", "OD", "UA", "OF"};
    std::vector<Visit> visits;
    for (const char* token : kTokens) {
      const VisitRole role = token[0] == 'O' ? VisitRole::Over : token[0] == 'U' ? VisitRole::Under : VisitRole::Through;
      visits.push_back({SiteLabel::letter(token[1]), role});
    }
    return DiagramWord(std::move(visits));
  }();
  return word;
}

SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b) noexcept {
  return {mod4(a.rotation + b.rotation), a.reflected != b.reflected};
}

SymmetryOp SymmetryOp::inverse() const noexcept { return {mod4(-rotation), reflected}; }

bool operator==(const SymmetryOp& a, const SymmetryOp& b) noexcept {
  return mod4(a.rotation) == mod4(b.rotation) && a.reflected == b.reflected;
}

SiteLabel apply_symmetry(const SiteLabel& site, const SymmetryOp& op) noexcept {
  if (!site.is_letter()) return site;
  return SiteLabel::classed(site.site_class(), mod4(site.index() - op.rotation));
}

VisitRole apply_symmetry(VisitRole role, const SymmetryOp& op) noexcept {
  return op.reflected ? opposite(role) : role;
}

DiagramWord apply_symmetry(const DiagramWord& word, const SymmetryOp& op) {
  std::vector<Visit> out;
  out.reserve(word.size());
  for (const auto& v : word) out.push_back({apply_symmetry(v.site, op), apply_symmetry(v.role, op)});
  return DiagramWord(std::move(out));
}

std::size_t EquivalenceWitness::moved_labels() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(mapping.begin(), mapping.end(), [](const auto& kv) { return kv.first != kv.second; }));
}

EquivalenceWitness invert(const EquivalenceWitness& witness, std::size_t word_size) {
  EquivalenceWitness out;
  out.reversed = witness.reversed;
  out.offset = witness.reversed || word_size == 0 ? witness.offset : (word_size - witness.offset) % word_size;
  for (const auto& [from, to] : witness.mapping) out.mapping.emplace(to, from);
  return out;
}

bool satisfies(const DiagramWord& w1, const DiagramWord& w2, const EquivalenceWitness& witness) {
  if (w1.size() != w2.size()) return false;
  const auto offset = static_cast<long long>(witness.offset);
  for (std::size_t j = 0; j < w2.size(); ++j) {
    const auto step = static_cast<long long>(j);
    const Visit& source = w1.at_cyclic(witness.reversed ? offset - step : offset + step);
    auto it = witness.mapping.find(source.site);
    if (it == witness.mapping.end() || it->second != w2[j].site || source.role != w2[j].role) return false;
  }
  return true;
}

namespace {

std::optional<EquivalenceWitness> try_alignment(const DiagramWord& w1, const DiagramWord& w2, std::size_t offset,
                                                bool reversed) {
  EquivalenceWitness witness{offset, reversed, {}};
  std::map<SiteLabel, SiteLabel> inverse;
  for (std::size_t j = 0; j < w2.size(); ++j) {
    const auto step = static_cast<long long>(j);
    const auto base = static_cast<long long>(offset);
    const Visit& a = w1.at_cyclic(reversed ? base - step : base + step);
    const Visit& b = w2[j];
    if (a.role != b.role || a.site.site_class() != b.site.site_class()) return std::nullopt;
    auto [fwd, fresh] = witness.mapping.emplace(a.site, b.site);
    if (!fresh && fwd->second != b.site) return std::nullopt;
    auto [bwd, fresh_back] = inverse.emplace(b.site, a.site);
    if (!fresh_back && bwd->second != a.site) return std::nullopt;
  }
  return witness;
}

}  // namespace

std::vector<EquivalenceWitness> all_cyclic_equivalences(const DiagramWord& w1, const DiagramWord& w2) {
  std::vector<EquivalenceWitness> out;
  if (w1.size() != w2.size()) return out;
  if (w1.empty()) {
    out.push_back({});
    return out;
  }
  for (bool reversed : {false, true}) {
    for (std::size_t offset = 0; offset < w1.size(); ++offset) {
      if (auto w = try_alignment(w1, w2, offset, reversed)) out.push_back(std::move(*w));
    }
  }
  return out;
}

std::optional<EquivalenceWitness> cyclic_equivalent(const DiagramWord& w1, const DiagramWord& w2) {
  auto all = all_cyclic_equivalences(w1, w2);
  if (all.empty()) return std::nullopt;
  auto key = [](const EquivalenceWitness& w) { return std::tuple(w.moved_labels(), w.reversed, w.offset); };
  return *std::min_element(all.begin(), all.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

}  // namespace knot818
