#include "knot818/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>

#include "knot818/error.hpp"

namespace knot818 {

namespace {

constexpr double kOriginTolerance = 1e-12;
constexpr double kParallelTolerance = 1e-12;

// Position after passing slot `letter`, and the role taken there (if any).
struct SlotPassage {
  int next_position;
  std::optional<VisitRole> role;
};

SlotPassage pass_slot(int position, int letter) {
  const int i = std::abs(letter);
  const bool positive = letter > 0;
  if (position == i) return {i + 1, positive ? VisitRole::Over : VisitRole::Under};
  if (position == i + 1) return {i, positive ? VisitRole::Under : VisitRole::Over};
  return {position, std::nullopt};
}

double smoothstep(double s) { return s * s * (3.0 - 2.0 * s); }

}  // namespace

bool is_818_braid(const BraidWord& braid) noexcept { return braid == braid_818(); }

ClosureDiagram closure_diagram(const BraidWord& braid, VertexRule rule) {
  if (!braid.closes_to_knot()) {
    throw KnotError(ErrorCode::NotAKnot, "closure has " + std::to_string(braid.closure_cycles().size()) +
                                             " components");
  }
  const bool model = is_818_braid(braid);
  if (rule == VertexRule::Require && !model) {
    throw KnotError(ErrorCode::VertexRuleInapplicable, "branch vertices are defined only for (1 -2)^4 on 3 strands");
  }
  const bool with_vertices = model && rule != VertexRule::Omit;

  // The 8_18 word gets classed labels: sigma1 slots are inner shoulders,
  // sigma2 slots outer shoulders, vertices sit on the outermost circle at
  // sigma1 slots (midway between consecutive outer crossings).
  auto crossing_label = [&](std::size_t slot) {
    if (!model) return SiteLabel::numbered(static_cast<int>(slot) + 1);
    const int index = static_cast<int>(slot / 2);
    return SiteLabel::classed(std::abs(braid.letters()[slot]) == 1 ? SiteClass::InnerShoulder
                                                                     : SiteClass::OuterShoulder,
                              index);
  };

  ClosureDiagram out;
  std::vector<Visit> visits;
  const auto& letters = braid.letters();
  for (std::size_t slot = 0; slot < letters.size(); ++slot) {
    const int i = std::abs(letters[slot]);
    const bool positive = letters[slot] > 0;
    out.crossings.push_back({crossing_label(slot), positive ? 1 : -1, slot, positive ? i : i + 1, positive ? i + 1 : i});
  }

  int position = 1;
  do {
    for (std::size_t slot = 0; slot < letters.size(); ++slot) {
      const auto passage = pass_slot(position, letters[slot]);
      if (passage.role) {
        visits.push_back({crossing_label(slot), *passage.role});
      } else if (with_vertices && std::abs(letters[slot]) == 1 && position == braid.strands()) {
        visits.push_back({SiteLabel::classed(SiteClass::BranchCenter, static_cast<int>(slot / 2)), VisitRole::Through});
      }
      position = passage.next_position;
    }
  } while (position != 1);

  out.word = DiagramWord(std::move(visits));
  if (with_vertices) {
    if (auto witness = cyclic_equivalent(out.word, canonical_818())) {
      out.word = relabel(out.word, witness->mapping);
      for (auto& c : out.crossings) c.id = witness->mapping.at(c.id);
      out.fixture_match = std::move(witness);
    }
  }
  return out;
}

int writhe(std::span<const SignedCrossing> crossings) noexcept {
  return std::accumulate(crossings.begin(), crossings.end(), 0,
                         [](int acc, const SignedCrossing& c) { return acc + c.sign; });
}

AnnularEmbedding annular_embed(const BraidWord& braid, std::span<const double> radii, std::size_t points_per_slot) {
  if (radii.size() != static_cast<std::size_t>(braid.strands())) {
    throw KnotError(ErrorCode::BadRadii, "need one radius per strand");
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (!(radii[k] > 0.0) || (k > 0 && !(radii[k] > radii[k - 1]))) {
      throw KnotError(ErrorCode::BadRadii, "radii must be positive and strictly increasing");
    }
  }
  if (points_per_slot < 2) throw KnotError(ErrorCode::BadRadii, "need at least 2 points per slot");

  AnnularEmbedding out;
  out.radii.assign(radii.begin(), radii.end());
  out.points_per_slot = points_per_slot;
  const auto& letters = braid.letters();
  out.slots = std::max<std::size_t>(letters.size(), 1);
  const double slot_width = 2.0 * std::numbers::pi / static_cast<double>(out.slots);
  const std::size_t middle = points_per_slot / 2;

  struct Meeting {
    std::optional<std::pair<std::size_t, std::size_t>> over, under;
  };
  std::vector<Meeting> meetings(letters.size());

  for (const auto& cycle : braid.closure_cycles()) {
    Polyline line;
    const std::size_t component = out.components.size();
    const int start = cycle.front() + 1;
    int position = start;
    do {
      for (std::size_t slot = 0; slot < out.slots; ++slot) {
        const int letter = letters.empty() ? 0 : letters[slot];
        const auto passage = letters.empty() ? SlotPassage{position, std::nullopt} : pass_slot(position, letter);
        const double r_from = radii[static_cast<std::size_t>(position - 1)];
        const double r_to = radii[static_cast<std::size_t>(passage.next_position - 1)];
        for (std::size_t m = 0; m < points_per_slot; ++m) {
          const double s = static_cast<double>(m) / static_cast<double>(points_per_slot);
          const double theta = slot_width * (static_cast<double>(slot) + s);
          const double r = r_from + (r_to - r_from) * smoothstep(s);
          if (passage.role && m == middle) {
            auto& meet = meetings[slot];
            (*passage.role == VisitRole::Over ? meet.over : meet.under) = std::pair{component, line.size()};
          }
          line.push_back({r * std::cos(theta), r * std::sin(theta)});
        }
        position = passage.next_position;
      }
    } while (position != start);
    line.push_back(line.front());
    out.components.push_back(std::move(line));
  }

  for (std::size_t slot = 0; slot < letters.size(); ++slot) {
    const auto& meet = meetings[slot];
    out.crossings.push_back({slot, letters[slot] > 0 ? 1 : -1, meet.over->first, meet.over->second,
                             meet.under->first, meet.under->second});
  }
  return out;
}

double winding_phase(std::span<const Point> polyline) {
  for (const auto& p : polyline) {
    if (std::hypot(p.x, p.y) < kOriginTolerance) {
      throw KnotError(ErrorCode::OriginOnCurve, "polyline vertex at the origin");
    }
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < polyline.size(); ++k) {
    const auto& a = polyline[k];
    const auto& b = polyline[k + 1];
    total += std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
  }
  return total;
}

double winding_phase(const AnnularEmbedding& embedding) {
  double total = 0.0;
  for (const auto& line : embedding.components) total += winding_phase(line);
  return total;
}

int crossing_sign_from_geometry(Point over_direction, Point under_direction) {
  const double z = over_direction.x * under_direction.y - over_direction.y * under_direction.x;
  if (std::abs(z) < kParallelTolerance) {
    throw KnotError(ErrorCode::ParallelStrands, "crossing directions are parallel");
  }
  return z > 0.0 ? 1 : -1;
}

Point tangent_at(const Polyline& polyline, std::size_t index) {
  // Last point duplicates the first.
  const std::size_t n = polyline.size() - 1;
  const auto& next = polyline[(index + 1) % n];
  const auto& prev = polyline[(index + n - 1) % n];
  return {next.x - prev.x, next.y - prev.y};
}

std::vector<int> embedded_crossing_signs(const AnnularEmbedding& embedding) {
  std::vector<int> signs;
  signs.reserve(embedding.crossings.size());
  for (const auto& c : embedding.crossings) {
    signs.push_back(crossing_sign_from_geometry(tangent_at(embedding.components.at(c.component_over), c.index_over),
                                                tangent_at(embedding.components.at(c.component_under), c.index_under)));
  }
  return signs;
}

Point rotate(Point p, double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace knot818
