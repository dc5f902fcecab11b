#pragma once

#include <optional>
#include <span>
#include <vector>

#include "knot818/braid.hpp"
#include "knot818/diagram.hpp"

namespace knot818 {

struct SignedCrossing {
  SiteLabel id;
  int sign = 1;
  std::size_t letter_index = 0;  // slot of the braid letter that produced it
  int over_position = 0;         // braid positions (1-based) entering the slot
  int under_position = 0;
};

enum class VertexRule {
  Auto,     // insert the four branch vertices iff the braid is (sigma1 sigma2^-1)^4
  Require,  // as Auto, but throw VertexRuleInapplicable for any other braid
  Omit,
};

struct ClosureDiagram {
  DiagramWord word;
  std::vector<SignedCrossing> crossings;
  /// Set when the word was relabelled onto canonical_818().
  std::optional<EquivalenceWitness> fixture_match;
};

/// Traces the closure of `braid` once, in the direction of increasing
/// angle.  sigma_i: the strand moving from position i to i+1 passes over.
ClosureDiagram closure_diagram(const BraidWord& braid, VertexRule rule = VertexRule::Auto);

bool is_818_braid(const BraidWord& braid) noexcept;

int writhe(std::span<const SignedCrossing> crossings) noexcept;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

using Polyline = std::vector<Point>;

/// A point index on each strand where the two strands of a braid letter meet.
struct EmbeddedCrossing {
  std::size_t letter_index = 0;
  int letter_sign = 1;
  std::size_t component_over = 0;
  std::size_t index_over = 0;
  std::size_t component_under = 0;
  std::size_t index_under = 0;
};

/// Closure drawn on concentric circles around the origin: one closed
/// polyline per closure component, first point repeated as the last.
struct AnnularEmbedding {
  std::vector<Polyline> components;
  std::vector<double> radii;
  std::vector<EmbeddedCrossing> crossings;
  std::size_t slots = 0;
  std::size_t points_per_slot = 0;

  const Polyline& polyline() const { return components.at(0); }
};

/// An empty braid is drawn as a single slot spanning the full circle.
AnnularEmbedding annular_embed(const BraidWord& braid, std::span<const double> radii, std::size_t points_per_slot = 64);

/// Total signed angle swept about the origin; 2*pi times the winding number.
double winding_phase(std::span<const Point> polyline);
/// Sum over all components.
double winding_phase(const AnnularEmbedding& embedding);

/// Sign of the z component of over x under.
int crossing_sign_from_geometry(Point over_direction, Point under_direction);

/// Central-difference tangent at a polyline vertex of a closed polyline.
Point tangent_at(const Polyline& polyline, std::size_t index);

/// Geometric sign for every embedded crossing, in letter order.
std::vector<int> embedded_crossing_signs(const AnnularEmbedding& embedding);

Point rotate(Point p, double angle) noexcept;

}  // namespace knot818
