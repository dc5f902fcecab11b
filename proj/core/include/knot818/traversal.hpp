#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knot818/diagram.hpp"

namespace knot818 {

/// CW follows the stored order of canonical_818(); starting at K it yields
/// reference case (a).
enum class Direction : std::uint8_t { CW, CCW };

std::string_view to_string(Direction d) noexcept;
std::optional<Direction> parse_direction(std::string_view text) noexcept;

struct StartSpec {
  SiteLabel site;
  Direction direction = Direction::CW;
  std::optional<VisitRole> entry_role;  // required at crossings, absent at vertices

  /// "K,cw" or "F,ccw,over"
  std::string label() const;
  static StartSpec parse(std::string_view text);

  friend auto operator<=>(const StartSpec&, const StartSpec&) = default;
};

/// Value allocation of one traversal: value at each (site, role) visit.
class TraversalTable {
 public:
  struct Entry {
    SiteLabel site;
    VisitRole role;
    int value;
  };

  void set(const SiteLabel& site, VisitRole role, int value);
  std::optional<int> get(const SiteLabel& site, VisitRole role) const;
  /// Throws KnotError(InvalidWord) when absent.
  int at(const SiteLabel& site, VisitRole role) const;

  std::size_t size() const noexcept { return values_.size(); }
  /// Sorted by site, then Over, Under, Through.
  std::vector<Entry> entries() const;
  std::vector<SiteLabel> sites() const;

  /// Values are exactly 1..size().
  bool is_permutation() const;

  friend bool operator==(const TraversalTable&, const TraversalTable&) = default;

 private:
  std::map<std::pair<SiteLabel, VisitRole>, int> values_;
};

TraversalTable traverse(const DiagramWord& word, const StartSpec& start);

/// Swap over and under values at every crossing.
TraversalTable mirror_table(const TraversalTable& table);

/// Image of a table under a symmetry: site s moves to op(s), roles follow op.
TraversalTable apply_symmetry(const TraversalTable& table, const SymmetryOp& op);
StartSpec apply_symmetry(const StartSpec& spec, const SymmetryOp& op);

struct TraversalState {
  StartSpec spec;
  bool mirrored = false;
  TraversalTable table;

  /// "K,cw" or "mirror(K,cw)"
  std::string label() const;
};

using StateEnsemble = std::vector<TraversalState>;

/// The 10 states K x {cw, ccw}, F and A x {cw, ccw} x {over, under}.
StateEnsemble enumerate_representatives(const DiagramWord& word);

/// Every start specification in (site, direction, role) order.
StateEnsemble enumerate_all(const DiagramWord& word);

/// Appends the mirror of every member.
StateEnsemble with_mirrors(const StateEnsemble& ensemble);

/// Groups ensemble indices into orbits under the 4-fold rotation acting on
/// tables.  Orbits are listed by smallest member index.
std::vector<std::vector<std::size_t>> rotation_orbits(const StateEnsemble& ensemble);

}  // namespace knot818
