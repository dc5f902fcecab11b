#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knot818/site.hpp"

namespace knot818 {

/// Cyclic sequence of site visits along one traversal of a knot projection.
/// Position 0 is the stored basepoint; it matters for serialization only.
class DiagramWord {
 public:
  DiagramWord() = default;
  explicit DiagramWord(std::vector<Visit> visits) : visits_(std::move(visits)) {}

  std::size_t size() const noexcept { return visits_.size(); }
  bool empty() const noexcept { return visits_.empty(); }
  const Visit& operator[](std::size_t i) const { return visits_[i]; }
  /// Cyclic access; any integer offset is reduced modulo size().
  const Visit& at_cyclic(long long i) const;
  std::span<const Visit> visits() const noexcept { return visits_; }

  auto begin() const noexcept { return visits_.begin(); }
  auto end() const noexcept { return visits_.end(); }

  /// Number of crossings, i.e. Over visits.
  std::size_t crossing_count() const noexcept;
  std::size_t vertex_count() const noexcept;

  friend bool operator==(const DiagramWord&, const DiagramWord&) = default;

 private:
  std::vector<Visit> visits_;
};

/// Word whose position 0 is position `offset` of `word`.
DiagramWord rotate_word(const DiagramWord& word, long long offset);
DiagramWord reverse_word(const DiagramWord& word);
DiagramWord relabel(const DiagramWord& word, const std::map<SiteLabel, SiteLabel>& mapping);

struct Diagnostic {
  std::string message;
  std::optional<SiteLabel> site;
};

/// Checks the 12-site 8_18 model: 20 visits, every lettered shoulder once
/// Over and once Under, every branch centre once Through.
std::vector<Diagnostic> validate_word(const DiagramWord& word);

/// Checks only Gauss-word structure: each label is either a crossing (one
/// Over and one Under visit) or a vertex (a single Through visit), and
/// lettered labels use roles allowed by their class.
std::vector<Diagnostic> validate_structure(const DiagramWord& word);

/// reference case (a) read back as a visiting word:
/// VK UG OC UD OE VJ UF OB UC OH VI UE OA UB OG VL UH OD UA OF.
const DiagramWord& canonical_818();

/// Element of Z4 x Z2 acting on lettered sites.  One rotation step maps
/// K->J->I->L, F->E->H->G, A->D->C->B; reflection exchanges Over and Under.
struct SymmetryOp {
  int rotation = 0;
  bool reflected = false;

  /// `a * b` applies b first, then a.
  friend SymmetryOp operator*(const SymmetryOp& a, const SymmetryOp& b) noexcept;
  SymmetryOp inverse() const noexcept;
  friend bool operator==(const SymmetryOp& a, const SymmetryOp& b) noexcept;
};

SiteLabel apply_symmetry(const SiteLabel& site, const SymmetryOp& op) noexcept;
VisitRole apply_symmetry(VisitRole role, const SymmetryOp& op) noexcept;
DiagramWord apply_symmetry(const DiagramWord& word, const SymmetryOp& op);

/// w2[j] == mapping(w1[offset + j]) (forward) or mapping(w1[offset - j]) (reversed).
struct EquivalenceWitness {
  std::size_t offset = 0;
  bool reversed = false;
  std::map<SiteLabel, SiteLabel> mapping;

  std::size_t moved_labels() const noexcept;
};

/// Witness mapping w2 back onto w1.
EquivalenceWitness invert(const EquivalenceWitness& witness, std::size_t word_size);

/// Every witness over all offsets and both directions, with class-preserving
/// label bijections and exact role agreement.
std::vector<EquivalenceWitness> all_cyclic_equivalences(const DiagramWord& w1, const DiagramWord& w2);

/// The simplest witness: fewest moved labels, then forward before reversed,
/// then smallest offset.
std::optional<EquivalenceWitness> cyclic_equivalent(const DiagramWord& w1, const DiagramWord& w2);

bool satisfies(const DiagramWord& w1, const DiagramWord& w2, const EquivalenceWitness& witness);

}  // namespace knot818
