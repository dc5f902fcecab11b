#pragma once

#include <vector>

namespace knot818 {

/// Word in the braid group on `strands` strands.  Letter i > 0 is the
/// generator sigma_i, letter -i its inverse.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  int exponent_sum() const noexcept;

  /// perm[p] is the position (0-based) reached after one pass through the
  /// word by the strand that entered at position p.
  std::vector<int> closure_permutation() const;
  /// Closure components, each listed from its lowest starting position.
  std::vector<std::vector<int>> closure_cycles() const;
  bool closes_to_knot() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// (sigma1 sigma2^-1)^4 on three strands, whose closure is 8_18.
BraidWord braid_818();

}  // namespace knot818
