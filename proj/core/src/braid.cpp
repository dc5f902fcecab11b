#include "knot818/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "knot818/error.hpp"

namespace knot818 {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw KnotError(ErrorCode::OutOfRange, "a braid needs at least 2 strands");
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const int index = std::abs(letters_[k]);
    if (index < 1 || index >= strands_) {
      throw KnotError(ErrorCode::OutOfRange, "letter " + std::to_string(k) + " (" + std::to_string(letters_[k]) +
                                                 ") outside 1.." + std::to_string(strands_ - 1));
    }
  }
}

int BraidWord::exponent_sum() const noexcept {
  return std::accumulate(letters_.begin(), letters_.end(), 0, [](int acc, int l) { return acc + (l > 0 ? 1 : -1); });
}

std::vector<int> BraidWord::closure_permutation() const {
  std::vector<int> perm(static_cast<std::size_t>(strands_));
  for (int start = 0; start < strands_; ++start) {
    int p = start + 1;
    for (int letter : letters_) {
      const int i = std::abs(letter);
      if (p == i) {
        p = i + 1;
      } else if (p == i + 1) {
        p = i;
      }
    }
    perm[static_cast<std::size_t>(start)] = p - 1;
  }
  return perm;
}

std::vector<std::vector<int>> BraidWord::closure_cycles() const {
  const auto perm = closure_permutation();
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < strands_; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[static_cast<std::size_t>(p)]; p = perm[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = true;
      cycle.push_back(p);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool BraidWord::closes_to_knot() const { return closure_cycles().size() == 1; }

BraidWord braid_818() { return BraidWord(3, {1, -2, 1, -2, 1, -2, 1, -2}); }

}  // namespace knot818
