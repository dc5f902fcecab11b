#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "knot818/knot818.hpp"

namespace knot818::testing {

/// Random 12-site word that satisfies the 8_18 model invariants and Gauss's
/// parity condition (each crossing has one odd and one even crossing visit),
/// so DT codes are defined.  Not necessarily planar.
inline DiagramWord random_model_word(std::mt19937& rng) {
  std::vector<char> odd{'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H'};
  std::vector<char> even = odd;
  std::shuffle(odd.begin(), odd.end(), rng);
  std::shuffle(even.begin(), even.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> odd_is_over(8);
  for (std::size_t k = 0; k < 8; ++k) odd_is_over[static_cast<std::size_t>(odd[k] - 'A')] = coin(rng);

  std::vector<Visit> crossings;
  for (std::size_t k = 0; k < 8; ++k) {
    const bool over_first = odd_is_over[static_cast<std::size_t>(odd[k] - 'A')];
    crossings.push_back({SiteLabel::letter(odd[k]), over_first ? VisitRole::Over : VisitRole::Under});
    const bool even_over = !odd_is_over[static_cast<std::size_t>(even[k] - 'A')];
    crossings.push_back({SiteLabel::letter(even[k]), even_over ? VisitRole::Over : VisitRole::Under});
  }
  std::vector<char> vertices{'I', 'J', 'K', 'L'};
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::vector<bool> is_vertex(20, false);
  std::fill(is_vertex.begin(), is_vertex.begin() + 4, true);
  std::shuffle(is_vertex.begin(), is_vertex.end(), rng);

  std::vector<Visit> visits;
  std::size_t next_crossing = 0;
  std::size_t next_vertex = 0;
  for (bool v : is_vertex) {
    if (v) {
      visits.push_back({SiteLabel::letter(vertices[next_vertex++]), VisitRole::Through});
    } else {
      visits.push_back(crossings[next_crossing++]);
    }
  }
  std::uniform_int_distribution<int> offset(0, 19);
  return rotate_word(DiagramWord(std::move(visits)), offset(rng));
}

/// Random braid on `strands` strands whose closure is a knot.  `length` is a
/// lower bound: it grows when no knot of that length turns up (e.g. even
/// lengths on 2 strands).
inline BraidWord random_knot_braid(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::bernoulli_distribution coin(0.5);
  for (;; ++length) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      std::vector<int> letters;
      for (int k = 0; k < length; ++k) letters.push_back(coin(rng) ? index(rng) : -index(rng));
      BraidWord braid(strands, letters);
      if (braid.closes_to_knot()) return braid;
    }
  }
}

inline TraversalTable table_from_rows(const std::vector<int>& over_and_branch, const std::vector<int>& under) {
  // Layout of a reference-table case: A..H over then I..L, and A..H under.
  TraversalTable t;
  for (int k = 0; k < 8; ++k) {
    const auto site = SiteLabel::letter(static_cast<char>('A' + k));
    t.set(site, VisitRole::Over, over_and_branch[static_cast<std::size_t>(k)]);
    t.set(site, VisitRole::Under, under[static_cast<std::size_t>(k)]);
  }
  for (int k = 0; k < 4; ++k) {
    t.set(SiteLabel::letter(static_cast<char>('I' + k)), VisitRole::Through,
          over_and_branch[static_cast<std::size_t>(8 + k)]);
  }
  return t;
}

}  // namespace knot818::testing
