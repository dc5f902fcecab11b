#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knot818/braid.hpp"
#include "knot818/diagram.hpp"

namespace knot818 {

/// Extended Gauss code: whitespace-separated tokens `O<site>`, `U<site>`,
/// `V<site>` where <site> is a letter A..L or a positive number.  Errors
/// carry the offending token index (0-based) in the message.
DiagramWord parse_extended_gauss(std::string_view text);

/// Single-space-separated tokens, starting at the stored basepoint.
std::string emit_extended_gauss(const DiagramWord& word);

/// Dowker-Thistlethwaite code: entry k is the even partner of odd visit
/// number 2k+1, negative when the even-numbered visit is the Over visit.
struct DTCode {
  std::vector<int> entries;

  friend bool operator==(const DTCode&, const DTCode&) = default;
};

/// Throws ParityViolation when a crossing's two visits share parity, which
/// cannot happen for a planar diagram.
DTCode gauss_to_dt(const DiagramWord& word);
std::string format_dt(const DTCode& code);

struct BraidParseOptions {
  bool allow_empty = false;
};

BraidWord parse_braid_word(std::string_view text, int strands, BraidParseOptions options = {});
std::string format_braid_word(const BraidWord& braid);

}  // namespace knot818
