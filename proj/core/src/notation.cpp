#include "knot818/notation.hpp"

#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

#include "knot818/error.hpp"

namespace knot818 {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

std::string at_token(std::size_t index, std::string_view token) {
  return "token " + std::to_string(index) + " '" + std::string(token) + "'";
}

}  // namespace

DiagramWord parse_extended_gauss(std::string_view text) {
  std::vector<Visit> visits;
  struct Seen {
    int over = 0, under = 0, through = 0;
    std::size_t first_index = 0;
  };
  std::map<SiteLabel, Seen> seen;
  const auto tokens = split_whitespace(text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto token = tokens[i];
    VisitRole role;
    switch (token.front()) {
      case 'O': role = VisitRole::Over; break;
      case 'U': role = VisitRole::Under; break;
      case 'V': role = VisitRole::Through; break;
      default: throw KnotError(ErrorCode::UnknownToken, at_token(i, token) + ": expected prefix O, U or V");
    }
    const auto site = SiteLabel::parse(token.substr(1));
    if (!site) throw KnotError(ErrorCode::UnknownToken, at_token(i, token) + ": bad site label");
    if (site->site_class() == SiteClass::BranchCenter && role != VisitRole::Through) {
      throw KnotError(ErrorCode::RoleMismatch, at_token(i, token) + ": branch site takes only V");
    }
    if (site->is_shoulder() && role == VisitRole::Through) {
      throw KnotError(ErrorCode::RoleMismatch, at_token(i, token) + ": shoulder site takes only O or U");
    }
    auto [it, fresh] = seen.try_emplace(*site, Seen{0, 0, 0, i});
    auto& s = it->second;
    int& count = role == VisitRole::Over ? s.over : role == VisitRole::Under ? s.under : s.through;
    ++count;
    const bool mixed = s.through > 0 && (s.over > 0 || s.under > 0);
    if (count > 1 || mixed) {
      throw KnotError(ErrorCode::Multiplicity, at_token(i, token) + ": site " + site->name() + " visited too often");
    }
    visits.push_back({*site, role});
  }
  for (const auto& [site, s] : seen) {
    if (s.through == 0 && (s.over != 1 || s.under != 1)) {
      throw KnotError(ErrorCode::Multiplicity, at_token(s.first_index, tokens[s.first_index]) + ": crossing " +
                                                   site.name() + " needs one O and one U visit");
    }
  }
  return DiagramWord(std::move(visits));
}

std::string emit_extended_gauss(const DiagramWord& word) {
  std::string out;
  for (const auto& v : word) {
    if (!out.empty()) out += ' ';
    out += v.role == VisitRole::Over ? 'O' : v.role == VisitRole::Under ? 'U' : 'V';
    out += v.site.name();
  }
  return out;
}

DTCode gauss_to_dt(const DiagramWord& word) {
  if (auto problems = validate_structure(word); !problems.empty()) {
    throw KnotError(ErrorCode::InvalidWord, problems.front().message);
  }
  struct Numbers {
    int odd = 0, even = 0;
    VisitRole even_role = VisitRole::Under;
  };
  std::map<SiteLabel, Numbers> by_crossing;
  int number = 0;
  for (const auto& v : word) {
    if (v.role == VisitRole::Through) continue;
    ++number;
    auto& n = by_crossing[v.site];
    if (number % 2 == 1) {
      if (n.odd != 0) throw KnotError(ErrorCode::ParityViolation, "crossing " + v.site.name() + " has two odd visits");
      n.odd = number;
    } else {
      if (n.even != 0) {
        throw KnotError(ErrorCode::ParityViolation, "crossing " + v.site.name() + " has two even visits");
      }
      n.even = number;
      n.even_role = v.role;
    }
  }
  DTCode code;
  code.entries.assign(by_crossing.size(), 0);
  for (const auto& [site, n] : by_crossing) {
    code.entries[static_cast<std::size_t>(n.odd / 2)] = n.even_role == VisitRole::Over ? -n.even : n.even;
  }
  return code;
}

std::string format_dt(const DTCode& code) {
  std::string out;
  for (int e : code.entries) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text, int strands, BraidParseOptions options) {
  if (strands < 2) throw KnotError(ErrorCode::OutOfRange, "strand count must be at least 2");
  std::vector<int> letters;
  const auto tokens = split_whitespace(text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto token = tokens[i];
    std::string_view digits = token.front() == '+' ? token.substr(1) : token;
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw KnotError(ErrorCode::NonInteger, at_token(i, token) + ": not an integer");
    }
    if (value == 0 || std::abs(value) >= strands) {
      throw KnotError(ErrorCode::OutOfRange,
                      at_token(i, token) + ": generator index outside 1.." + std::to_string(strands - 1));
    }
    letters.push_back(value);
  }
  if (letters.empty() && !options.allow_empty) {
    throw KnotError(ErrorCode::Empty, "braid word has no letters");
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid_word(const BraidWord& braid) {
  std::ostringstream out;
  for (std::size_t k = 0; k < braid.letters().size(); ++k) {
    if (k) out << ' ';
    out << braid.letters()[k];
  }
  return out.str();
}

}  // namespace knot818
