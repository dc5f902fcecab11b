#include "knot818/site.hpp"

#include <charconv>

#include "knot818/error.hpp"

namespace knot818 {

std::string_view to_string(SiteClass cls) noexcept {
  switch (cls) {
    case SiteClass::InnerShoulder: return "inner_shoulder";
    case SiteClass::OuterShoulder: return "outer_shoulder";
    case SiteClass::BranchCenter: return "branch_center";
    case SiteClass::Generic: return "generic";
  }
  return "generic";
}

std::string_view to_string(VisitRole role) noexcept {
  switch (role) {
    case VisitRole::Over: return "over";
    case VisitRole::Under: return "under";
    case VisitRole::Through: return "through";
  }
  return "through";
}

std::optional<VisitRole> parse_role(std::string_view text) noexcept {
  if (text == "over") return VisitRole::Over;
  if (text == "under") return VisitRole::Under;
  if (text == "through") return VisitRole::Through;
  return std::nullopt;
}

VisitRole opposite(VisitRole role) noexcept {
  switch (role) {
    case VisitRole::Over: return VisitRole::Under;
    case VisitRole::Under: return VisitRole::Over;
    case VisitRole::Through: return VisitRole::Through;
  }
  return role;
}

std::optional<SiteLabel> SiteLabel::from_letter(char letter) noexcept {
  if (letter < 'A' || letter > 'L') return std::nullopt;
  const int offset = letter - 'A';
  return SiteLabel(static_cast<SiteClass>(offset / kSitesPerClass), offset % kSitesPerClass);
}

SiteLabel SiteLabel::letter(char letter) {
  if (auto label = from_letter(letter)) return *label;
  throw KnotError(ErrorCode::UnknownToken, std::string("site letter '") + letter + "' is not in A..L");
}

SiteLabel SiteLabel::numbered(int number) {
  if (number < 1) throw KnotError(ErrorCode::UnknownToken, "site numbers start at 1");
  return SiteLabel(SiteClass::Generic, number);
}

SiteLabel SiteLabel::classed(SiteClass cls, int index) {
  if (cls == SiteClass::Generic) return numbered(index);
  if (index < 0 || index >= kSitesPerClass) {
    throw KnotError(ErrorCode::UnknownToken, "class index out of range");
  }
  return SiteLabel(cls, index);
}

std::optional<SiteLabel> SiteLabel::parse(std::string_view text) noexcept {
  if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'L') return from_letter(text[0]);
  if (text.empty() || text[0] == '0') return std::nullopt;
  int number = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), number);
  if (ec != std::errc{} || ptr != text.data() + text.size() || number < 1) return std::nullopt;
  return SiteLabel(SiteClass::Generic, number);
}

char SiteLabel::letter() const {
  if (!is_letter()) throw KnotError(ErrorCode::InvalidWord, "numbered site has no letter");
  return static_cast<char>('A' + static_cast<int>(cls_) * kSitesPerClass + index_);
}

std::string SiteLabel::name() const {
  if (is_letter()) return std::string(1, letter());
  return std::to_string(index_);
}

const std::array<SiteLabel, 12>& lettered_sites() {
  static const std::array<SiteLabel, 12> sites = [] {
    std::array<SiteLabel, 12> out{SiteLabel::letter('A'), SiteLabel::letter('B'), SiteLabel::letter('C'),
                                  SiteLabel::letter('D'), SiteLabel::letter('E'), SiteLabel::letter('F'),
                                  SiteLabel::letter('G'), SiteLabel::letter('H'), SiteLabel::letter('I'),
                                  SiteLabel::letter('J'), SiteLabel::letter('K'), SiteLabel::letter('L')};
    return out;
  }();
  return sites;
}

}  // namespace knot818
