#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace knot818 {

// Declaration order is also the sort order: A-D, E-H, I-L, then numbered sites.
enum class SiteClass : std::uint8_t { InnerShoulder, OuterShoulder, BranchCenter, Generic };

enum class VisitRole : std::uint8_t { Over, Under, Through };

std::string_view to_string(SiteClass cls) noexcept;
std::string_view to_string(VisitRole role) noexcept;
std::optional<VisitRole> parse_role(std::string_view text) noexcept;
VisitRole opposite(VisitRole role) noexcept;

/// A site of a diagram.  The twelve characteristic points of the 8_18
/// projection are letters A..L (four per class); diagrams built for other
/// knots use positive integers with class Generic.
class SiteLabel {
 public:
  static constexpr int kSitesPerClass = 4;

  static std::optional<SiteLabel> from_letter(char letter) noexcept;
  static SiteLabel letter(char letter);
  static SiteLabel numbered(int number);
  static SiteLabel classed(SiteClass cls, int index);

  /// Parses either a letter A..L or a positive decimal number.
  static std::optional<SiteLabel> parse(std::string_view text) noexcept;

  SiteClass site_class() const noexcept { return cls_; }
  int index() const noexcept { return index_; }
  bool is_letter() const noexcept { return cls_ != SiteClass::Generic; }
  bool is_shoulder() const noexcept {
    return cls_ == SiteClass::InnerShoulder || cls_ == SiteClass::OuterShoulder;
  }
  char letter() const;
  std::string name() const;

  friend auto operator<=>(const SiteLabel&, const SiteLabel&) = default;

 private:
  SiteLabel(SiteClass cls, int index) noexcept : cls_(cls), index_(index) {}

  SiteClass cls_;
  int index_;
};

/// The twelve lettered sites in letter order.
const std::array<SiteLabel, 12>& lettered_sites();

struct Visit {
  SiteLabel site;
  VisitRole role;

  friend bool operator==(const Visit&, const Visit&) = default;
};

}  // namespace knot818
