#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ctphase {

// Contrast-enhancement phase classes. Ordinals are fixed; voting and argmax
// ties break toward the lowest ordinal.
enum class PhaseLabel : std::uint8_t {
  kNonContrast = 0,
  kArterial = 1,
  kVenous = 2,
  kOther = 3,
};

inline constexpr int kNumPhases = 4;

inline constexpr std::array<PhaseLabel, 4> kAllPhases = {
    PhaseLabel::kNonContrast,
    PhaseLabel::kArterial,
    PhaseLabel::kVenous,
    PhaseLabel::kOther,
};

constexpr std::string_view phase_name(PhaseLabel p) {
  switch (p) {
    case PhaseLabel::kNonContrast: return "non_contrast";
    case PhaseLabel::kArterial: return "arterial";
    case PhaseLabel::kVenous: return "venous";
    case PhaseLabel::kOther: return "other";
  }
  return "non_contrast";
}

constexpr std::optional<PhaseLabel> parse_phase(std::string_view s) {
  for (PhaseLabel p : kAllPhases) {
    if (phase_name(p) == s) return p;
  }
  return std::nullopt;
}

constexpr int ordinal(PhaseLabel p) { return static_cast<int>(p); }

}  // namespace ctphase
