#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctphase/image.hpp"
#include "ctphase/phase.hpp"

namespace ctphase {

// One 2D slice in Hounsfield units plus its acquisition index.
struct CtSlice {
  int instance_number = 0;
  Image2D hu;
};

// An ordered series of slices belonging to one study.
struct CtScan {
  std::string series_uid;
  std::string study_uid;
  std::vector<CtSlice> slices;
  std::optional<PhaseLabel> label;
};

}  // namespace ctphase
