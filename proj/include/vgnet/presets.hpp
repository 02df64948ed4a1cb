#pragma once

#include <vector>

#include "vgnet/series.hpp"

namespace vgnet {

/// Built-in window sets covering the 2018-2023 crude-oil study period.
/// Daily: four sub-periods split at the COVID-19 outbreak (2019-12-31) and
/// the Russia-Ukraine conflict onset (2022-02-24), plus the whole sample.
/// Monthly: five ~30-day event windows around those dates. End bounds are
/// exclusive (the day after the last included session).
std::vector<WindowSpec> preset_daily_windows();
std::vector<WindowSpec> preset_monthly_windows();

}  // namespace vgnet
