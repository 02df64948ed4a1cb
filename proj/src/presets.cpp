#include "vgnet/presets.hpp"

#include "vgnet/timeutil.hpp"

namespace vgnet {

namespace {

WindowSpec window(const char* name, const char* start, const char* end) {
  return WindowSpec{name, parse_timestamp(start), parse_timestamp(end)};
}

}  // namespace

std::vector<WindowSpec> preset_daily_windows() {
  return {
      window("Sub1", "2018-03-26", "2019-12-31"),
      window("Sub2", "2019-12-31", "2022-02-24"),
      window("Sub3", "2022-02-24", "2023-01-01"),
      window("Sub4", "2023-01-01", "2023-07-21"),
      window("Whole", "2018-03-26", "2023-07-21"),
  };
}

std::vector<WindowSpec> preset_monthly_windows() {
  return {
      window("M1", "2019-12-01", "2019-12-31"),
      window("M2", "2019-12-31", "2020-01-31"),
      window("M3", "2022-01-25", "2022-02-24"),
      window("M4", "2022-02-24", "2022-03-26"),
      window("M5", "2023-01-01", "2023-02-01"),
  };
}

}  // namespace vgnet
