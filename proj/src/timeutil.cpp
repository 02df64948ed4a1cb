#include "vgnet/timeutil.hpp"

#include <cassert>
#include <charconv>
#include <chrono>
#include <cstdio>

#include "vgnet/errors.hpp"

namespace vgnet {

namespace {

using days = std::chrono::sys_days;

bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::int64_t to_epoch(int y, int mo, int d, int h, int mi, int se) {
  using namespace std::chrono;
  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                     day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) raise(errc::unparseable_timestamp, "invalid calendar date");
  std::int64_t day_secs = days{ymd}.time_since_epoch().count() * 86400LL;
  return day_secs + h * 3600LL + mi * 60LL + se;
}

}  // namespace

std::int64_t parse_timestamp(std::string_view text) {
  // Date part: YYYY-MM-DD
  if (text.size() < 10 || text[4] != '-' || text[7] != '-')
    raise(errc::unparseable_timestamp, std::string(text));
  int y, mo, d;
  if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), mo) ||
      !parse_int(text.substr(8, 2), d))
    raise(errc::unparseable_timestamp, std::string(text));

  if (text.size() == 10) return to_epoch(y, mo, d, 0, 0, 0);

  // Time part: HH:MM or HH:MM:SS after a space or 'T'.
  if ((text[10] != ' ' && text[10] != 'T') || text.size() < 16 || text[13] != ':')
    raise(errc::unparseable_timestamp, std::string(text));
  int h, mi, se = 0;
  if (!parse_int(text.substr(11, 2), h) || !parse_int(text.substr(14, 2), mi))
    raise(errc::unparseable_timestamp, std::string(text));
  if (text.size() == 19) {
    if (text[16] != ':' || !parse_int(text.substr(17, 2), se))
      raise(errc::unparseable_timestamp, std::string(text));
  } else if (text.size() != 16) {
    raise(errc::unparseable_timestamp, std::string(text));
  }
  if (h > 23 || mi > 59 || se > 60)
    raise(errc::unparseable_timestamp, std::string(text));
  return to_epoch(y, mo, d, h, mi, se);
}

namespace {

struct Civil {
  int year;
  unsigned month, day, hour, minute, second;
};

Civil split(std::int64_t ts) {
  using namespace std::chrono;
  std::int64_t d = ts / 86400;
  std::int64_t rem = ts % 86400;
  if (rem < 0) {
    rem += 86400;
    --d;
  }
  year_month_day ymd{days{std::chrono::days{d}}};
  return Civil{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
               unsigned(rem / 3600), unsigned((rem / 60) % 60), unsigned(rem % 60)};
}

}  // namespace

std::string format_timestamp(std::int64_t ts) {
  Civil c = split(ts);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u %02u:%02u:%02u", c.year, c.month,
                c.day, c.hour, c.minute, c.second);
  return buf;
}

std::string format_date(std::int64_t ts) {
  Civil c = split(ts);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", c.year, c.month, c.day);
  return buf;
}

std::string month_label(std::int64_t ts) {
  Civil c = split(ts);
  char buf[12];
  std::snprintf(buf, sizeof buf, "%04d-%02u", c.year, c.month);
  return buf;
}

std::int64_t month_floor(std::int64_t ts) {
  Civil c = split(ts);
  return to_epoch(c.year, int(c.month), 1, 0, 0, 0);
}

std::int64_t next_month(std::int64_t month_start) {
  Civil c = split(month_start);
  int y = c.year, mo = int(c.month) + 1;
  if (mo == 13) {
    mo = 1;
    ++y;
  }
  return to_epoch(y, mo, 1, 0, 0, 0);
}

}  // namespace vgnet
