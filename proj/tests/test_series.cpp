#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "vgnet/errors.hpp"
#include "vgnet/series.hpp"
#include "vgnet/timeutil.hpp"

using namespace vgnet;

namespace {

PriceSeries parse(const std::string& csv, CsvSchema schema = {}) {
  std::istringstream in(csv);
  return parse_csv(in, schema);
}

WindowSpec window(const char* name, const char* start, const char* end) {
  return {name, parse_timestamp(start), parse_timestamp(end)};
}

}  // namespace

TEST_CASE("timestamps parse and format round-trip") {
  CHECK(parse_timestamp("1970-01-01") == 0);
  CHECK(parse_timestamp("1970-01-02") == 86400);
  CHECK(parse_timestamp("2022-02-24") == 1645660800);
  CHECK(parse_timestamp("2022-02-24 09:30:00") == 1645660800 + 9 * 3600 + 30 * 60);
  CHECK(parse_timestamp("2022-02-24T09:30") == parse_timestamp("2022-02-24 09:30:00"));
  CHECK(format_timestamp(parse_timestamp("2020-04-20 13:05:09")) == "2020-04-20 13:05:09");
  CHECK(format_date(parse_timestamp("2020-04-20 13:05:09")) == "2020-04-20");
  CHECK(month_label(parse_timestamp("2020-04-20")) == "2020-04");
  CHECK(month_floor(parse_timestamp("2020-04-20 13:05:09")) == parse_timestamp("2020-04-01"));
  CHECK(next_month(parse_timestamp("2019-12-01")) == parse_timestamp("2020-01-01"));
  CHECK(next_month(parse_timestamp("2020-01-01")) == parse_timestamp("2020-02-01"));
  CHECK_THROWS_AS(parse_timestamp("not-a-date"), VgError);
  CHECK_THROWS_AS(parse_timestamp("2020-13-01"), VgError);
  CHECK_THROWS_AS(parse_timestamp("2020-02-30"), VgError);
}

TEST_CASE("parse_csv echoes well-formed input") {
  const auto s = parse(
      "time,price\n"
      "2018-03-26,462.0\n"
      "2018-03-27,463.5\n"
      "2018-03-28,461.0\n");
  REQUIRE(s.size() == 3);
  CHECK(s.observations[0].price == 462.0);
  CHECK(s.observations[1].price == 463.5);
  CHECK(s.observations[2].price == 461.0);
  CHECK(s.observations[0].timestamp == parse_timestamp("2018-03-26"));
}

TEST_CASE("parse_csv sorts rows by timestamp") {
  const auto s = parse(
      "time,price\n"
      "2018-03-28,461.0\n"
      "2018-03-26,462.0\n"
      "2018-03-27,463.5\n");
  REQUIRE(s.size() == 3);
  CHECK(s.observations.front().price == 462.0);
  CHECK(s.observations.back().price == 461.0);
  for (std::size_t i = 1; i < s.size(); ++i)
    CHECK(s.observations[i - 1].timestamp < s.observations[i].timestamp);
}

TEST_CASE("parse_csv validation errors carry codes and row context") {
  const auto code_of = [](const std::string& csv) {
    try {
      parse(csv);
    } catch (const VgError& e) {
      return e.code();
    }
    return errc{-1};
  };
  CHECK(code_of("time,price\n2020-01-01,1\n2020-01-02,NaN\n") == errc::non_finite_price);
  CHECK(code_of("time,price\n2020-01-01,1\n2020-01-02,inf\n") == errc::non_finite_price);
  CHECK(code_of("time,price\n2020-01-01,1\n2020-01-02,\n") == errc::non_finite_price);
  CHECK(code_of("time,price\n2020-01-01,1\nbogus,2\n") == errc::unparseable_timestamp);
  CHECK(code_of("time,price\n2020-01-01,1\n2020-01-01,2\n") == errc::duplicate_timestamp);
  CHECK(code_of("time,price\n2020-01-01,1\n2020-01-02\n") == errc::malformed_csv);
  CHECK(code_of("time,price\n2020-01-01,1\n") == errc::too_short);
  CHECK(code_of("") == errc::too_short);
  CHECK(code_of("date,price\n2020-01-01,1\n2020-01-02,2\n") == errc::malformed_csv);

  try {
    parse("time,price\n2020-01-01,1\n2020-01-02,oops\n");
    FAIL("expected a throw");
  } catch (const VgError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("NonFinitePrice") != std::string::npos);
  }
}

TEST_CASE("parse_csv honors a custom schema and extra columns") {
  std::istringstream in(
      "date,volume,close\n"
      "2020-01-02,100,51.5\n"
      "2020-01-03,90,-37.63\n");
  const auto s = parse_csv(in, {"date", "close"}, "wti");
  REQUIRE(s.size() == 2);
  CHECK(s.instrument_label == "wti");
  CHECK(s.observations[1].price == -37.63);  // negative prices are legal
}

TEST_CASE("serialize_csv then parse_csv is the identity") {
  auto prices = oracles::gaussian_walk(257, 11);
  prices[10] = -37.63;
  prices[11] = 1.0 / 3.0;  // needs all 17 digits
  const auto s = oracles::from_prices(prices);
  std::ostringstream out;
  serialize_csv(s, out);
  std::istringstream in(out.str());
  const auto back = parse_csv(in, {}, s.instrument_label, s.frequency_label);
  CHECK(back.observations == s.observations);
}

TEST_CASE("infer_frequency recognizes the standard spacings") {
  const auto with_gap = [](std::int64_t gap, std::size_t n) {
    PriceSeries s;
    for (std::size_t i = 0; i < n; ++i)
      s.observations.push_back({static_cast<std::int64_t>(i) * gap, 1.0 + i});
    return s;
  };
  CHECK(infer_frequency(with_gap(300, 50)) == "5min");
  CHECK(infer_frequency(with_gap(900, 50)) == "15min");
  CHECK(infer_frequency(with_gap(1800, 50)) == "30min");
  CHECK(infer_frequency(with_gap(86400, 50)) == "daily");
  CHECK(infer_frequency(with_gap(7, 50)) == "other");
}

TEST_CASE("slice keeps [start, end) and carries metadata") {
  const auto s = parse(
      "time,price\n"
      "2018-03-26,1\n"
      "2019-06-01,2\n"
      "2019-12-30,3\n"
      "2019-12-31,4\n"
      "2020-05-05,5\n");

  SUBCASE("inclusive end date maps to an exclusive next-day bound") {
    const auto sub = slice(s, window("Sub1", "2018-03-26", "2019-12-31"));
    REQUIRE(sub.size() == 3);
    CHECK(sub.observations.back().price == 3);
    CHECK(sub.frequency_label == s.frequency_label);
    CHECK(sub.instrument_label == s.instrument_label);
  }
  SUBCASE("window covering everything returns the identical series") {
    CHECK(slice(s, window("all", "2018-01-01", "2021-01-01")) == s);
  }
  SUBCASE("window outside the data range is empty") {
    CHECK_THROWS_AS(slice(s, window("none", "2024-01-01", "2025-01-01")), VgError);
    try {
      slice(s, window("none", "2024-01-01", "2025-01-01"));
    } catch (const VgError& e) {
      CHECK(e.code() == errc::empty_window);
    }
  }
  SUBCASE("single observation inside still counts as empty") {
    CHECK_THROWS_AS(slice(s, window("one", "2020-01-01", "2021-01-01")), VgError);
  }
}

TEST_CASE("monthly_partition splits on calendar months") {
  SUBCASE("two adjacent months") {
    PriceSeries s;
    for (std::int64_t t = parse_timestamp("2019-12-01"); t < parse_timestamp("2020-02-01");
         t += 86400)
      s.observations.push_back({t, 1.0});
    const auto parts = monthly_partition(s);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].window.name == "2019-12");
    CHECK(parts[1].window.name == "2020-01");
    CHECK(parts[0].series.size() == 31);
    CHECK(parts[1].series.size() == 31);
    CHECK_FALSE(parts[0].sparse);
  }
  SUBCASE("a month-long gap produces no window") {
    PriceSeries s;
    for (std::int64_t t = parse_timestamp("2021-07-01"); t < parse_timestamp("2021-08-01");
         t += 3600)
      s.observations.push_back({t, 2.0});
    for (std::int64_t t = parse_timestamp("2021-09-01"); t < parse_timestamp("2021-10-01");
         t += 3600)
      s.observations.push_back({t, 3.0});
    const auto parts = monthly_partition(s);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].window.name == "2021-07");
    CHECK(parts[1].window.name == "2021-09");
  }
  SUBCASE("single-month series maps to one window equal to the input") {
    const auto s = oracles::from_prices(oracles::iid_uniform(20, 3));
    const auto parts = monthly_partition(s);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].series == s);
    CHECK(parts[0].sparse);  // 20 < 30 observations
  }
  SUBCASE("concatenating the slices reproduces the series") {
    const auto s = oracles::from_prices(oracles::gaussian_walk(400, 5));
    const auto parts = monthly_partition(s);
    std::vector<Observation> all;
    for (const auto& p : parts)
      all.insert(all.end(), p.series.observations.begin(), p.series.observations.end());
    CHECK(all == s.observations);
    std::size_t total = 0;
    for (const auto& p : parts) total += p.series.size();
    CHECK(total == s.size());
  }
}

TEST_CASE("describe matches closed forms on tiny inputs") {
  SUBCASE("constant series flags degenerate moments") {
    const auto st = describe(oracles::from_prices({5, 5, 5, 5}));
    CHECK(st.n_obs == 4);
    CHECK(st.mean == 5.0);
    CHECK(st.std_dev == 0.0);
    CHECK(st.degenerate_moments);
    CHECK(std::isnan(st.skewness));
    CHECK(std::isnan(st.kurtosis));
    CHECK(std::isnan(st.jb_statistic));
  }
  SUBCASE("symmetric series has zero skewness") {
    const auto st = describe(oracles::from_prices({1, 2, 3, 4, 5}));
    CHECK(st.skewness == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(st.mean == 3.0);
    CHECK(st.min == 1.0);
    CHECK(st.max == 5.0);
    CHECK(st.std_dev == doctest::Approx(std::sqrt(2.5)));
    CHECK(st.kurtosis >= 1.0 + st.skewness * st.skewness);  // Pearson bound
  }
  SUBCASE("too short to define kurtosis") {
    CHECK_THROWS_AS(describe(oracles::from_prices({1, 2, 3})), VgError);
  }
}

TEST_CASE("slice is idempotent") {
  const auto s = oracles::from_prices(oracles::gaussian_walk(120, 9));
  const WindowSpec w{"mid", s.observations[20].timestamp, s.observations[90].timestamp};
  const auto once = slice(s, w);
  CHECK(slice(once, w) == once);
}

TEST_CASE("describe shape statistics are invariant under positive affine maps") {
  const auto prices = oracles::iid_uniform(500, 77);
  std::vector<double> mapped(prices.size());
  for (std::size_t i = 0; i < prices.size(); ++i) mapped[i] = 2.5 * prices[i] - 40.0;
  const auto a = describe(oracles::from_prices(prices));
  const auto b = describe(oracles::from_prices(mapped));
  CHECK(b.mean == doctest::Approx(2.5 * a.mean - 40.0).epsilon(1e-12));
  CHECK(b.skewness == doctest::Approx(a.skewness).epsilon(1e-9));
  CHECK(b.kurtosis == doctest::Approx(a.kurtosis).epsilon(1e-9));
}

TEST_CASE("describe agrees with an independent moment computation") {
  std::mt19937_64 rng(20240405);
  std::normal_distribution<double> g(50.0, 4.0);
  std::vector<double> draws(10000);
  for (double& x : draws) x = g(rng);
  const auto st = describe(oracles::from_prices(draws));
  const auto ref = oracles::moments(draws);

  CHECK(st.mean == doctest::Approx(ref.mean).epsilon(1e-12));
  CHECK(st.std_dev == doctest::Approx(ref.std_dev).epsilon(1e-12));
  CHECK(st.skewness == doctest::Approx(ref.skewness).epsilon(1e-9));
  CHECK(st.kurtosis == doctest::Approx(ref.kurtosis).epsilon(1e-9));

  // Pseudo-normal draws: kurtosis near 3 and no normality rejection.
  CHECK(st.kurtosis == doctest::Approx(3.0).epsilon(0.2 / 3.0));
  CHECK(st.jb_p_value > 0.01);

  const double jb_ref =
      draws.size() / 6.0 *
      (ref.skewness * ref.skewness + 0.25 * (ref.kurtosis - 3.0) * (ref.kurtosis - 3.0));
  CHECK(st.jb_statistic == doctest::Approx(jb_ref).epsilon(1e-9));
  CHECK(st.jb_p_value == doctest::Approx(std::exp(-jb_ref / 2.0)).epsilon(1e-9));
}
