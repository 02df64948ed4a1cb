#include "vgnet/vg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vgnet/errors.hpp"
#include "vgnet/timeutil.hpp"

namespace vgnet {

namespace {

// Sign-exact a*b - c*d (Kahan's determinant with FMA): the relative error is
// bounded by 2u, so the computed value is zero or carries the true sign of
// the expression over the given doubles.
inline double det2(double a, double b, double c, double d) {
  const double w = c * d;
  const double e = std::fma(c, d, -w);  // exact residual of w
  const double f = std::fma(a, b, -w);
  return f - e;
}

// p_k strictly below the chord from (t_i,p_i) to (t_j,p_j), i < k < j.
// Cross-product form of the visibility inequality; no division. Both graph
// constructions funnel every decision through this one predicate, which is
// what makes their edge sets agree exactly.
inline bool below_chord(const double* t, const double* p, std::size_t i,
                        std::size_t j, std::size_t k) {
  return det2(p[k] - p[i], t[j] - t[i], p[j] - p[i], t[k] - t[i]) < 0.0;
}

std::vector<double> abscissa(const PriceSeries& series, TimeMode mode) {
  std::vector<double> t(series.size());
  if (mode == TimeMode::ordinal) {
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i);
  } else {
    for (std::size_t i = 0; i < t.size(); ++i)
      t[i] = static_cast<double>(series.observations[i].timestamp);
  }
  return t;
}

std::vector<double> prices(const PriceSeries& series) {
  std::vector<double> p(series.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = series.observations[i].price;
  return p;
}

GraphMeta meta_of(const PriceSeries& series) {
  GraphMeta m;
  m.instrument = series.instrument_label;
  m.frequency = series.frequency_label;
  if (!series.observations.empty())
    m.window = format_date(series.observations.front().timestamp) + ".." +
               format_date(series.observations.back().timestamp);
  return m;
}

bool pair_visible(const double* t, const double* p, std::size_t i, std::size_t j) {
  for (std::size_t k = i + 1; k < j; ++k)
    if (!below_chord(t, p, i, j, k)) return false;
  return true;
}

// All pairs within [lo, hi], inclusive.
void naive_range(const double* t, const double* p, std::size_t lo, std::size_t hi,
                 std::vector<Edge>& edges) {
  for (std::size_t i = lo; i < hi; ++i)
    for (std::size_t j = i + 1; j <= hi; ++j)
      if (pair_visible(t, p, i, j))
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
}

constexpr std::size_t kNaiveCutoff = 32;

// Emits all edges with both endpoints in [lo, hi]. Each split continues on
// the larger half and pushes the smaller, bounding the stack by O(log n).
void divide_and_conquer(const double* t, const double* p, std::size_t lo,
                        std::size_t hi, std::vector<Edge>& edges) {
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  stack.emplace_back(lo, hi);
  while (!stack.empty()) {
    auto [l, r] = stack.back();
    stack.pop_back();
    while (l < r) {
      if (r - l < kNaiveCutoff) {
        naive_range(t, p, l, r, edges);
        break;
      }
      // First maximum of the range, deterministically.
      const std::size_t v = static_cast<std::size_t>(
          std::max_element(p + l, p + r + 1) - p);

      // Sweep right from the maximum: the blocker is the intermediate with
      // the steepest sight line so far, so one chord test per candidate
      // decides visibility.
      if (v < r) {
        edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(v + 1));
        std::size_t blocker = v + 1;
        for (std::size_t j = v + 2; j <= r; ++j) {
          if (below_chord(t, p, v, j, blocker)) {
            edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(j));
            blocker = j;
          }
        }
      }
      // Sweep left, mirrored.
      if (v > l) {
        edges.emplace_back(static_cast<NodeId>(v - 1), static_cast<NodeId>(v));
        std::size_t blocker = v - 1;
        for (std::size_t i = v - 2; i + 1 > l; --i) {
          if (below_chord(t, p, i, v, blocker)) {
            edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(v));
            blocker = i;
          }
        }
      }

      // No chord crosses the maximum, so the halves are independent.
      if (v == l) {
        l = v + 1;
      } else if (v == r) {
        r = v - 1;
      } else if (v - l >= r - v) {
        if (v + 1 < r) stack.emplace_back(v + 1, r);
        r = v - 1;
      } else {
        if (l + 1 < v) stack.emplace_back(l, v - 1);
        l = v + 1;
      }
    }
  }
}

void require_buildable(const PriceSeries& series) {
  if (series.size() < 2)
    raise(errc::too_short,
          "visibility graph needs n >= 2, got " + std::to_string(series.size()));
}

}  // namespace

bool visible(const PriceSeries& series, std::size_t i, std::size_t j, TimeMode mode) {
  const std::size_t n = series.size();
  if (j >= n || i >= j)
    raise(errc::index_out_of_range,
          "pair (" + std::to_string(i) + "," + std::to_string(j) + ") with n = " +
              std::to_string(n));
  const auto t = abscissa(series, mode);
  const auto p = prices(series);
  return pair_visible(t.data(), p.data(), i, j);
}

Graph build_naive(const PriceSeries& series, TimeMode mode) {
  require_buildable(series);
  const auto t = abscissa(series, mode);
  const auto p = prices(series);
  std::vector<Edge> edges;
  edges.reserve(series.size() * 2);
  naive_range(t.data(), p.data(), 0, series.size() - 1, edges);
  return Graph::from_edges(static_cast<NodeId>(series.size()), edges, meta_of(series));
}

Graph build_fast(const PriceSeries& series, TimeMode mode) {
  require_buildable(series);
  const auto t = abscissa(series, mode);
  const auto p = prices(series);
  std::vector<Edge> edges;
  edges.reserve(series.size() * 2);
  divide_and_conquer(t.data(), p.data(), 0, series.size() - 1, edges);
  return Graph::from_edges(static_cast<NodeId>(series.size()), edges, meta_of(series));
}

}  // namespace vgnet
