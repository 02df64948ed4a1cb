#pragma once

#include <cstddef>

#include "vgnet/graph.hpp"
#include "vgnet/series.hpp"

namespace vgnet {

/// Abscissa used by the visibility test: `ordinal` replaces t_i by the
/// observation index i (the default; session breaks and weekends are
/// bridged by construction), `actual` uses the raw timestamps.
enum class TimeMode { ordinal, actual };

/// True iff every observation strictly between i and j lies strictly below
/// the chord joining (t_i, p_i) and (t_j, p_j). Adjacent pairs are always
/// visible. Requires 0 <= i < j < n.
bool visible(const PriceSeries& series, std::size_t i, std::size_t j,
             TimeMode mode = TimeMode::ordinal);

/// Reference construction: tests every pair with visible(). Quadratic on
/// typical data; kept as the oracle for build_fast.
Graph build_naive(const PriceSeries& series, TimeMode mode = TimeMode::ordinal);

/// Divide-and-conquer construction. The range maximum blocks every chord
/// crossing it, so only pairs incident to the maximum (found by two linear
/// sweeps) plus pairs inside each half remain. Expected O(n log n) on
/// i.i.d. data; degrades to O(n^2) on monotone series. Produces an edge
/// set identical to build_naive on every input.
Graph build_fast(const PriceSeries& series, TimeMode mode = TimeMode::ordinal);

}  // namespace vgnet
