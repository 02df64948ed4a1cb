#include "vgnet/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vgnet/errors.hpp"
#include "vgnet/rng.hpp"

namespace vgnet {

namespace {

/// Hurwitz zeta in long double. Terms below abscissa 64 are summed
/// directly; the remainder is the Euler-Maclaurin expansion truncated after
/// the B4 term, whose first neglected term (B6) is < 1e-13 at abscissa 64.
long double zeta_l(long double a, long double q) {
  long double sum = 0.0L;
  long double x = q;
  while (x < 64.0L) {
    sum += std::pow(x, -a);
    x += 1.0L;
  }
  const long double xa = std::pow(x, -a);  // x^-a
  sum += x * xa / (a - 1.0L);              // integral term x^(1-a)/(a-1)
  sum += xa * 0.5L;
  sum += a * xa / (12.0L * x);
  sum -= a * (a + 1.0L) * (a + 2.0L) * xa / (720.0L * x * x * x);
  return sum;
}

/// Ascending (degree value, count) histogram with tail suffix statistics.
struct DegreeHist {
  std::vector<NodeId> value;
  std::vector<std::int64_t> count;
  std::vector<std::int64_t> tail_n;       // tail_n[j] = # obs >= value[j]
  std::vector<long double> tail_ln_sum;   // sum of count*ln(value) over i >= j
};

DegreeHist make_hist(std::span<const NodeId> degrees) {
  DegreeHist h;
  std::vector<NodeId> sorted(degrees.begin(), degrees.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    h.value.push_back(sorted[i]);
    h.count.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  const std::size_t s = h.value.size();
  h.tail_n.assign(s, 0);
  h.tail_ln_sum.assign(s, 0.0L);
  std::int64_t n = 0;
  long double ls = 0.0L;
  for (std::size_t j = s; j-- > 0;) {
    n += h.count[j];
    ls += static_cast<long double>(h.count[j]) *
          std::log(static_cast<long double>(h.value[j]));
    h.tail_n[j] = n;
    h.tail_ln_sum[j] = ls;
  }
  return h;
}

struct AlphaSearch {
  double alpha = 0;
  double log_likelihood = 0;
  bool at_boundary = false;
};

/// Golden-section maximization of the tail log-likelihood
/// l(a) = -n ln zeta(a, k_min) - a * sum(ln k), which is concave in a
/// (log-partition of a one-parameter exponential family).
AlphaSearch maximize_alpha(NodeId k_min, std::int64_t n_tail, long double ln_sum) {
  const auto loglik = [&](double a) -> double {
    const long double z = zeta_l(a, static_cast<long double>(k_min));
    return static_cast<double>(-static_cast<long double>(n_tail) * std::log(z) -
                               static_cast<long double>(a) * ln_sum);
  };
  constexpr double invphi = 0.6180339887498949;
  double lo = kAlphaLo, hi = kAlphaHi;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = loglik(c), fd = loglik(d);
  while (hi - lo > kAlphaTol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = loglik(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = loglik(d);
    }
  }
  AlphaSearch out;
  out.alpha = 0.5 * (lo + hi);
  out.log_likelihood = loglik(out.alpha);
  // An optimum within 10*tol of either end is indistinguishable from a
  // boundary-pinned one and is reported as such.
  out.at_boundary =
      out.alpha <= kAlphaLo + 10 * kAlphaTol || out.alpha >= kAlphaHi - 10 * kAlphaTol;
  return out;
}

/// KS distance between the empirical tail CDF and the fitted discrete CDF,
/// evaluated at the observed support points only. The fitted CDF advances by
/// the telescoping identity zeta(a, k+1) = zeta(a, k) - k^-a across small
/// gaps and re-evaluates from scratch across large ones.
double ks_distance(const DegreeHist& h, std::size_t j, double alpha) {
  const long double a = alpha;
  const long double zk = zeta_l(a, static_cast<long double>(h.value[j]));
  long double z = zk;
  NodeId cur = h.value[j];  // invariant: z == zeta(a, cur)
  const auto m = static_cast<long double>(h.tail_n[j]);
  std::int64_t cum = 0;
  double ks = 0;
  for (std::size_t i = j; i < h.value.size(); ++i) {
    const NodeId target = h.value[i] + 1;
    if (target - cur <= 16) {
      while (cur < target) {
        z -= std::pow(static_cast<long double>(cur), -a);
        ++cur;
      }
    } else {
      z = zeta_l(a, static_cast<long double>(target));
      cur = target;
    }
    cum += h.count[i];
    const double f_emp = static_cast<double>(static_cast<long double>(cum) / m);
    const double f_fit = static_cast<double>(1.0L - z / zk);
    ks = std::max(ks, std::abs(f_emp - f_fit));
  }
  return ks;
}

}  // namespace

double hurwitz_zeta(double alpha, double q) {
  if (!(alpha > 1.0))
    raise(errc::domain_error, "hurwitz_zeta: alpha must exceed 1, got " + std::to_string(alpha));
  if (!(q > 0.0))
    raise(errc::domain_error, "hurwitz_zeta: q must be positive, got " + std::to_string(q));
  return static_cast<double>(zeta_l(alpha, q));
}

AlphaFit fit_alpha(std::span<const NodeId> degrees, NodeId k_min) {
  if (k_min < 1)
    raise(errc::domain_error, "fit_alpha: k_min must be >= 1, got " + std::to_string(k_min));
  std::int64_t n_tail = 0;
  long double ln_sum = 0.0L;
  for (NodeId k : degrees) {
    if (k < k_min) continue;
    ++n_tail;
    ln_sum += std::log(static_cast<long double>(k));
  }
  if (n_tail < kMinTailSize)
    raise(errc::tail_too_small, "fit_alpha: " + std::to_string(n_tail) + " observations >= " +
                                    std::to_string(k_min) + ", need " +
                                    std::to_string(kMinTailSize));
  const AlphaSearch s = maximize_alpha(k_min, n_tail, ln_sum);
  if (s.at_boundary)
    raise(errc::no_maximum_in_range,
          "fit_alpha: likelihood optimum pinned at alpha = " + std::to_string(s.alpha));
  return AlphaFit{s.alpha, s.log_likelihood};
}

PowerLawFit select_kmin(std::span<const NodeId> degrees) {
  const DegreeHist h = make_hist(degrees);
  bool any_candidate = false;
  bool any_fit = false;
  PowerLawFit best;
  for (std::size_t j = 0; j < h.value.size(); ++j) {
    if (h.value[j] < 1) continue;
    if (h.tail_n[j] < kMinTailSize) break;  // tails only shrink from here on
    // A single-valued tail has a monotone likelihood; skip it.
    if (j + 1 == h.value.size()) break;
    any_candidate = true;
    const AlphaSearch s = maximize_alpha(h.value[j], h.tail_n[j], h.tail_ln_sum[j]);
    if (s.at_boundary) continue;
    const double ks = ks_distance(h, j, s.alpha);
    if (!any_fit || ks < best.ks_distance) {
      any_fit = true;
      best.alpha = s.alpha;
      best.beta = s.alpha - 1.0;
      best.k_min = h.value[j];
      best.ks_distance = ks;
      best.n_tail = h.tail_n[j];
      best.log_likelihood = s.log_likelihood;
    }
  }
  if (!any_candidate)
    raise(errc::tail_too_small,
          "select_kmin: no candidate k_min has a tail of >= " + std::to_string(kMinTailSize) +
              " observations spanning >= 2 distinct degrees");
  if (!any_fit)
    raise(errc::no_maximum_in_range,
          "select_kmin: every candidate's likelihood optimum is pinned at a boundary");
  return best;
}

double fitted_ccdf(double alpha, NodeId k_min, NodeId k) {
  if (!(alpha > 1.0))
    raise(errc::domain_error, "fitted_ccdf: alpha must exceed 1");
  if (k_min < 1 || k < k_min)
    raise(errc::domain_error, "fitted_ccdf: need 1 <= k_min <= k, got k_min = " +
                                  std::to_string(k_min) + ", k = " + std::to_string(k));
  const long double a = alpha;
  return static_cast<double>(zeta_l(a, static_cast<long double>(k)) /
                             zeta_l(a, static_cast<long double>(k_min)));
}

double fitted_ccdf(const PowerLawFit& fit, NodeId k) { return fitted_ccdf(fit.alpha, fit.k_min, k); }

DiscretePowerLawSampler::DiscretePowerLawSampler(double alpha, NodeId k_min)
    : alpha_(alpha), k_min_(k_min) {
  if (!(alpha > 1.0))
    raise(errc::domain_error, "DiscretePowerLawSampler: alpha must exceed 1");
  if (k_min < 1)
    raise(errc::domain_error, "DiscretePowerLawSampler: k_min must be >= 1");
  const long double a = alpha;
  const long double zk = zeta_l(a, static_cast<long double>(k_min));
  zeta_kmin_ = static_cast<double>(zk);
  constexpr std::size_t kMaxTable = 1u << 16;
  long double cum = 0.0L;
  for (std::size_t i = 0; i < kMaxTable; ++i) {
    const long double k = static_cast<long double>(k_min) + static_cast<long double>(i);
    cum += std::pow(k, -a) / zk;
    cdf_.push_back(static_cast<double>(cum));
    if (1.0L - cum < 1e-12L) break;
  }
}

NodeId DiscretePowerLawSampler::quantile(double u) const {
  if (u <= cdf_.back()) {
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    return k_min_ + static_cast<NodeId>(it - cdf_.begin());
  }
  // Far tail: smallest k with CDF(k) >= u, i.e. zeta(a, k+1)/zeta(a, k_min)
  // <= 1-u. Galloping search brackets it, binary search pins it down. 1-u is
  // exact in double for u >= 1/2, which this branch guarantees.
  const long double a = alpha_;
  const long double zk = zeta_l(a, static_cast<long double>(k_min_));
  const long double ru = static_cast<long double>(1.0 - u);
  const auto ccdf_after = [&](std::int64_t k) {
    return zeta_l(a, static_cast<long double>(k) + 1.0L) / zk;
  };
  std::int64_t lo = k_min_ + static_cast<std::int64_t>(cdf_.size()) - 1;  // CDF(lo) < u
  std::int64_t span = 1;
  std::int64_t hi = lo + span;
  while (ccdf_after(hi) > ru) {
    lo = hi;
    span *= 2;
    hi = lo + span;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ccdf_after(mid) > ru)
      lo = mid;
    else
      hi = mid;
  }
  // Draws this deep have probability < 1e-9 for any alpha > 1.5; saturate
  // rather than widen the node-id type.
  return static_cast<NodeId>(
      std::min<std::int64_t>(hi, std::numeric_limits<NodeId>::max()));
}

NodeId DiscretePowerLawSampler::operator()(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return quantile(unit(rng));
}

double bootstrap_gof(const PowerLawFit& fit, std::span<const NodeId> degrees,
                     std::int64_t n_resamples, std::uint64_t seed) {
  if (n_resamples < 1)
    raise(errc::precondition_failed, "bootstrap_gof: n_resamples must be >= 1");
  if (fit.n_tail < kMinTailSize)
    raise(errc::tail_too_small, "bootstrap_gof: fit tail has " + std::to_string(fit.n_tail) +
                                    " observations, need " + std::to_string(kMinTailSize));
  const auto n = static_cast<std::int64_t>(degrees.size());
  std::vector<NodeId> body;
  for (NodeId k : degrees)
    if (k < fit.k_min) body.push_back(k);
  const double p_tail =
      static_cast<double>(n - static_cast<std::int64_t>(body.size())) / static_cast<double>(n);

  const DiscretePowerLawSampler sampler(fit.alpha, fit.k_min);
  std::vector<NodeId> synth(static_cast<std::size_t>(n));
  std::int64_t exceed = 0;
  for (std::int64_t r = 0; r < n_resamples; ++r) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto& k : synth) {
      if (body.empty() || unit(rng) < p_tail) {
        k = sampler(rng);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, body.size() - 1);
        k = body[pick(rng)];
      }
    }
    double ks;
    try {
      ks = select_kmin(synth).ks_distance;
    } catch (const VgError&) {
      // A resample the procedure cannot fit at all counts against the model.
      ks = std::numeric_limits<double>::infinity();
    }
    if (ks > fit.ks_distance) ++exceed;
  }
  return static_cast<double>(exceed) / static_cast<double>(n_resamples);
}

}  // namespace vgnet
