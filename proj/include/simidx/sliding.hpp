#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include <Eigen/Core>

#include "simidx/accumulator.hpp"
#include "simidx/errors.hpp"
#include "simidx/function.hpp"
#include "simidx/index_kind.hpp"

namespace simidx {

/// Convolution pairs f(x) with g(y - x); correlation pairs f(x) with g(x - y).
enum class SlideDirection { Convolution, Correlation };

/// Valid: only lags where the kernel lies entirely inside the signal; the
/// comparison support is that window. Full: every lag with at least one
/// overlapping sample; both operands are zero-padded and the support is the
/// union of the signal and the shifted kernel.
enum class BoundaryMode { Valid, Full };

/// Index value per integer lag. Lags are contiguous and increasing; a lag
/// whose denominator vanished has value 0 and degenerate[k] set.
template <typename Scalar>
struct SlideResult {
  std::vector<long> lags;
  std::vector<Scalar> values;
  std::vector<std::uint8_t> degenerate;
  Scalar dx{1};

  std::size_t size() const { return lags.size(); }
  bool operator==(const SlideResult&) const = default;
};

/// Lag range and sample bookkeeping for one sweep of kernel g over signal f.
///
/// Lag L pairs f_j with g_{j - L} (correlation) or g_{L - j} (convolution).
/// For both directions the kernel covers f indices [start(L), start(L) + K).
class SlideGeometry {
 public:
  SlideGeometry(Eigen::Index signal_len, Eigen::Index kernel_len, SlideDirection dir, BoundaryMode boundary)
      : m_(signal_len), k_(kernel_len), dir_(dir), boundary_(boundary)
  {
    if (boundary_ == BoundaryMode::Valid && k_ > m_) throw KernelTooLong(k_, m_);
  }

  long first_lag() const
  {
    if (dir_ == SlideDirection::Correlation) return boundary_ == BoundaryMode::Valid ? 0 : -(k_ - 1);
    return boundary_ == BoundaryMode::Valid ? k_ - 1 : 0;
  }

  long last_lag() const
  {
    if (dir_ == SlideDirection::Correlation) return boundary_ == BoundaryMode::Valid ? m_ - k_ : m_ - 1;
    return boundary_ == BoundaryMode::Valid ? m_ - 1 : m_ + k_ - 2;
  }

  long lag_count() const { return last_lag() - first_lag() + 1; }

  /// First signal index under the kernel at this lag.
  long start(long lag) const { return dir_ == SlideDirection::Correlation ? lag : lag - (k_ - 1); }

  /// Kernel index paired with signal index j at this lag.
  long kernel_index(long lag, long j) const { return dir_ == SlideDirection::Correlation ? j - lag : lag - j; }

  /// Signal indices [begin, end) forming the comparison support at this lag.
  std::pair<long, long> support(long lag) const
  {
    const long s = start(lag);
    if (boundary_ == BoundaryMode::Valid) return {s, s + k_};
    return {std::min<long>(0, s), std::max<long>(m_, s + k_)};
  }

 private:
  long m_;
  long k_;
  SlideDirection dir_;
  BoundaryMode boundary_;
};

namespace detail {

template <typename Scalar>
PairAccumulator<Scalar> accumulate_lag(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g,
                                       const SlideGeometry& geom, long lag)
{
  const long m = f.size();
  const long k = g.size();
  PairAccumulator<Scalar> acc(f.dx());
  const auto [begin, end] = geom.support(lag);
  for (long j = begin; j < end; ++j) {
    const long i = geom.kernel_index(lag, j);
    const Scalar x = (j >= 0 && j < m) ? f[j] : Scalar(0);
    const Scalar y = (i >= 0 && i < k) ? g[i] : Scalar(0);
    acc.push(x, y);
  }
  return acc;
}

inline unsigned resolve_threads(unsigned requested, long lags, long work_per_lag)
{
  if (requested != 0) return requested;
  if (lags * work_per_lag < (1L << 16)) return 1;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates `eval(accumulator)` at every lag. Each lag is reduced
/// sequentially on its own, so the result does not depend on `threads`.
template <typename Scalar, typename Eval>
SlideResult<Scalar> sweep(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g, SlideDirection dir,
                          BoundaryMode boundary, unsigned threads, Eval eval)
{
  if (f.dx() != g.dx()) throw GridMismatch("different sample spacing");
  const SlideGeometry geom(f.size(), g.size(), dir, boundary);
  const long count = geom.lag_count();
  const long first = geom.first_lag();

  SlideResult<Scalar> out;
  out.dx = f.dx();
  out.lags.resize(count);
  out.values.assign(count, Scalar(0));
  out.degenerate.assign(count, 0);

  auto run = [&](long lo, long hi) {
    for (long n = lo; n < hi; ++n) {
      const long lag = first + n;
      out.lags[n] = lag;
      try {
        out.values[n] = eval(accumulate_lag(f, g, geom, lag));
      } catch (const EmptyComparison&) {
        out.degenerate[n] = 1;
      }
    }
  };

  const unsigned workers = std::min<long>(resolve_threads(threads, count, f.size() + g.size()), count);
  if (workers <= 1) {
    run(0, count);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const long chunk = (count + workers - 1) / workers;
    for (long lo = 0; lo < count; lo += chunk) pool.emplace_back(run, lo, std::min(count, lo + chunk));
  }
  return out;
}

}  // namespace detail

/// Similarity convolution/correlation of f with kernel g for one index kind.
///
/// At each lag the value is functional_index(kind, ...) over the comparison
/// support described by BoundaryMode. Throws GridMismatch when the spacings
/// differ and KernelTooLong for a Valid sweep with len(g) > len(f).
/// `threads` = 0 picks a worker count automatically; output is identical for any value.
template <typename Scalar>
SlideResult<Scalar> slide(IndexKind kind, const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g,
                          SlideDirection dir, BoundaryMode boundary, unsigned threads = 0)
{
  return detail::sweep(f, g, dir, boundary, threads,
                       [kind](const PairAccumulator<Scalar>& acc) { return acc.index(kind); });
}

/// Per-lag coincidence (interiority times S1) in the correlation direction.
template <typename Scalar>
SlideResult<Scalar> coincidence_correlate(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g,
                                          BoundaryMode boundary, SupportMode mode, unsigned threads = 0)
{
  return detail::sweep(f, g, SlideDirection::Correlation, boundary, threads,
                       [mode](const PairAccumulator<Scalar>& acc) { return acc.coincidence(mode); });
}

template <typename Scalar>
struct MatchResult {
  long best_lag{};
  Scalar score{};
  SlideResult<Scalar> scores;
};

/// Locates `templ` inside `signal` by the maximum of the valid-mode
/// coincidence correlation with full-support interiority. Ties go to the
/// smallest lag; degenerate lags never win. Throws EmptyComparison if every
/// lag is degenerate.
template <typename Scalar>
MatchResult<Scalar> template_match(const SampledFunction<Scalar>& signal, const SampledFunction<Scalar>& templ,
                                   unsigned threads = 0)
{
  MatchResult<Scalar> result;
  result.scores = coincidence_correlate(signal, templ, BoundaryMode::Valid, SupportMode::Full, threads);
  bool found = false;
  for (std::size_t n = 0; n < result.scores.size(); ++n) {
    if (result.scores.degenerate[n]) continue;
    if (!found || result.scores.values[n] > result.score) {
      result.best_lag = result.scores.lags[n];
      result.score = result.scores.values[n];
      found = true;
    }
  }
  if (!found) throw EmptyComparison("every lag of the template sweep is degenerate");
  return result;
}

}  // namespace simidx
