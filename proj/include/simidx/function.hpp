#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "simidx/accumulator.hpp"
#include "simidx/errors.hpp"
#include "simidx/index_kind.hpp"
#include "simidx/scalar.hpp"

namespace simidx {

/// Real function sampled on the uniform grid x_j = origin + j dx, j in [0, M).
template <typename Scalar>
class SampledFunction {
 public:
  using Values = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  /// Throws std::invalid_argument unless dx > 0 and there is at least one sample.
  SampledFunction(Scalar origin, Scalar dx, Values values) : origin_(origin), dx_(dx), values_(std::move(values))
  {
    if (!(dx_ > Scalar(0)) || !std::isfinite(dx_)) throw std::invalid_argument("sample spacing must be positive");
    if (values_.size() < 1) throw std::invalid_argument("sampled function needs at least one sample");
  }

  /// Samples fn on [origin, origin + count dx).
  template <typename Fn>
  static SampledFunction generate(Scalar origin, Scalar dx, Eigen::Index count, Fn&& fn)
  {
    Values values(count);
    for (Eigen::Index j = 0; j < count; ++j) values(j) = fn(origin + Scalar(j) * dx);
    return SampledFunction(origin, dx, std::move(values));
  }

  Scalar origin() const { return origin_; }
  Scalar dx() const { return dx_; }
  Eigen::Index size() const { return values_.size(); }
  const Values& values() const { return values_; }
  Scalar operator[](Eigen::Index j) const { return values_(j); }
  Scalar x(Eigen::Index j) const { return origin_ + Scalar(j) * dx_; }

  /// Same grid, new samples.
  SampledFunction with_values(Values values) const { return SampledFunction(origin_, dx_, std::move(values)); }

 private:
  Scalar origin_;
  Scalar dx_;
  Values values_;
};

using Function = SampledFunction<double>;

/// Same origin, spacing and length.
template <typename Scalar>
bool aligned(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  return f.origin() == g.origin() && f.dx() == g.dx() && f.size() == g.size();
}

namespace detail {

template <typename Scalar>
void require_aligned(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  if (f.dx() != g.dx()) throw GridMismatch("different sample spacing");
  if (f.origin() != g.origin()) throw GridMismatch("different origin");
  if (f.size() != g.size()) throw GridMismatch("different sample count");
}

template <typename Scalar>
PairAccumulator<Scalar> accumulate(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  require_aligned(f, g);
  PairAccumulator<Scalar> acc(f.dx());
  for (Eigen::Index j = 0; j < f.size(); ++j) acc.push(f[j], g[j]);
  return acc;
}

}  // namespace detail

/// |f| = integral of |f(x)| dx, rectangle rule.
template <typename Scalar>
Scalar l1_norm(const SampledFunction<Scalar>& f)
{
  Scalar total{};
  for (Eigen::Index j = 0; j < f.size(); ++j) total += std::abs(f[j]);
  return f.dx() * total;
}

/// Pointwise common product s_fg min(|f|, |g|).
template <typename Scalar>
SampledFunction<Scalar> elementwise_common_product(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  detail::require_aligned(f, g);
  const auto& a = f.values();
  const auto& b = g.values();
  return f.with_values(a.sign() * b.sign() * a.abs().min(b.abs()));
}

/// Pointwise max(|f|, |g|).
template <typename Scalar>
SampledFunction<Scalar> elementwise_diamond(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  detail::require_aligned(f, g);
  return f.with_values(f.values().abs().max(g.values().abs()));
}

/// Pointwise scalar_index(kind, f_j, g_j); samples where both are zero give 0.
template <typename Scalar>
SampledFunction<Scalar> elementwise_index(IndexKind kind, const SampledFunction<Scalar>& f,
                                          const SampledFunction<Scalar>& g)
{
  detail::require_aligned(f, g);
  typename SampledFunction<Scalar>::Values out(f.size());
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    out(j) = (f[j] == Scalar(0) && g[j] == Scalar(0)) ? Scalar(0) : scalar_index(kind, f[j], g[j]);
  }
  return f.with_values(std::move(out));
}

/// Common product functional: integral of s_fg min(|f|, |g|).
template <typename Scalar>
Scalar common_product(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  return detail::accumulate(f, g).common_product();
}

/// Diamond functional: integral of max(|f|, |g|).
template <typename Scalar>
Scalar diamond(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  return detail::accumulate(f, g).diamond();
}

/// Similarity functional between two aligned sampled functions.
///
/// S1 = <<f,g>> / (f diamond g); S2 and S3 follow the multiset forms with
/// sums replaced by integrals. dx cancels in S1-S3. S4 = integral(f g) / (|f| |g|)
/// and so scales as 1/dx.
template <typename Scalar>
Scalar functional_index(IndexKind kind, const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g)
{
  return detail::accumulate(f, g).index(kind);
}

template <typename Scalar>
Scalar functional_interiority(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g, SupportMode mode)
{
  return detail::accumulate(f, g).interiority(mode);
}

template <typename Scalar>
Scalar functional_coincidence(const SampledFunction<Scalar>& f, const SampledFunction<Scalar>& g, SupportMode mode)
{
  return detail::accumulate(f, g).coincidence(mode);
}

}  // namespace simidx
