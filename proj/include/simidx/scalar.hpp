#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "simidx/errors.hpp"
#include "simidx/index_kind.hpp"

namespace simidx {

/// sign(v) in {-1, 0, +1}; sign(0) = 0.
template <typename Scalar>
constexpr int sign(Scalar v)
{
  return (Scalar(0) < v) - (v < Scalar(0));
}

/// Conjoint sign s_xy = sign(x) sign(y).
template <typename Scalar>
constexpr int conjoint_sign(Scalar x, Scalar y)
{
  return sign(x) * sign(y);
}

/// Euclidean distance from the point (x, y) to the line y = x.
template <typename Scalar>
Scalar diagonal_distance(Scalar x, Scalar y)
{
  return std::abs(x - y) / std::numbers::sqrt2_v<Scalar>;
}

/// |x - y| / max(|x|, |y|).
///
/// Lies in [0, 1] for same-sign pairs; opposite-sign pairs reach up to 2
/// (e.g. (1, -1)). For same-sign pairs 1 - result = min/max of the moduli,
/// i.e. magnitude_index(S1, x, y).
template <typename Scalar>
Scalar normalized_diagonal_distance(Scalar x, Scalar y)
{
  const Scalar largest = std::max(std::abs(x), std::abs(y));
  if (largest == Scalar(0)) throw BothZero();
  return std::abs(x - y) / largest;
}

/// Signed similarity index between two scalars.
///
///   S1 = s_xy min(|x|,|y|) / max(|x|,|y|)
///   S2 = s_xy 2 min(|x|,|y|) / (|x| + |y|)
///   S3 = x y / max(|x|,|y|)^2
///   S4 = x y
///
/// S1-S3 lie in [-1, 1] and throw BothZero for (0, 0). A single zero input
/// gives 0. S4 is defined everywhere.
template <typename Scalar>
Scalar scalar_index(IndexKind kind, Scalar x, Scalar y)
{
  if (kind == IndexKind::S4) return x * y;

  const Scalar ax = std::abs(x);
  const Scalar ay = std::abs(y);
  const Scalar hi = std::max(ax, ay);
  if (hi == Scalar(0)) throw BothZero();
  const Scalar lo = std::min(ax, ay);
  const Scalar s = Scalar(conjoint_sign(x, y));

  switch (kind) {
    case IndexKind::S1: return s * lo / hi;
    case IndexKind::S2: return s * Scalar(2) * lo / (ax + ay);
    case IndexKind::S3: return x * y / (hi * hi);
    case IndexKind::S4: break;
  }
  return x * y;
}

/// Unsigned form: scalar_index on the moduli. S1-S3 in [0, 1]; S4 = |x||y|.
template <typename Scalar>
Scalar magnitude_index(IndexKind kind, Scalar x, Scalar y)
{
  return scalar_index(kind, std::abs(x), std::abs(y));
}

}  // namespace simidx
