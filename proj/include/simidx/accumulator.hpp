#pragma once

#include <algorithm>
#include <cmath>

#include "simidx/errors.hpp"
#include "simidx/index_kind.hpp"
#include "simidx/scalar.hpp"

namespace simidx {

/// Running sums over aligned pairs (x_i, y_i) from which every aggregate
/// index, interiority and coincidence is formed.
///
/// Pairs are folded strictly in the order they are pushed, so two callers
/// pushing the same sequence get bitwise-identical results. Zero pairs are
/// skipped; they contribute nothing to any sum.
///
/// `weight` is the quadrature step (dx) for sampled functions and 1 for
/// multisets and vectors. Every sum is multiplied by it once when an index is
/// formed, so S1-S3 and interiority are weight-free ratios and S4 carries 1/dx.
template <typename Scalar>
class PairAccumulator {
 public:
  explicit PairAccumulator(Scalar weight = Scalar(1)) : weight_(weight) {}

  void push(Scalar x, Scalar y)
  {
    if (x == Scalar(0) && y == Scalar(0)) return;
    const Scalar ax = std::abs(x);
    const Scalar ay = std::abs(y);
    const Scalar lo = std::min(ax, ay);
    const Scalar hi = std::max(ax, ay);
    const int s = conjoint_sign(x, y);

    common_ += Scalar(s) * lo;
    diamond_ += hi;
    moduli_sum_ += ax + ay;
    max_squared_ += hi * hi;
    dot_ += x * y;
    mass_x_ += ax;
    mass_y_ += ay;
    min_all_ += lo;
    if (s > 0) {
      min_pos_ += lo;
      mass_x_pos_ += ax;
      mass_y_pos_ += ay;
    }
  }

  Scalar weight() const { return weight_; }

  /// Weighted sum of s_xy min(|x|,|y|): the common product.
  Scalar common_product() const { return weight_ * common_; }
  /// Weighted sum of max(|x|,|y|): the diamond functional.
  Scalar diamond() const { return weight_ * diamond_; }
  Scalar mass_x() const { return weight_ * mass_x_; }
  Scalar mass_y() const { return weight_ * mass_y_; }
  Scalar dot() const { return weight_ * dot_; }

  /// Aggregate index. Throws EmptyComparison when the denominator is zero.
  Scalar index(IndexKind kind) const
  {
    Scalar num{};
    Scalar den{};
    switch (kind) {
      case IndexKind::S1:
        num = weight_ * common_;
        den = weight_ * diamond_;
        break;
      case IndexKind::S2:
        num = Scalar(2) * (weight_ * common_);
        den = weight_ * moduli_sum_;
        break;
      case IndexKind::S3:
        num = weight_ * dot_;
        den = weight_ * max_squared_;
        break;
      case IndexKind::S4:
        num = weight_ * dot_;
        den = (weight_ * mass_x_) * (weight_ * mass_y_);
        break;
    }
    if (den == Scalar(0)) throw EmptyComparison(std::string(to_string(kind)) + " denominator is zero");
    return num / den;
  }

  /// Sum of min(|x|,|y|) over the selected support divided by the smaller of
  /// the two masses over that same support.
  Scalar interiority(SupportMode mode) const
  {
    const bool restricted = mode == SupportMode::RestrictedPositive;
    const Scalar num = weight_ * (restricted ? min_pos_ : min_all_);
    const Scalar den =
        std::min(weight_ * (restricted ? mass_x_pos_ : mass_x_), weight_ * (restricted ? mass_y_pos_ : mass_y_));
    if (den == Scalar(0)) throw EmptyComparison("interiority denominator is zero");
    return num / den;
  }

  /// Interiority times S1.
  Scalar coincidence(SupportMode mode) const { return interiority(mode) * index(IndexKind::S1); }

 private:
  Scalar weight_;
  Scalar common_{};
  Scalar diamond_{};
  Scalar moduli_sum_{};
  Scalar max_squared_{};
  Scalar dot_{};
  Scalar mass_x_{};
  Scalar mass_y_{};
  Scalar min_all_{};
  Scalar min_pos_{};
  Scalar mass_x_pos_{};
  Scalar mass_y_pos_{};
};

}  // namespace simidx
