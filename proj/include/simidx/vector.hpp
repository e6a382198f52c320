#pragma once

#include <Eigen/Core>

#include "simidx/accumulator.hpp"
#include "simidx/errors.hpp"
#include "simidx/index_kind.hpp"
#include "simidx/multiset.hpp"

namespace simidx {

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using VectorXd = DenseVector<double>;

namespace detail {

// Component i is folded in index order, which is the label order of the
// induced multiset {(i + 1, x_i)}; the two tiers therefore agree bit for bit.
template <typename DerivedX, typename DerivedY>
auto accumulate(const Eigen::DenseBase<DerivedX>& x, const Eigen::DenseBase<DerivedY>& y)
{
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
  PairAccumulator<Scalar> acc;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc.push(x.derived().coeff(i), y.derived().coeff(i));
  return acc;
}

}  // namespace detail

/// Vectors as multisets over {1..N}. Accepts any Eigen dense expression.
/// S4 is the inner product normalized by the L1 norms.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar vector_index(IndexKind kind, const Eigen::DenseBase<DerivedX>& x,
                                       const Eigen::DenseBase<DerivedY>& y)
{
  return detail::accumulate(x, y).index(kind);
}

template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar vector_interiority(const Eigen::DenseBase<DerivedX>& x,
                                             const Eigen::DenseBase<DerivedY>& y, SupportMode mode)
{
  return detail::accumulate(x, y).interiority(mode);
}

template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar vector_coincidence(const Eigen::DenseBase<DerivedX>& x,
                                             const Eigen::DenseBase<DerivedY>& y, SupportMode mode)
{
  return detail::accumulate(x, y).coincidence(mode);
}

/// The multiset {(i + 1, x_i)} induced by a vector.
template <typename Derived>
BasicMultiset<long, typename Derived::Scalar> to_multiset(const Eigen::DenseBase<Derived>& x)
{
  BasicMultiset<long, typename Derived::Scalar> result;
  for (Eigen::Index i = 0; i < x.size(); ++i) result.insert(static_cast<long>(i + 1), x.derived().coeff(i));
  return result;
}

}  // namespace simidx
