#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simidx/accumulator.hpp"
#include "simidx/index_kind.hpp"

namespace simidx {

/// Multiset with real (possibly negative) multiplicities.
///
/// Labels are unique and kept in ascending order; a label that is absent has
/// multiplicity 0. Entries stored with an explicit zero are allowed but are
/// not part of the support.
template <typename Label, typename Scalar = double>
class BasicMultiset {
 public:
  using label_type = Label;
  using scalar_type = Scalar;
  using storage_type = std::map<Label, Scalar>;
  using const_iterator = typename storage_type::const_iterator;

  BasicMultiset() = default;

  /// Throws std::invalid_argument on a repeated label.
  BasicMultiset(std::initializer_list<std::pair<Label, Scalar>> entries)
  {
    for (const auto& [label, m] : entries) insert(label, m);
  }

  template <typename Range>
  static BasicMultiset from_entries(const Range& entries)
  {
    BasicMultiset result;
    for (const auto& [label, m] : entries) result.insert(label, m);
    return result;
  }

  /// Adds a new label. Throws std::invalid_argument if it is already present.
  void insert(const Label& label, Scalar multiplicity)
  {
    if (!entries_.emplace(label, multiplicity).second) {
      throw std::invalid_argument("duplicate multiset label");
    }
  }

  Scalar multiplicity(const Label& label) const
  {
    auto it = entries_.find(label);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  /// Labels with nonzero multiplicity, ascending.
  std::vector<Label> support() const
  {
    std::vector<Label> labels;
    for (const auto& [label, m] : entries_) {
      if (m != Scalar(0)) labels.push_back(label);
    }
    return labels;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  /// Equality of multiplicity functions: explicit zeros compare equal to absence.
  friend bool operator==(const BasicMultiset& a, const BasicMultiset& b)
  {
    bool equal = true;
    for_each_aligned(a, b, [&](const Label&, Scalar x, Scalar y) { equal = equal && x == y; });
    return equal;
  }

 private:
  storage_type entries_;
};

using Multiset = BasicMultiset<std::string, double>;

/// Calls fn(label, m_A(label), m_B(label)) over the union of the stored
/// labels of A and B in ascending label order.
template <typename Label, typename Scalar, typename Fn>
void for_each_aligned(const BasicMultiset<Label, Scalar>& a, const BasicMultiset<Label, Scalar>& b, Fn&& fn)
{
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      fn(ia->first, ia->second, Scalar(0));
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      fn(ib->first, Scalar(0), ib->second);
      ++ib;
    } else {
      fn(ia->first, ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
}

namespace detail {

template <typename Label, typename Scalar, typename Op>
BasicMultiset<Label, Scalar> combine(const BasicMultiset<Label, Scalar>& a, const BasicMultiset<Label, Scalar>& b,
                                     Op op)
{
  BasicMultiset<Label, Scalar> result;
  for_each_aligned(a, b, [&](const Label& label, Scalar x, Scalar y) {
    const Scalar m = op(x, y);
    if (m != Scalar(0)) result.insert(label, m);
  });
  return result;
}

template <typename Label, typename Scalar>
PairAccumulator<Scalar> accumulate(const BasicMultiset<Label, Scalar>& a, const BasicMultiset<Label, Scalar>& b)
{
  PairAccumulator<Scalar> acc;
  for_each_aligned(a, b, [&](const Label&, Scalar x, Scalar y) { acc.push(x, y); });
  return acc;
}

}  // namespace detail

/// Elementwise max over the union of supports. Zero results are dropped.
template <typename Label, typename Scalar>
BasicMultiset<Label, Scalar> mset_union(const BasicMultiset<Label, Scalar>& a, const BasicMultiset<Label, Scalar>& b)
{
  return detail::combine(a, b, [](Scalar x, Scalar y) { return std::max(x, y); });
}

/// Elementwise min over the union of supports. Zero results are dropped.
template <typename Label, typename Scalar>
BasicMultiset<Label, Scalar> mset_intersection(const BasicMultiset<Label, Scalar>& a,
                                               const BasicMultiset<Label, Scalar>& b)
{
  return detail::combine(a, b, [](Scalar x, Scalar y) { return std::min(x, y); });
}

/// L1 mass: sum of |m_A(a_i)|.
template <typename Label, typename Scalar>
Scalar mset_cardinality(const BasicMultiset<Label, Scalar>& a)
{
  Scalar total{};
  for (const auto& [label, m] : a) total += std::abs(m);
  return total;
}

/// Aggregate similarity index between two multisets.
///
///   S1 = sum s_xy min(|x|,|y|) / sum max(|x|,|y|)     (signed Jaccard J_N)
///   S2 = 2 sum s_xy min(|x|,|y|) / sum (|x| + |y|)
///   S3 = sum x y / sum max(|x|,|y|)^2
///   S4 = sum x y / (|A| |B|)                           (L1 cardinalities)
///
/// Throws EmptyComparison when the denominator is zero.
template <typename Label, typename Scalar>
Scalar mset_index(IndexKind kind, const BasicMultiset<Label, Scalar>& a, const BasicMultiset<Label, Scalar>& b)
{
  return detail::accumulate(a, b).index(kind);
}

/// How much one multiset lies inside the other; in [0, 1].
template <typename Label, typename Scalar>
Scalar mset_interiority(const BasicMultiset<Label, Scalar>& a, const BasicMultiset<Label, Scalar>& b,
                        SupportMode mode)
{
  return detail::accumulate(a, b).interiority(mode);
}

/// Interiority times S1.
template <typename Label, typename Scalar>
Scalar mset_coincidence(const BasicMultiset<Label, Scalar>& a, const BasicMultiset<Label, Scalar>& b,
                        SupportMode mode)
{
  return detail::accumulate(a, b).coincidence(mode);
}

}  // namespace simidx
