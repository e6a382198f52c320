#include <algorithm>
#include <numeric>
#include <random>

#include <doctest.h>

#include "simidx/vector.hpp"

using namespace simidx;

namespace {

VectorXd vec(std::initializer_list<double> v)
{
  VectorXd out(Eigen::Index(v.size()));
  std::copy(v.begin(), v.end(), out.data());
  return out;
}

}  // namespace

TEST_CASE("vector index worked values")
{
  CHECK(vector_index(IndexKind::S1, vec({1, 2}), vec({1, 2})) == 1.0);
  CHECK(vector_index(IndexKind::S1, vec({2, 1}), vec({1, 3})) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(vector_index(IndexKind::S4, vec({1, 0}), vec({0, 1})) == 0.0);

  const auto r = SupportMode::RestrictedPositive;
  CHECK(vector_interiority(vec({1, 1}), vec({5, 5}), r) == 1.0);
  CHECK(vector_interiority(vec({2, 1}), vec({1, 3}), r) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(vector_interiority(vec({1, -1}), vec({1, 1}), r) == 1.0);

  CHECK(vector_coincidence(vec({2, 1}), vec({1, 3}), r) == doctest::Approx(4.0 / 15.0).epsilon(1e-15));
  CHECK(vector_coincidence(vec({0.5, -3}), vec({0.5, -3}), r) == 1.0);
  CHECK(vector_coincidence(vec({1, 1}), vec({5, 5}), r) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("vector errors")
{
  CHECK_THROWS_AS(vector_index(IndexKind::S1, vec({1, 2}), vec({1})), LengthMismatch);
  CHECK_THROWS_AS(vector_index(IndexKind::S2, vec({0, 0}), vec({0, 0})), EmptyComparison);
}

TEST_CASE("vector indices accept Eigen expressions")
{
  const VectorXd x = vec({1, -2, 3});
  const VectorXd y = vec({2, -1, 0.5});
  CHECK(vector_index(IndexKind::S1, 2.0 * x, x + x) == 1.0);
  CHECK(vector_index(IndexKind::S3, x.head(2), y.head(2)) ==
        vector_index(IndexKind::S3, vec({1, -2}), vec({2, -1})));
  CHECK(vector_index(IndexKind::S1, x.array(), y.array()) == vector_index(IndexKind::S1, x, y));
}

TEST_CASE("vector index matches induced multiset and is permutation invariant")
{
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_int_distribution<int> len(1, 24);
  for (int n = 0; n < 1000; ++n) {
    const int size = len(rng);
    VectorXd x(size), y(size);
    for (int i = 0; i < size; ++i) {
      x(i) = u(rng);
      y(i) = u(rng);
    }
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VectorXd px(size), py(size);
    for (int i = 0; i < size; ++i) {
      px(i) = x(perm[i]);
      py(i) = y(perm[i]);
    }

    const auto mx = to_multiset(x);
    const auto my = to_multiset(y);
    for (IndexKind k : kAllIndexKinds) {
      const double v = vector_index(k, x, y);
      CHECK(v == mset_index(k, mx, my));
      CHECK(vector_index(k, px, py) == doctest::Approx(v).epsilon(1e-12));
    }
    CHECK(sign(vector_index(IndexKind::S4, x, y)) == sign(x.dot(y)));
  }
}
