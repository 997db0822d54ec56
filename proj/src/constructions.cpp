#include "pavoid/constructions.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pavoid {

Permutation cross(int k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("cross is defined for odd sizes only");
  std::vector<int> img(k);
  for (int i = 1; i <= k; ++i) img[i - 1] = (i % 2 == 1) ? i : k + 1 - i;
  return Permutation(std::move(img));
}

Permutation fox_grid(int k) {
  int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(k))));
  if (k < 1 || s * s != k)
    throw std::invalid_argument("fox_grid size must be a perfect square");
  std::vector<int> img(k);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) img[a + b * s] = b + a * s + 1;
  return Permutation(std::move(img));
}

BinaryMatrix x_matrix(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("x_matrix requires an even size >= 2");
  BinaryMatrix m(k, k);
  for (int i = 1; i <= k; ++i) {
    m.set(i, i, true);
    m.set(i, k + 1 - i, true);
  }
  return m;
}

BinaryMatrix all_ones_matrix(int r, int k) { return BinaryMatrix::all_ones(r, k); }

Permutation grid_product(const Permutation& pi, const Permutation& rho) {
  int k = pi.size(), l = rho.size();
  std::vector<int> img(k * l);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j)
      img[(j - 1) * k + i - 1] = (pi.image(i) - 1) * l + rho.image(j);
  return Permutation(std::move(img));
}

namespace {

void require_square(const BinaryMatrix& m, const char* op) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(op) + " requires square operands");
}

}  // namespace

BinaryMatrix direct_sum(const BinaryMatrix& a, const BinaryMatrix& b) {
  require_square(a, "direct_sum");
  require_square(b, "direct_sum");
  int k = a.rows(), l = b.rows();
  BinaryMatrix m(k + l, k + l);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      if (b.get(i, j)) m.set(i, k + j, true);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (a.get(i, j)) m.set(l + i, j, true);
  return m;
}

BinaryMatrix skew_sum(const BinaryMatrix& a, const BinaryMatrix& b) {
  require_square(a, "skew_sum");
  require_square(b, "skew_sum");
  int k = a.rows(), l = b.rows();
  BinaryMatrix m(k + l, k + l);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (a.get(i, j)) m.set(i, j, true);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j)
      if (b.get(i, j)) m.set(k + i, k + j, true);
  return m;
}

BinaryMatrix minkowski_sum(const BinaryMatrix& a, const BinaryMatrix& b) {
  require_square(a, "minkowski_sum");
  require_square(b, "minkowski_sum");
  int k = a.rows(), l = b.rows();
  BinaryMatrix m(k + l, k + l);
  for (int i1 = 1; i1 <= k; ++i1)
    for (int j1 = 1; j1 <= k; ++j1) {
      if (!a.get(i1, j1)) continue;
      for (int i2 = 1; i2 <= l; ++i2)
        for (int j2 = 1; j2 <= l; ++j2)
          if (b.get(i2, j2)) m.set(i1 + i2, j1 + j2, true);
    }
  return m;
}

Permutation random_permutation(int k, SplitMix64& gen) {
  if (k < 1) throw std::invalid_argument("permutation length must be >= 1");
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  shuffle(v, gen);
  return Permutation(std::move(v));
}

Permutation random_permutation(int k, std::uint64_t seed) {
  SplitMix64 g(seed);
  return random_permutation(k, g);
}

}  // namespace pavoid
