#include "pavoid/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pavoid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int k = static_cast<int>(images_.size());
  if (k < 1) throw std::invalid_argument("permutation must have length >= 1");
  inverse_.assign(k, 0);
  for (int i = 1; i <= k; ++i) {
    int v = images_[i - 1];
    if (v < 1 || v > k)
      throw std::invalid_argument("image " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(k));
    if (inverse_[v - 1] != 0)
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " appears twice; not a bijection");
    inverse_[v - 1] = i;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversal(int k) {
  std::vector<int> v(k);
  for (int i = 1; i <= k; ++i) v[i - 1] = k + 1 - i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_matrix(const BinaryMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("permutation matrix must be square");
  std::vector<int> img(m.rows(), 0);
  for (int r = 1; r <= m.rows(); ++r) {
    if (m.row_one_count(r) != 1)
      throw std::invalid_argument("row " + std::to_string(r) +
                                  " does not have exactly one 1");
    for (int c = 1; c <= m.cols(); ++c)
      if (m.get(r, c)) img[r - 1] = c;
  }
  return Permutation(std::move(img));  // column uniqueness checked by ctor
}

Permutation Permutation::inverse() const {
  return Permutation(inverse_);
}

BinaryMatrix Permutation::matrix() const {
  int k = size();
  BinaryMatrix m(k, k);
  for (int i = 1; i <= k; ++i) m.set(i, image(i), true);
  return m;
}

std::string Permutation::to_text() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s;
}

Permutation restriction(const Permutation& rho, std::vector<int> positions) {
  if (positions.empty())
    throw std::invalid_argument("restriction needs at least one position");
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw std::invalid_argument("restriction positions must be distinct");
  for (int p : positions)
    if (p < 1 || p > rho.size())
      throw std::invalid_argument("position " + std::to_string(p) + " out of range");
  std::vector<int> vals;
  vals.reserve(positions.size());
  for (int p : positions) vals.push_back(rho.image(p));
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pattern;
  pattern.reserve(vals.size());
  for (int v : vals) {
    int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                sorted.begin()) + 1;
    pattern.push_back(rank);
  }
  return Permutation(std::move(pattern));
}

}  // namespace pavoid
