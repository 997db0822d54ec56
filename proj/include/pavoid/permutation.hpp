#pragma once

#include <string>
#include <vector>

#include "pavoid/binary_matrix.hpp"

namespace pavoid {

// Permutation of [k] in one-line notation; image(i) = pi(i), both 1-based.
// Its matrix has the 1 of row i in column pi(i).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijection of [k]

  static Permutation identity(int k);
  static Permutation reversal(int k);  // i -> k+1-i
  // Requires a permutation matrix (exactly one 1 per row and column).
  static Permutation from_matrix(const BinaryMatrix& m);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[i - 1]; }
  // Row of the 1-entry in column j of the matrix.
  int preimage(int j) const { return inverse_[j - 1]; }

  Permutation inverse() const;
  BinaryMatrix matrix() const;

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

  std::string to_text() const;  // "1 4 3 2 5"

 private:
  std::vector<int> images_;
  std::vector<int> inverse_;
};

// Pattern of rho on the 1-based positions in `positions` (any order given;
// they are sorted internally): relabel the chosen values by rank.
Permutation restriction(const Permutation& rho, std::vector<int> positions);

}  // namespace pavoid
