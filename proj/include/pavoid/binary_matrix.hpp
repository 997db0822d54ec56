#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pavoid {

// 0/1 matrix with rows bit-packed into 64-bit words so row operations
// (interval tests, mask covers, block OR) are word-parallel.
// All public indices are 1-based; unused tail bits of each row stay zero,
// which makes word-level equality and lexicographic compares valid.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols);  // all zeros; throws if rows/cols < 1

  static BinaryMatrix all_ones(int rows, int cols);
  // One string per row, characters '0'/'1'.
  static BinaryMatrix from_rows(const std::vector<std::string>& lines);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (words_[word_index(r, c)] >> bit_index(c)) & 1ULL;
  }
  void set(int r, int c, bool v) {
    std::uint64_t& w = words_[word_index(r, c)];
    std::uint64_t m = 1ULL << bit_index(c);
    if (v) w |= m; else w &= ~m;
  }

  int one_count() const;
  int row_one_count(int r) const;
  int col_one_count(int c) const;
  int row_zero_count(int r) const { return cols_ - row_one_count(r); }
  int col_zero_count(int c) const { return rows_ - col_one_count(c); }

  // True if this row has a 1 wherever mask does (mask sized words_per_row).
  bool row_covers(int r, const std::vector<std::uint64_t>& mask) const;
  // Any 1 in rows [r1,r2] x cols [c1,c2], inclusive.
  bool block_has_one(int r1, int r2, int c1, int c2) const;

  BinaryMatrix transpose() const;
  BinaryMatrix rotate90() const;  // quarter turn clockwise
  BinaryMatrix flip_rows() const;
  BinaryMatrix flip_cols() const;

  // Copy with the listed 1-based rows/cols removed (lists may be unsorted).
  BinaryMatrix without_rows_cols(const std::vector<int>& del_rows,
                                 const std::vector<int>& del_cols) const;

  bool operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
  }
  bool operator!=(const BinaryMatrix& o) const { return !(*this == o); }

  // Row-major entry order, 0 before 1.
  bool lex_less(const BinaryMatrix& o) const;

  std::string row_string(int r) const;

  int words_per_row() const { return wpr_; }
  const std::uint64_t* row_words(int r) const { return &words_[(r - 1) * wpr_]; }

 private:
  std::size_t word_index(int r, int c) const {
    return static_cast<std::size_t>(r - 1) * wpr_ + (c - 1) / 64;
  }
  static int bit_index(int c) { return (c - 1) % 64; }

  int rows_, cols_, wpr_;
  std::vector<std::uint64_t> words_;
};

enum class SymmetryOp { transpose, rotate90, flip_rows, flip_cols };

BinaryMatrix apply_symmetry(const BinaryMatrix& m, SymmetryOp op);

}  // namespace pavoid
