#include "pavoid/binary_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace pavoid {

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("matrix dimensions must be at least 1x1");
  words_.assign(static_cast<std::size_t>(rows_) * wpr_, 0);
}

BinaryMatrix BinaryMatrix::all_ones(int rows, int cols) {
  BinaryMatrix m(rows, cols);
  for (int r = 1; r <= rows; ++r)
    for (int w = 0; w < m.wpr_; ++w) {
      int lo = w * 64, hi = std::min(cols, lo + 64);
      std::uint64_t word = (hi - lo == 64) ? ~0ULL : ((1ULL << (hi - lo)) - 1);
      m.words_[static_cast<std::size_t>(r - 1) * m.wpr_ + w] = word;
    }
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& lines) {
  if (lines.empty()) throw std::invalid_argument("no rows given");
  int rows = static_cast<int>(lines.size());
  int cols = static_cast<int>(lines[0].size());
  BinaryMatrix m(rows, cols);
  for (int r = 1; r <= rows; ++r) {
    const std::string& line = lines[r - 1];
    if (static_cast<int>(line.size()) != cols)
      throw std::invalid_argument("ragged rows: row " + std::to_string(r));
    for (int c = 1; c <= cols; ++c) {
      char ch = line[c - 1];
      if (ch != '0' && ch != '1')
        throw std::invalid_argument("row " + std::to_string(r) +
                                    " has a character outside {0,1}");
      if (ch == '1') m.set(r, c, true);
    }
  }
  return m;
}

int BinaryMatrix::one_count() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

int BinaryMatrix::row_one_count(int r) const {
  int n = 0;
  const std::uint64_t* w = row_words(r);
  for (int i = 0; i < wpr_; ++i) n += std::popcount(w[i]);
  return n;
}

int BinaryMatrix::col_one_count(int c) const {
  int n = 0;
  for (int r = 1; r <= rows_; ++r) n += get(r, c);
  return n;
}

bool BinaryMatrix::row_covers(int r, const std::vector<std::uint64_t>& mask) const {
  const std::uint64_t* w = row_words(r);
  for (int i = 0; i < wpr_; ++i)
    if ((w[i] & mask[i]) != mask[i]) return false;
  return true;
}

bool BinaryMatrix::block_has_one(int r1, int r2, int c1, int c2) const {
  int w1 = (c1 - 1) / 64, w2 = (c2 - 1) / 64;
  for (int r = r1; r <= r2; ++r) {
    const std::uint64_t* w = row_words(r);
    for (int i = w1; i <= w2; ++i) {
      std::uint64_t word = w[i];
      if (i == w1) word &= ~0ULL << ((c1 - 1) % 64);
      if (i == w2) {
        int hi = (c2 - 1) % 64;
        if (hi != 63) word &= (1ULL << (hi + 1)) - 1;
      }
      if (word) return true;
    }
  }
  return false;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix m(cols_, rows_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c)
      if (get(r, c)) m.set(c, r, true);
  return m;
}

BinaryMatrix BinaryMatrix::rotate90() const {
  // (r, c) -> (c, rows+1-r): top row becomes rightmost column.
  BinaryMatrix m(cols_, rows_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c)
      if (get(r, c)) m.set(c, rows_ + 1 - r, true);
  return m;
}

BinaryMatrix BinaryMatrix::flip_rows() const {
  BinaryMatrix m(rows_, cols_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c)
      if (get(r, c)) m.set(rows_ + 1 - r, c, true);
  return m;
}

BinaryMatrix BinaryMatrix::flip_cols() const {
  BinaryMatrix m(rows_, cols_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c)
      if (get(r, c)) m.set(r, cols_ + 1 - c, true);
  return m;
}

BinaryMatrix BinaryMatrix::without_rows_cols(const std::vector<int>& del_rows,
                                             const std::vector<int>& del_cols) const {
  std::vector<bool> dr(rows_ + 1, false), dc(cols_ + 1, false);
  for (int r : del_rows) {
    if (r < 1 || r > rows_) throw std::invalid_argument("row index out of range");
    dr[r] = true;
  }
  for (int c : del_cols) {
    if (c < 1 || c > cols_) throw std::invalid_argument("column index out of range");
    dc[c] = true;
  }
  int nr = 0, nc = 0;
  for (int r = 1; r <= rows_; ++r) nr += !dr[r];
  for (int c = 1; c <= cols_; ++c) nc += !dc[c];
  if (nr == 0 || nc == 0)
    throw std::invalid_argument("deletion leaves an empty matrix");
  BinaryMatrix m(nr, nc);
  int rr = 0;
  for (int r = 1; r <= rows_; ++r) {
    if (dr[r]) continue;
    ++rr;
    int cc = 0;
    for (int c = 1; c <= cols_; ++c) {
      if (dc[c]) continue;
      ++cc;
      if (get(r, c)) m.set(rr, cc, true);
    }
  }
  return m;
}

bool BinaryMatrix::lex_less(const BinaryMatrix& o) const {
  // Same shape assumed; compare row-major entry sequences.
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c) {
      bool a = get(r, c), b = o.get(r, c);
      if (a != b) return !a;
    }
  return false;
}

std::string BinaryMatrix::row_string(int r) const {
  std::string s(cols_, '0');
  for (int c = 1; c <= cols_; ++c)
    if (get(r, c)) s[c - 1] = '1';
  return s;
}

BinaryMatrix apply_symmetry(const BinaryMatrix& m, SymmetryOp op) {
  switch (op) {
    case SymmetryOp::transpose: return m.transpose();
    case SymmetryOp::rotate90: return m.rotate90();
    case SymmetryOp::flip_rows: return m.flip_rows();
    case SymmetryOp::flip_cols: return m.flip_cols();
  }
  throw std::invalid_argument("unknown symmetry");
}

}  // namespace pavoid
