#include "tango/linalg.hpp"

#include <bit>

namespace tango {

std::vector<size_t> BitMatrix::echelonize() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t w = c / 64;
    uint64_t m = 1ull << (c % 64);
    size_t pivot = r;
    while (pivot < rows_ && !(row(pivot)[w] & m)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (size_t i = 0; i < words_; ++i) std::swap(row(r)[i], row(pivot)[i]);
    for (size_t i = 0; i < rows_; ++i)
      if (i != r && (row(i)[w] & m)) xor_rows(i, r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<uint64_t>> BitMatrix::kernel_basis() const {
  BitMatrix a = *this;
  std::vector<size_t> pivots = a.echelonize();
  std::vector<char> is_pivot(cols_, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<uint64_t>> basis;
  size_t words = (cols_ + 63) / 64;
  for (size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<uint64_t> v(words, 0);
    v[c / 64] |= 1ull << (c % 64);
    // pivot row i has pivot column pivots[i]
    for (size_t i = 0; i < pivots.size(); ++i)
      if (a.get(i, c)) v[pivots[i] / 64] |= 1ull << (pivots[i] % 64);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<uint64_t>> BitMatrix::solve(const std::vector<uint64_t>& b_bits) const {
  // Augment with b as an extra column.
  BitMatrix aug(rows_, cols_ + 1);
  for (size_t r = 0; r < rows_; ++r) {
    uint64_t* d = aug.row(r);
    const uint64_t* s = row(r);
    for (size_t i = 0; i < words_; ++i) d[i] = s[i];
    if ((b_bits[r / 64] >> (r % 64)) & 1) aug.set(r, cols_);
  }
  std::vector<size_t> pivots = aug.echelonize();
  size_t words = (cols_ + 63) / 64;
  std::vector<uint64_t> x(words, 0);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols_) return std::nullopt;  // inconsistent
    if (aug.get(i, cols_)) x[pivots[i] / 64] |= 1ull << (pivots[i] % 64);
  }
  return x;
}

size_t ModMatrix::rank() const {
  ModMatrix a = *this;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t pivot = r;
    while (pivot < rows_ && a.get(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (size_t j = 0; j < cols_; ++j) {
      unsigned tmp = a.get(r, j);
      a.set(r, j, a.get(pivot, j));
      a.set(pivot, j, tmp);
    }
    unsigned inv = f_.inv(a.get(r, c));
    for (size_t j = 0; j < cols_; ++j) a.set(r, j, f_.mul(a.get(r, j), inv));
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      unsigned v = a.get(i, c);
      if (!v) continue;
      for (size_t j = 0; j < cols_; ++j)
        a.set(i, j, f_.sub(a.get(i, j), f_.mul(v, a.get(r, j))));
    }
    ++r;
  }
  return r;
}

}  // namespace tango
