// Exact linear algebra: bit-packed GF(2) row reduction plus a small dense
// mod-p fallback for other primes.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tango/gf.hpp"

namespace tango {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool get(size_t r, size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
  }
  void set(size_t r, size_t c, bool v = true) {
    uint64_t& w = data_[r * words_ + c / 64];
    uint64_t m = 1ull << (c % 64);
    w = v ? (w | m) : (w & ~m);
  }
  void flip(size_t r, size_t c) { data_[r * words_ + c / 64] ^= 1ull << (c % 64); }

  uint64_t* row(size_t r) { return data_.data() + r * words_; }
  const uint64_t* row(size_t r) const { return data_.data() + r * words_; }
  size_t words() const { return words_; }

  void xor_rows(size_t dst, size_t src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (size_t i = 0; i < words_; ++i) d[i] ^= s[i];
  }

  void append_row() {
    data_.resize((rows_ + 1) * words_, 0);
    ++rows_;
  }

  // In-place row echelon; returns pivot columns (ascending). Row order of the
  // eliminated matrix is pivot rows first.
  std::vector<size_t> echelonize();

  size_t rank() const {
    BitMatrix copy = *this;
    return copy.echelonize().size();
  }

  // Basis of the right kernel {x : A x = 0}, each as a bit row of length cols.
  std::vector<std::vector<uint64_t>> kernel_basis() const;

  // Solve A x = b; returns empty if inconsistent.
  std::optional<std::vector<uint64_t>> solve(const std::vector<uint64_t>& b_bits) const;

 private:
  size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> data_;
};

// Row-major dense matrix over GF(p), small sizes only.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(size_t rows, size_t cols, PrimeField f)
      : rows_(rows), cols_(cols), f_(f), data_(rows * cols, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  unsigned get(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  void set(size_t r, size_t c, unsigned v) { data_[r * cols_ + c] = v % f_.p; }

  size_t rank() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  PrimeField f_;
  std::vector<unsigned> data_;
};

}  // namespace tango
