// Graded-piece linear algebra over GF(2): bases of graded pieces of free
// modules, coordinate extraction, span tracking and Nakayama-style minimal
// generator selection. Everything here is rank/row-reduction on bit matrices,
// independent of the Groebner path.
#pragma once

#include <unordered_map>

#include "tango/linalg.hpp"
#include "tango/ring.hpp"

namespace tango {

// Basis of (⊕_c R(-twist[c]))_d as pairs (component, monomial).
class PieceBasis {
 public:
  PieceBasis() = default;
  PieceBasis(const RingPtr& ring, const std::vector<int>& twists, int degree);

  size_t dim() const { return elems_.size(); }
  const std::pair<uint32_t, Mono>& at(size_t i) const { return elems_[i]; }
  int degree() const { return degree_; }

  // index of (comp, mono); -1 when absent
  long long index_of(uint32_t comp, const Mono& m) const;

  // Append the coordinates of a homogeneous degree-d element as a new bit row.
  void append_coords(BitMatrix& mat, const Polynomial& p) const;
  std::vector<uint64_t> coords(const Polynomial& p) const;

  Polynomial from_bits(const RingPtr& ring, const uint64_t* bits) const;

 private:
  struct Key {
    uint64_t lo, hi;
    uint32_t comp;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return MonoHash{}(Mono{k.lo, k.hi}) * 1315423911u ^ k.comp;
    }
  };
  int degree_ = 0;
  std::vector<std::pair<uint32_t, Mono>> elems_;
  std::unordered_map<Key, size_t, KeyHash> index_;
};

// Incremental row space in RREF over GF(2).
class RowSpace {
 public:
  explicit RowSpace(size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

  size_t dim() const { return rows_.size(); }
  size_t cols() const { return cols_; }

  // Reduce v against the space; returns true (and absorbs v) if independent.
  bool insert(std::vector<uint64_t> v);
  // Is v in the span?
  bool contains(std::vector<uint64_t> v) const;
  const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  // Reduce v in place against the space (public for quotient coordinates).
  void reduce_vector(std::vector<uint64_t>& v) const { reduce(v); }

 private:
  void reduce(std::vector<uint64_t>& v) const;
  size_t cols_, words_;
  std::vector<std::vector<uint64_t>> rows_;  // RREF rows
  std::vector<size_t> pivots_;
};

// Minimal homogeneous generating subset of the submodule generated by gens
// inside ⊕ R(-ambient_twists): graded Nakayama by ascending degree, spans
// carried from degree to degree by multiplying with the variables.
// Returns indices into gens of a minimal generating subset.
std::vector<size_t> minimal_generator_indices(const RingPtr& ring,
                                              const std::vector<int>& ambient_twists,
                                              const std::vector<Polynomial>& gens);

}  // namespace tango
