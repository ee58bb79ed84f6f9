#include "tango/pieces.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace tango {

PieceBasis::PieceBasis(const RingPtr& ring, const std::vector<int>& twists, int degree)
    : degree_(degree) {
  for (uint32_t c = 0; c < twists.size(); ++c) {
    int d = degree - twists[c];
    if (d < 0) continue;
    for (const Mono& m : ring->piece_basis(d)) {
      index_[{m.lo, m.hi, c}] = elems_.size();
      elems_.push_back({c, m});
    }
  }
}

long long PieceBasis::index_of(uint32_t comp, const Mono& m) const {
  auto it = index_.find({m.lo, m.hi, comp});
  return it == index_.end() ? -1 : (long long)it->second;
}

void PieceBasis::append_coords(BitMatrix& mat, const Polynomial& p) const {
  mat.append_row();
  size_t r = mat.rows() - 1;
  for (size_t i = 0; i < p.terms().size(); ++i) {
    long long idx = index_of(p.terms()[i].comp, p.terms()[i].m);
    if (idx < 0) throw std::logic_error("element not in the graded piece");
    if (p.coeffs()[i] & 1) mat.flip(r, size_t(idx));
  }
}

std::vector<uint64_t> PieceBasis::coords(const Polynomial& p) const {
  std::vector<uint64_t> v((dim() + 63) / 64 + 1, 0);
  for (size_t i = 0; i < p.terms().size(); ++i) {
    long long idx = index_of(p.terms()[i].comp, p.terms()[i].m);
    if (idx < 0) throw std::logic_error("element not in the graded piece");
    if (p.coeffs()[i] & 1) v[size_t(idx) / 64] ^= 1ull << (size_t(idx) % 64);
  }
  return v;
}

Polynomial PieceBasis::from_bits(const RingPtr& ring, const uint64_t* bits) const {
  Polynomial p(ring);
  for (size_t i = 0; i < elems_.size(); ++i)
    if ((bits[i / 64] >> (i % 64)) & 1)
      p.raw_add_term(elems_[i].second, 1, elems_[i].first);
  p.normalize();
  return p;
}

void RowSpace::reduce(std::vector<uint64_t>& v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    size_t p = pivots_[i];
    if ((v[p / 64] >> (p % 64)) & 1)
      for (size_t w = 0; w < words_; ++w) v[w] ^= rows_[i][w];
  }
}

bool RowSpace::insert(std::vector<uint64_t> v) {
  v.resize(words_ ? words_ : 1, 0);
  reduce(v);
  size_t pivot = cols_;
  for (size_t w = 0; w < words_ && pivot == cols_; ++w) {
    if (!v[w]) continue;
    pivot = w * 64 + size_t(std::countr_zero(v[w]));
  }
  if (pivot >= cols_) return false;
  for (size_t i = 0; i < rows_.size(); ++i)
    if ((rows_[i][pivot / 64] >> (pivot % 64)) & 1)
      for (size_t w = 0; w < words_; ++w) rows_[i][w] ^= v[w];
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::contains(std::vector<uint64_t> v) const {
  v.resize(words_ ? words_ : 1, 0);
  reduce(v);
  for (uint64_t w : v)
    if (w) return false;
  return true;
}

std::vector<size_t> minimal_generator_indices(const RingPtr& ring,
                                              const std::vector<int>& ambient_twists,
                                              const std::vector<Polynomial>& gens) {
  if (ring->field.p != 2)
    throw std::logic_error("module piece arithmetic is implemented for GF(2)");
  std::map<int, std::vector<size_t>> by_degree;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    auto d = gens[i].homogeneous_degree(ambient_twists);
    if (!d) throw std::invalid_argument("generator not homogeneous");
    by_degree[*d].push_back(i);
  }
  std::vector<size_t> keep;
  if (by_degree.empty()) return keep;
  int dmin = by_degree.begin()->first, dmax = by_degree.rbegin()->first;

  std::vector<Polynomial> span_polys;  // spanning rows carried to the next degree
  for (int d = dmin; d <= dmax; ++d) {
    PieceBasis basis(ring, ambient_twists, d);
    RowSpace space(basis.dim());
    std::vector<Polynomial> next_polys;
    for (const Polynomial& b : span_polys)
      for (int v = 0; v < ring->nvars(); ++v) {
        Polynomial p = b.term_multiple(Mono::variable(v), 1).reduced();
        if (!p.is_zero() && space.insert(basis.coords(p))) next_polys.push_back(p);
      }
    if (auto it = by_degree.find(d); it != by_degree.end())
      for (size_t gi : it->second)
        if (space.insert(basis.coords(gens[gi]))) {
          keep.push_back(gi);
          next_polys.push_back(gens[gi]);
        }
    span_polys = std::move(next_polys);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace tango
