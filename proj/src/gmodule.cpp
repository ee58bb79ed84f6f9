#include "tango/gmodule.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tango {

// ---- GradedMatrix -----------------------------------------------------------

GradedMatrix::GradedMatrix(RingPtr ring, std::vector<int> row_deg,
                           std::vector<int> col_deg, std::vector<Polynomial> cols)
    : ring_(std::move(ring)),
      row_deg_(std::move(row_deg)),
      col_deg_(std::move(col_deg)),
      cols_(std::move(cols)) {
  if (cols_.size() != col_deg_.size())
    throw std::invalid_argument("column count mismatch");
  for (const auto& c : cols_) {
    if (c.ring() != ring_) throw std::invalid_argument("column in wrong ring");
    if (!c.is_zero() && c.max_component() >= row_deg_.size())
      throw std::invalid_argument("column component exceeds row count");
  }
}

GradedMatrix GradedMatrix::from_entries(
    const RingPtr& ring, std::vector<int> row_deg, std::vector<int> col_deg,
    const std::vector<std::vector<Polynomial>>& entries) {
  if (entries.size() != row_deg.size())
    throw std::invalid_argument("entry row count mismatch");
  std::vector<Polynomial> cols(col_deg.size(), Polynomial(ring));
  for (size_t i = 0; i < row_deg.size(); ++i) {
    if (entries[i].size() != col_deg.size())
      throw std::invalid_argument("entry column count mismatch");
    for (size_t j = 0; j < col_deg.size(); ++j)
      cols[j] = cols[j] + entries[i][j].shift_component(uint32_t(i));
  }
  return GradedMatrix(ring, std::move(row_deg), std::move(col_deg), std::move(cols));
}

GradedMatrix GradedMatrix::zero_map(const RingPtr& ring, std::vector<int> row_deg) {
  return GradedMatrix(ring, std::move(row_deg), {}, {});
}

Polynomial GradedMatrix::entry(size_t i, size_t j) const {
  return cols_.at(j).component_part(uint32_t(i));
}

std::optional<std::pair<size_t, size_t>> GradedMatrix::homogeneity_defect() const {
  for (size_t j = 0; j < cols(); ++j)
    for (size_t i = 0; i < rows(); ++i) {
      Polynomial e = entry(i, j);
      if (e.is_zero()) continue;
      auto d = e.homogeneous_degree();
      if (!d || *d != col_deg_[j] - row_deg_[i]) return std::make_pair(i, j);
    }
  return std::nullopt;
}

GradedMatrix GradedMatrix::transpose() const {
  std::vector<int> rd, cd;
  for (int d : col_deg_) rd.push_back(-d);
  for (int d : row_deg_) cd.push_back(-d);
  std::vector<Polynomial> cols(row_deg_.size(), Polynomial(ring_));
  for (size_t j = 0; j < cols_.size(); ++j)
    for (size_t i = 0; i < row_deg_.size(); ++i) {
      Polynomial e = entry(i, j);
      if (!e.is_zero()) cols[i] = cols[i] + e.shift_component(uint32_t(j));
    }
  return GradedMatrix(ring_, std::move(rd), std::move(cd), std::move(cols));
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& then) const {
  // this: F1 -> F0, then: F2 -> F1; result: F2 -> F0
  if (then.rows() != cols()) throw std::invalid_argument("composition shape mismatch");
  std::vector<Polynomial> cols(then.cols(), Polynomial(ring_));
  for (size_t j = 0; j < then.cols(); ++j)
    for (size_t k = 0; k < then.rows(); ++k) {
      Polynomial c = then.entry(k, j);
      if (!c.is_zero()) cols[j] = cols[j] + cols_[k] * c;
    }
  return GradedMatrix(ring_, row_deg_, then.col_degrees(), std::move(cols));
}

GradedMatrix GradedMatrix::twist(int d) const {
  std::vector<int> rd = row_deg_, cd = col_deg_;
  for (int& x : rd) x -= d;
  for (int& x : cd) x -= d;
  return GradedMatrix(ring_, std::move(rd), std::move(cd), cols_);
}

bool GradedMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.is_zero()) return false;
  return true;
}

std::string GradedMatrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows(); ++i) {
    os << "[";
    for (size_t j = 0; j < cols(); ++j) {
      if (j) os << ", ";
      os << entry(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

// ---- GradedModule -----------------------------------------------------------

GradedModule::GradedModule(RingPtr ring, std::vector<int> gen_deg, GradedMatrix rel)
    : ring_(std::move(ring)), gen_deg_(std::move(gen_deg)), rel_(std::move(rel)) {
  if (rel_.ring() == nullptr) rel_ = GradedMatrix::zero_map(ring_, gen_deg_);
  if (rel_.row_degrees() != gen_deg_)
    throw std::invalid_argument("relation rows must match generator degrees");
}

GradedModule GradedModule::free_module(const RingPtr& ring, std::vector<int> gen_deg) {
  return GradedModule(ring, gen_deg, GradedMatrix::zero_map(ring, gen_deg));
}

GradedModule GradedModule::zero_module(const RingPtr& ring) {
  return free_module(ring, {});
}

GradedModule GradedModule::cokernel(const GradedMatrix& m) {
  return GradedModule(m.ring(), m.row_degrees(), m);
}

GradedModule GradedModule::twist(int d) const {
  std::vector<int> gd = gen_deg_;
  for (int& x : gd) x -= d;
  return GradedModule(ring_, std::move(gd), rel_.twist(d));
}

// ---- syzygies ---------------------------------------------------------------

GradedMatrix syzygies(const GradedMatrix& m) {
  GBOptions o;
  o.track = true;
  GBasis gb = groebner(m.ring(), uint32_t(std::max<size_t>(m.rows(), 1)), m.columns(), o);
  std::vector<Polynomial> syz = gb.syzygies;
  std::vector<size_t> keep =
      minimal_generator_indices(m.ring(), m.col_degrees(), syz);
  std::vector<Polynomial> cols;
  std::vector<int> cd;
  for (size_t k : keep) {
    auto d = syz[k].homogeneous_degree(m.col_degrees());
    if (!d) throw std::logic_error("inhomogeneous syzygy");
    cols.push_back(syz[k]);
    cd.push_back(*d);
  }
  return GradedMatrix(m.ring(), m.col_degrees(), std::move(cd), std::move(cols));
}

GradedModule image_module(const GradedMatrix& m) {
  return GradedModule(m.ring(), m.col_degrees(), syzygies(m));
}

// ---- prune ------------------------------------------------------------------

GradedModule prune(const GradedModule& m) {
  const RingPtr& R = m.ring();
  std::vector<int> gen_deg = m.gen_degrees();
  std::vector<int> col_deg = m.relations().col_degrees();
  std::vector<Polynomial> cols = m.relations().columns();

  // eliminate unit entries
  for (;;) {
    size_t ui = 0, uj = 0;
    bool found = false;
    for (size_t j = 0; j < cols.size() && !found; ++j) {
      for (size_t i = 0; i < gen_deg.size() && !found; ++i) {
        if (col_deg[j] != gen_deg[i]) continue;
        Polynomial e = cols[j].component_part(uint32_t(i));
        if (!e.is_zero() && e.degree() == 0) {
          ui = i;
          uj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    // normalize the pivot column so the unit is 1
    unsigned c = 0;
    {
      Polynomial e = cols[uj].component_part(uint32_t(ui));
      c = e.lead_coeff();
    }
    Polynomial pivot = cols[uj].scaled(R->field.inv(c));
    // clear generator ui from every other column
    for (size_t j = 0; j < cols.size(); ++j) {
      if (j == uj) continue;
      Polynomial e = cols[j].component_part(uint32_t(ui));
      if (!e.is_zero()) cols[j] = cols[j] - (pivot * e);
    }
    // drop row ui and column uj
    std::vector<uint32_t> remap(gen_deg.size());
    for (size_t i = 0, k = 0; i < gen_deg.size(); ++i)
      remap[i] = (i == ui) ? UINT32_MAX : uint32_t(k++);
    std::vector<int> gd2;
    for (size_t i = 0; i < gen_deg.size(); ++i)
      if (i != ui) gd2.push_back(gen_deg[i]);
    std::vector<Polynomial> cols2;
    std::vector<int> cd2;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (j == uj) continue;
      Polynomial nc(R);
      for (size_t t = 0; t < cols[j].terms().size(); ++t) {
        uint32_t cc = remap[cols[j].terms()[t].comp];
        if (cc == UINT32_MAX) continue;  // killed generator; entry was cleared
        nc.raw_add_term(cols[j].terms()[t].m, cols[j].coeffs()[t], cc);
      }
      nc.normalize();
      cols2.push_back(std::move(nc));
      cd2.push_back(col_deg[j]);
    }
    gen_deg = std::move(gd2);
    cols = std::move(cols2);
    col_deg = std::move(cd2);
  }

  // minimal generating subset of the relation columns
  std::vector<Polynomial> nonzero;
  std::vector<int> nzdeg;
  for (size_t j = 0; j < cols.size(); ++j)
    if (!cols[j].is_zero()) {
      nonzero.push_back(cols[j]);
      nzdeg.push_back(col_deg[j]);
    }
  std::vector<size_t> keep = minimal_generator_indices(R, gen_deg, nonzero);
  std::vector<Polynomial> cols3;
  std::vector<int> cd3;
  for (size_t k : keep) {
    cols3.push_back(nonzero[k]);
    cd3.push_back(nzdeg[k]);
  }
  return GradedModule(R, gen_deg,
                      GradedMatrix(R, gen_deg, std::move(cd3), std::move(cols3)));
}

// ---- hilbert data -------------------------------------------------------------

long long hilbert_function(const GradedModule& m, int d) {
  const RingPtr& R = m.ring();
  long long free_dim = 0;
  for (int g : m.gen_degrees()) free_dim += R->piece_dim(d - g);
  if (free_dim == 0) return 0;
  if (R->field.p == 2) {
    PieceBasis basis(R, m.gen_degrees(), d);
    RowSpace space(basis.dim());
    long long rank = 0;
    for (size_t j = 0; j < m.relations().cols(); ++j) {
      const Polynomial& col = m.relations().column(j);
      int cd = m.relations().col_degrees()[j];
      if (cd > d) continue;
      for (const Mono& mono : R->piece_basis(d - cd)) {
        Polynomial p = col.term_multiple(mono, 1).reduced();
        if (!p.is_zero() && space.insert(basis.coords(p))) ++rank;
      }
    }
    return free_dim - rank;
  }
  // generic small-prime fallback
  PieceBasis basis(R, m.gen_degrees(), d);
  std::vector<std::vector<unsigned>> rows;
  for (size_t j = 0; j < m.relations().cols(); ++j) {
    const Polynomial& col = m.relations().column(j);
    int cd = m.relations().col_degrees()[j];
    if (cd > d) continue;
    for (const Mono& mono : R->piece_basis(d - cd)) {
      Polynomial p = col.term_multiple(mono, 1).reduced();
      std::vector<unsigned> row(basis.dim(), 0);
      for (size_t t = 0; t < p.terms().size(); ++t) {
        long long idx = basis.index_of(p.terms()[t].comp, p.terms()[t].m);
        row[size_t(idx)] = (row[size_t(idx)] + p.coeffs()[t]) % R->field.p;
      }
      rows.push_back(std::move(row));
    }
  }
  ModMatrix mat(rows.size(), basis.dim(), R->field);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) mat.set(r, c, rows[r][c]);
  return free_dim - (long long)mat.rank();
}

long long hilbert_function_gb(const GradedModule& m, int d) {
  const RingPtr& R = m.ring();
  GBasis gb = groebner(R, uint32_t(std::max<size_t>(m.gen_count(), 1)),
                       m.relations().columns());
  long long count = 0;
  for (uint32_t c = 0; c < m.gen_count(); ++c) {
    int dd = d - m.gen_degrees()[c];
    if (dd < 0) continue;
    for (const Mono& mono : R->piece_basis(dd)) {
      bool reducible = false;
      for (const Polynomial& g : gb.basis) {
        const Term& lt = g.lead_term();
        if (lt.comp == c && lt.m.divides(mono)) {
          reducible = true;
          break;
        }
      }
      if (!reducible) ++count;
    }
  }
  return count;
}

GradedModule restrict_scalars(const GradedModule& m) {
  const RingPtr& R = m.ring();
  if (!R->has_quotient) return m;
  RingPtr amb = R->ambient();
  Polynomial q = R->quotient_relation();
  std::vector<Polynomial> cols;
  std::vector<int> cd;
  for (size_t j = 0; j < m.relations().cols(); ++j) {
    cols.push_back(m.relations().column(j).transfer(amb));
    cd.push_back(m.relations().col_degrees()[j]);
  }
  for (size_t i = 0; i < m.gen_count(); ++i) {
    cols.push_back(q.shift_component(uint32_t(i)));
    cd.push_back(m.gen_degrees()[i] + q.degree());
  }
  return GradedModule(amb, m.gen_degrees(),
                      GradedMatrix(amb, m.gen_degrees(), std::move(cd), std::move(cols)));
}

Resolution free_resolution(const GradedModule& m, int length_cap) {
  Resolution res;
  res.module = prune(m);
  GradedMatrix cur = res.module.relations();
  res.steps.push_back(cur);
  while (int(res.steps.size()) < length_cap) {
    if (cur.cols() == 0) return res;  // resolution ended
    GradedMatrix next = syzygies(cur);
    if (next.cols() == 0) return res;
    res.steps.push_back(next);
    cur = next;
  }
  // could there be more? check one more syzygy step lazily
  if (cur.cols() != 0 && syzygies(cur).cols() != 0) res.truncated = true;
  return res;
}

BettiTable Resolution::betti() const {
  BettiTable b;
  b.truncated = truncated;
  for (int d : module.gen_degrees()) b.entries[{0, d}] += 1;
  for (size_t s = 0; s < steps.size(); ++s)
    for (int d : steps[s].col_degrees()) b.entries[{int(s) + 1, d}] += 1;
  return b;
}

std::string BettiTable::str() const {
  if (entries.empty()) return "(zero)\n";
  int smax = 0, tmin = INT_MAX, tmax = INT_MIN;
  for (const auto& [k, v] : entries) {
    smax = std::max(smax, k.first);
    // row index in Macaulay2 style: twist - step
    tmin = std::min(tmin, k.second - k.first);
    tmax = std::max(tmax, k.second - k.first);
  }
  std::ostringstream os;
  os << "      ";
  for (int s = 0; s <= smax; ++s) os << s << "\t";
  os << "\n";
  for (int r = tmin; r <= tmax; ++r) {
    os << r << ":\t";
    for (int s = 0; s <= smax; ++s) {
      auto it = entries.find({s, r + s});
      os << (it == entries.end() ? std::string(".") : std::to_string(it->second))
         << "\t";
    }
    os << "\n";
  }
  if (truncated) os << "(truncated)\n";
  return os.str();
}

RatPoly hilbert_polynomial(const GradedModule& m) {
  GradedModule mm = m.ring()->has_quotient ? restrict_scalars(m) : m;
  int n = mm.ring()->nvars();
  Resolution res = free_resolution(mm, n + 2);
  if (res.truncated) throw std::logic_error("resolution did not terminate");
  RatPoly hp;
  BettiTable b = res.betti();
  for (const auto& [k, count] : b.entries) {
    RatPoly term = binomial_poly(n - 1, n - 1 - k.second) * Rational(long(count));
    hp = (k.first % 2 == 0) ? hp + term : hp - term;
  }
  return hp;
}

// ---- functors -----------------------------------------------------------------

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("mixed rings");
  std::vector<int> gd = a.gen_degrees();
  gd.insert(gd.end(), b.gen_degrees().begin(), b.gen_degrees().end());
  std::vector<Polynomial> cols = a.relations().columns();
  std::vector<int> cd = a.relations().col_degrees();
  for (size_t j = 0; j < b.relations().cols(); ++j) {
    cols.push_back(
        b.relations().column(j).shift_component(uint32_t(a.gen_count())));
    cd.push_back(b.relations().col_degrees()[j]);
  }
  return GradedModule(a.ring(), gd, GradedMatrix(a.ring(), gd, cd, cols));
}

GradedModule tensor(const GradedModule& a, const GradedModule& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("mixed rings");
  const RingPtr& R = a.ring();
  size_t ga = a.gen_count(), gb = b.gen_count();
  std::vector<int> gd(ga * gb);
  for (size_t i = 0; i < ga; ++i)
    for (size_t k = 0; k < gb; ++k)
      gd[i * gb + k] = a.gen_degrees()[i] + b.gen_degrees()[k];
  std::vector<Polynomial> cols;
  std::vector<int> cd;
  for (size_t j = 0; j < a.relations().cols(); ++j)
    for (size_t k = 0; k < gb; ++k) {
      std::vector<uint32_t> image(ga);
      for (size_t i = 0; i < ga; ++i) image[i] = uint32_t(i * gb + k);
      cols.push_back(a.relations().column(j).map_components(image));
      cd.push_back(a.relations().col_degrees()[j] + b.gen_degrees()[k]);
    }
  for (size_t j = 0; j < b.relations().cols(); ++j)
    for (size_t i = 0; i < ga; ++i) {
      std::vector<uint32_t> image(gb);
      for (size_t k = 0; k < gb; ++k) image[k] = uint32_t(i * gb + k);
      cols.push_back(b.relations().column(j).map_components(image));
      cd.push_back(b.relations().col_degrees()[j] + a.gen_degrees()[i]);
    }
  return GradedModule(R, gd, GradedMatrix(R, gd, cd, cols));
}

namespace {

// index maps for symmetric / exterior squares of the generator basis
struct PairIndexer {
  size_t n;
  bool strict;  // exterior: i < j only
  std::map<std::pair<size_t, size_t>, uint32_t> idx;
  std::vector<std::pair<size_t, size_t>> pairs;
  explicit PairIndexer(size_t n, bool strict) : n(n), strict(strict) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + (strict ? 1 : 0); j < n; ++j) {
        idx[{i, j}] = uint32_t(pairs.size());
        pairs.push_back({i, j});
      }
  }
  std::optional<uint32_t> find(size_t i, size_t j) const {
    if (i > j) std::swap(i, j);
    if (strict && i == j) return std::nullopt;
    auto it = idx.find({i, j});
    return it == idx.end() ? std::nullopt : std::optional<uint32_t>(it->second);
  }
};

GradedModule power2(const GradedModule& m, bool exterior) {
  const RingPtr& R = m.ring();
  size_t g = m.gen_count();
  PairIndexer ix(g, exterior);
  std::vector<int> gd;
  for (auto [i, j] : ix.pairs) gd.push_back(m.gen_degrees()[i] + m.gen_degrees()[j]);
  std::vector<Polynomial> cols;
  std::vector<int> cd;
  for (size_t j = 0; j < m.relations().cols(); ++j)
    for (size_t k = 0; k < g; ++k) {
      const Polynomial& r = m.relations().column(j);
      Polynomial nc(R);
      for (size_t t = 0; t < r.terms().size(); ++t) {
        auto target = ix.find(r.terms()[t].comp, k);
        if (!target) continue;
        nc.raw_add_term(r.terms()[t].m, r.coeffs()[t], *target);
      }
      nc.normalize();
      cols.push_back(std::move(nc));
      cd.push_back(m.relations().col_degrees()[j] + m.gen_degrees()[k]);
    }
  return GradedModule(R, gd, GradedMatrix(R, gd, cd, cols));
}

}  // namespace

GradedModule sym2(const GradedModule& m) { return power2(m, false); }
GradedModule wedge2(const GradedModule& m) { return power2(m, true); }

GradedModule dual_sheaf(const GradedModule& m) {
  GradedMatrix k = syzygies(m.relations().transpose());
  return image_module(k);
}

// Hom(⊕R(-d_j), N) = ⊕_j N(d_j), with generator (j,k) of degree n_k - d_j.
namespace {

struct HomOfFree {
  GradedModule module;
  size_t blocks;      // j-range
  size_t block_size;  // k-range (gens of N)
};

HomOfFree hom_of_free(const std::vector<int>& free_deg, const GradedModule& n) {
  const RingPtr& R = n.ring();
  size_t nb = free_deg.size(), nk = n.gen_count();
  std::vector<int> gd(nb * nk);
  for (size_t j = 0; j < nb; ++j)
    for (size_t k = 0; k < nk; ++k)
      gd[j * nk + k] = n.gen_degrees()[k] - free_deg[j];
  std::vector<Polynomial> cols;
  std::vector<int> cd;
  for (size_t j = 0; j < nb; ++j)
    for (size_t c = 0; c < n.relations().cols(); ++c) {
      std::vector<uint32_t> image(nk);
      for (size_t k = 0; k < nk; ++k) image[k] = uint32_t(j * nk + k);
      cols.push_back(n.relations().column(c).map_components(image));
      cd.push_back(n.relations().col_degrees()[c] - free_deg[j]);
    }
  return {GradedModule(R, gd, GradedMatrix(R, gd, cd, cols)), nb, nk};
}

// induced map Hom(F, N) -> Hom(G, N) from d: G -> F (precomposition)
GradedMatrix hom_induced(const GradedMatrix& d, const HomOfFree& src,
                         const HomOfFree& dst) {
  const RingPtr& R = d.ring();
  size_t nk = src.block_size;
  std::vector<Polynomial> cols(src.blocks * nk, Polynomial(R));
  std::vector<int> cdeg(src.blocks * nk);
  for (size_t j = 0; j < src.blocks; ++j)
    for (size_t k = 0; k < nk; ++k) {
      Polynomial col(R);
      for (size_t jp = 0; jp < dst.blocks; ++jp) {
        Polynomial e = d.entry(j, jp);  // d: F_{i+1}->F_i, rows j, cols jp
        if (!e.is_zero())
          col = col + e.shift_component(uint32_t(jp * nk + k));
      }
      cols[j * nk + k] = col;
      cdeg[j * nk + k] = src.module.gen_degrees()[j * nk + k];
    }
  return GradedMatrix(R, dst.module.gen_degrees(), cdeg, cols);
}

}  // namespace

std::optional<std::string> ModuleMap::well_defined() const {
  if (matrix.row_degrees() != target.gen_degrees() ||
      matrix.col_degrees() != source.gen_degrees())
    return "map degrees do not match the modules";
  // matrix * (source relations) must lie in the span of target relations
  GBasis gb = groebner(target.ring(), uint32_t(std::max<size_t>(target.gen_count(), 1)),
                       target.relations().columns());
  GradedMatrix comp = matrix.compose(source.relations());
  for (size_t j = 0; j < comp.cols(); ++j)
    if (!in_module(gb, comp.column(j))) return "map does not respect relations";
  return std::nullopt;
}

GradedModule kernel_of_map(const ModuleMap& f) {
  const RingPtr& R = f.source.ring();
  // stack [Phi | relB] and take syzygies; the Phi-block coefficients generate
  // the preimage of im(relB)
  size_t acols = f.source.gen_count();
  std::vector<Polynomial> cols = f.matrix.columns();
  std::vector<int> cd = f.matrix.col_degrees();
  for (size_t j = 0; j < f.target.relations().cols(); ++j) {
    cols.push_back(f.target.relations().column(j));
    cd.push_back(f.target.relations().col_degrees()[j]);
  }
  GradedMatrix stacked(R, f.target.gen_degrees(), cd, cols);
  GradedMatrix syz = syzygies(stacked);
  std::vector<Polynomial> ker_gens;
  std::vector<int> ker_deg;
  for (size_t j = 0; j < syz.cols(); ++j) {
    Polynomial u = syz.column(j).restrict_components(0, uint32_t(acols));
    if (u.is_zero()) continue;
    ker_gens.push_back(u);
    ker_deg.push_back(syz.col_degrees()[j]);
  }
  std::vector<size_t> keep = minimal_generator_indices(R, f.source.gen_degrees(), ker_gens);
  std::vector<Polynomial> u2;
  std::vector<int> ud2;
  for (size_t k : keep) {
    u2.push_back(ker_gens[k]);
    ud2.push_back(ker_deg[k]);
  }
  // relations of the kernel: {w : U w ∈ im relA}
  std::vector<Polynomial> cols2 = u2;
  std::vector<int> cd2 = ud2;
  for (size_t j = 0; j < f.source.relations().cols(); ++j) {
    cols2.push_back(f.source.relations().column(j));
    cd2.push_back(f.source.relations().col_degrees()[j]);
  }
  GradedMatrix stacked2(R, f.source.gen_degrees(), cd2, cols2);
  GradedMatrix syz2 = syzygies(stacked2);
  std::vector<Polynomial> rel_cols;
  std::vector<int> rel_deg;
  for (size_t j = 0; j < syz2.cols(); ++j) {
    Polynomial w = syz2.column(j).restrict_components(0, uint32_t(u2.size()));
    if (w.is_zero()) continue;
    rel_cols.push_back(w);
    rel_deg.push_back(syz2.col_degrees()[j]);
  }
  return GradedModule(R, ud2, GradedMatrix(R, ud2, rel_deg, rel_cols));
}

GradedModule homology_of_pair(const ModuleMap& f, const ModuleMap& g) {
  // H = ker(g) / (im f + target relations of B)
  const RingPtr& R = f.source.ring();
  if (!(f.target.gen_degrees() == g.source.gen_degrees()))
    throw std::invalid_argument("maps are not composable");
  // kernel generators U ⊆ F0(B)
  size_t bcols = g.source.gen_count();
  std::vector<Polynomial> cols = g.matrix.columns();
  std::vector<int> cd = g.matrix.col_degrees();
  for (size_t j = 0; j < g.target.relations().cols(); ++j) {
    cols.push_back(g.target.relations().column(j));
    cd.push_back(g.target.relations().col_degrees()[j]);
  }
  GradedMatrix stacked(R, g.target.gen_degrees(), cd, cols);
  GradedMatrix syz = syzygies(stacked);
  std::vector<Polynomial> u;
  std::vector<int> ud;
  for (size_t j = 0; j < syz.cols(); ++j) {
    Polynomial v = syz.column(j).restrict_components(0, uint32_t(bcols));
    if (v.is_zero()) continue;
    u.push_back(v);
    ud.push_back(syz.col_degrees()[j]);
  }
  std::vector<size_t> keep = minimal_generator_indices(R, g.source.gen_degrees(), u);
  std::vector<Polynomial> u2;
  std::vector<int> ud2;
  for (size_t k : keep) {
    u2.push_back(u[k]);
    ud2.push_back(ud[k]);
  }
  // relations: {w : U w ∈ im(f) + im(relB)}
  std::vector<Polynomial> cols2 = u2;
  std::vector<int> cd2 = ud2;
  for (size_t j = 0; j < f.matrix.cols(); ++j) {
    cols2.push_back(f.matrix.column(j));
    cd2.push_back(f.matrix.col_degrees()[j]);
  }
  for (size_t j = 0; j < f.target.relations().cols(); ++j) {
    cols2.push_back(f.target.relations().column(j));
    cd2.push_back(f.target.relations().col_degrees()[j]);
  }
  GradedMatrix stacked2(R, f.target.gen_degrees(), cd2, cols2);
  GradedMatrix syz2 = syzygies(stacked2);
  std::vector<Polynomial> rel_cols;
  std::vector<int> rel_deg;
  for (size_t j = 0; j < syz2.cols(); ++j) {
    Polynomial w = syz2.column(j).restrict_components(0, uint32_t(u2.size()));
    if (w.is_zero()) continue;
    rel_cols.push_back(w);
    rel_deg.push_back(syz2.col_degrees()[j]);
  }
  return GradedModule(R, ud2, GradedMatrix(R, ud2, rel_deg, rel_cols));
}

GradedModule hom_module(const GradedModule& m, const GradedModule& n) {
  // Hom(M,N) = ker(Hom(F0,N) -> Hom(F1,N))
  HomOfFree h0 = hom_of_free(m.gen_degrees(), n);
  HomOfFree h1 = hom_of_free(m.relations().col_degrees(), n);
  GradedMatrix phi = hom_induced(m.relations(), h0, h1);
  ModuleMap f{h0.module, h1.module, phi};
  return kernel_of_map(f);
}

GradedModule ext_module(int i, const GradedModule& m_in, const GradedModule& n_in) {
  GradedModule m = restrict_scalars(m_in);
  GradedModule n = restrict_scalars(n_in);
  const RingPtr& R = m.ring();
  if (i < 0 || i > R->nvars()) return GradedModule::zero_module(R);
  if (i == 0) return hom_module(m, n);
  Resolution res = free_resolution(m, i + 2);
  // free degrees at steps i-1, i, i+1 (step -1 = generators)
  auto free_deg = [&](int s) -> std::vector<int> {
    if (s == 0) return res.module.gen_degrees();
    if (s <= int(res.steps.size())) return res.steps[size_t(s) - 1].col_degrees();
    return {};
  };
  std::vector<int> fprev = free_deg(i - 1), fcur = free_deg(i), fnext = free_deg(i + 1);
  if (fcur.empty()) return GradedModule::zero_module(R);
  HomOfFree hprev = hom_of_free(fprev, n);
  HomOfFree hcur = hom_of_free(fcur, n);
  HomOfFree hnext = hom_of_free(fnext, n);
  GradedMatrix din = res.steps[size_t(i) - 1];  // F_i -> F_{i-1}
  GradedMatrix phi = hom_induced(din, hprev, hcur);
  ModuleMap f{hprev.module, hcur.module, phi};
  if (fnext.empty()) {
    // cokernel of phi
    std::vector<Polynomial> cols = phi.columns();
    std::vector<int> cd = phi.col_degrees();
    for (size_t j = 0; j < hcur.module.relations().cols(); ++j) {
      cols.push_back(hcur.module.relations().column(j));
      cd.push_back(hcur.module.relations().col_degrees()[j]);
    }
    return prune(GradedModule(
        R, hcur.module.gen_degrees(),
        GradedMatrix(R, hcur.module.gen_degrees(), cd, cols)));
  }
  GradedMatrix dout = res.steps[size_t(i)];  // F_{i+1} -> F_i
  GradedMatrix psi = hom_induced(dout, hcur, hnext);
  ModuleMap g{hcur.module, hnext.module, psi};
  return prune(homology_of_pair(f, g));
}

GradedModule saturate_reflexive(const GradedModule& m) {
  return prune(dual_sheaf(dual_sheaf(m)));
}

// ---- ring-map functors ---------------------------------------------------------

GradedModule pullback_module(const RingMap& f, const GradedModule& m) {
  auto [ok, msg] = f.validate();
  if (!ok) throw std::invalid_argument("invalid ring map: " + msg);
  if (m.ring() != f.source) throw std::invalid_argument("module not over the source ring");
  std::vector<int> gd;
  for (int d : m.gen_degrees()) gd.push_back(f.scale * d);
  std::vector<Polynomial> cols;
  std::vector<int> cd;
  for (size_t j = 0; j < m.relations().cols(); ++j) {
    Polynomial nc(f.target);
    for (size_t i = 0; i < m.gen_count(); ++i) {
      Polynomial e = m.relations().entry(i, j);
      if (!e.is_zero()) nc = nc + f.apply(e).shift_component(uint32_t(i));
    }
    cols.push_back(std::move(nc));
    cd.push_back(f.scale * m.relations().col_degrees()[j]);
  }
  return GradedModule(f.target, gd, GradedMatrix(f.target, gd, cd, cols));
}

GradedModule frobenius_pullback(const GradedModule& m) {
  const RingPtr& R = m.ring();
  if (R->field.p != 2)
    throw std::invalid_argument("frobenius pullback requires characteristic 2");
  RingMap frob{R, R, {}, 2};
  for (int i = 0; i < R->nvars(); ++i)
    frob.images.push_back(R->variable(i) * R->variable(i));
  return pullback_module(frob, m);
}

// ---- minors -----------------------------------------------------------------

namespace {

Polynomial det_rec(const GradedMatrix& a, const std::vector<size_t>& rows,
                   unsigned colmask, const std::vector<size_t>& cols, size_t r,
                   std::map<std::pair<size_t, unsigned>, Polynomial>& memo) {
  const RingPtr& R = a.ring();
  if (r == rows.size()) return R->one();
  auto key = std::make_pair(r, colmask);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Polynomial acc(R);
  for (size_t c = 0; c < cols.size(); ++c) {
    if (!(colmask >> c & 1)) continue;
    Polynomial e = a.entry(rows[r], cols[c]);
    if (e.is_zero()) continue;
    acc = acc + e * det_rec(a, rows, colmask & ~(1u << c), cols, r + 1, memo);
  }
  memo[key] = acc;
  return acc;
}

Polynomial minor_det(const GradedMatrix& a, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols) {
  // char 2 throughout the fixtures; for odd p the sign-free expansion computes
  // the permanent, so reject
  if (a.ring()->field.p != 2 && rows.size() > 1)
    throw std::logic_error("determinants implemented for characteristic 2");
  std::map<std::pair<size_t, unsigned>, Polynomial> memo;
  return det_rec(a, rows, unsigned((1u << cols.size()) - 1), cols, 0, memo);
}

void subsets_rec(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
                 std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Ideal minors_ideal(int k, const GradedMatrix& a) {
  if (k <= 0 || size_t(k) > std::min(a.rows(), a.cols()))
    throw std::invalid_argument("minor size out of range");
  std::vector<std::vector<size_t>> rsets, csets;
  std::vector<size_t> cur;
  subsets_rec(a.rows(), size_t(k), 0, cur, rsets);
  subsets_rec(a.cols(), size_t(k), 0, cur, csets);
  std::vector<Polynomial> gens;
  std::set<std::string> seen;
  for (const auto& rs : rsets)
    for (const auto& cs : csets) {
      Polynomial d = minor_det(a, rs, cs);
      if (d.is_zero()) continue;
      d = d.monic();
      if (seen.insert(d.str()).second) gens.push_back(d);
    }
  return Ideal(a.ring(), gens);
}

Polynomial determinant(const GradedMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<size_t> all(a.rows());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return minor_det(a, all, all);
}

}  // namespace tango
