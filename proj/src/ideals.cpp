#include "tango/ideals.hpp"

#include <algorithm>

namespace tango {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.ring() != ring_) throw std::invalid_argument("generator in wrong ring");
    if (!g.is_scalar()) throw std::invalid_argument("ideal generators must be scalars");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GBasis& Ideal::gb() const {
  if (!gb_) gb_ = std::make_shared<GBasis>(groebner(ring_, 1, gens_));
  return *gb_;
}

bool Ideal::is_zero_ideal() const { return gb().basis.empty(); }

bool Ideal::is_unit_ideal() const {
  const auto& b = gb().basis;
  return b.size() == 1 && b[0].degree() == 0;
}

bool Ideal::contains(const Polynomial& p) const { return in_module(gb(), p); }

bool Ideal::same_ideal_as(const Ideal& other) const {
  if (ring_ != other.ring_) return false;
  return gb().basis == other.gb().basis;
}

long long Ideal::piece_dim(int d) const {
  // standard monomials of the quotient, complementary count
  long long free_dim = ring_->piece_dim(d);
  long long std_monos = 0;
  for (const Mono& m : ring_->piece_basis(d)) {
    bool reducible = false;
    for (const Polynomial& g : gb().basis)
      if (g.lead_term().m.divides(m)) {
        reducible = true;
        break;
      }
    if (!reducible) ++std_monos;
  }
  return free_dim - std_monos;
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return Ideal(ring, std::move(vars));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw std::invalid_argument("mixed rings");
  const RingPtr& R = I.ring();
  std::vector<Polynomial> js;
  for (const auto& g : J.gens())
    if (!g.is_zero()) js.push_back(g);
  if (js.empty()) throw std::invalid_argument("quotient by the zero ideal");
  // Rank k = #gens(J). Column v0 = (j_1,...,j_k); columns f*e_c for f in I.
  // Syzygy coefficients on v0 are exactly { h : h*j ⊆ I }.
  uint32_t k = uint32_t(js.size());
  std::vector<Polynomial> cols;
  Polynomial v0(R);
  for (uint32_t c = 0; c < k; ++c) v0 = v0 + js[c].shift_component(c);
  cols.push_back(v0);
  for (const auto& f : I.gens())
    for (uint32_t c = 0; c < k; ++c) cols.push_back(f.shift_component(c));
  GBOptions opts;
  opts.track = true;
  GBasis gb = groebner(R, k, cols, opts);
  std::vector<Polynomial> out;
  for (const auto& s : gb.syzygies) {
    Polynomial h = s.component_part(0);  // coefficient on v0
    if (!h.is_zero()) out.push_back(h.monic());
  }
  return Ideal(R, std::move(out));
}

Ideal saturate(const Ideal& I) { return saturate(I, irrelevant_ideal(I.ring())); }

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (int iter = 0; iter < 200; ++iter) {
    if (cur.is_unit_ideal()) return cur;
    Ideal next = ideal_quotient(cur, J);
    if (next.gb().basis == cur.gb().basis) return cur;
    cur = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize within the iteration cap");
}

Ideal ring_map_kernel(const RingMap& m) {
  // Relaxed validation: elimination works for any substitution map, including
  // ones whose images have different degrees (e.g. t^2, t^3); only the source
  // relation must map to zero.
  if (int(m.images.size()) != m.source->nvars())
    throw std::invalid_argument("invalid ring map: one image per variable required");
  for (const auto& im : m.images)
    if (im.ring() != m.target)
      throw std::invalid_argument("invalid ring map: image not in target ring");
  if (m.source->has_quotient) {
    RingMap amb{m.source->ambient(), m.target, m.images, m.scale};
    if (!amb.apply(m.source->quotient_relation()).is_zero())
      throw std::invalid_argument("invalid ring map: relation not mapped to zero");
  }
  const RingPtr& S = m.source;
  const RingPtr& T = m.target;
  if (S->field.p != T->field.p) throw std::invalid_argument("characteristic mismatch");
  int nt = T->nvars(), ns = S->nvars();
  if (nt + ns > kMaxVars)
    throw std::invalid_argument("too many variables for kernel elimination");
  std::vector<std::string> names;
  for (const auto& n : T->var_names) names.push_back(n + "~");
  for (const auto& n : S->var_names) names.push_back(n);
  RingPtr C = GradedRing::polynomial_ring(S->field.p, names);

  auto lift_target = [&](const Polynomial& p) {
    Polynomial r(C);
    for (size_t i = 0; i < p.terms().size(); ++i) {
      Mono mm;
      for (int v = 0; v < nt; ++v) mm.set(v, p.terms()[i].m.exponent(v));
      r.raw_add_term(mm, p.coeffs()[i]);
    }
    r.normalize();
    return r;
  };

  std::vector<Polynomial> gens;
  for (int i = 0; i < ns; ++i) {
    Polynomial xi(C);
    Mono mm;
    mm.set(nt + i, 1);
    xi.raw_add_term(mm, 1);
    xi.normalize();
    gens.push_back(xi - lift_target(m.images[i].transfer(T->ambient())));
  }
  if (T->has_quotient)
    gens.push_back(lift_target(T->quotient_relation()));

  GBOptions opts;
  opts.elim_block = nt;
  GBasis gb = groebner(C, 1, gens, opts);

  std::vector<Polynomial> kernel;
  for (const auto& g : gb.basis) {
    bool pure = true;
    for (const auto& t : g.terms())
      if (t.m.block_degree(nt) > 0) {
        pure = false;
        break;
      }
    if (!pure) continue;
    Polynomial back(S);
    for (size_t i = 0; i < g.terms().size(); ++i) {
      Mono mm;
      for (int v = 0; v < ns; ++v) mm.set(v, g.terms()[i].m.exponent(nt + v));
      back.raw_add_term(mm, g.coeffs()[i]);
    }
    back.normalize();
    back = back.reduced();
    if (!back.is_zero()) kernel.push_back(back);
  }
  return Ideal(S, std::move(kernel));
}

}  // namespace tango
