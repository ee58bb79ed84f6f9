// Graded polynomial rings over GF(p), optionally modulo a single homogeneous
// relation (the quadric, in practice), plus polynomials, free-module elements
// and ring maps. Elements double as vectors of a free module via a component
// index per term; scalars live in component 0.
#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tango/gf.hpp"
#include "tango/mono.hpp"

namespace tango {

class Polynomial;
struct GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

struct Term {
  Mono m;
  uint32_t comp = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

// Canonical storage order: grevlex on the monomial, descending; ties by
// component ascending. a "greater" term sorts first.
inline std::strong_ordering term_order(const Term& a, const Term& b) {
  auto c = a.m.grevlex(b.m);
  if (c != std::strong_ordering::equal) return c;
  return b.comp <=> a.comp;  // smaller component is the bigger term
}

struct GradedRing : std::enable_shared_from_this<GradedRing> {
  PrimeField field;
  std::vector<std::string> var_names;
  // Quotient data: reduced relation split as lead monomial + tail, lead coeff 1.
  bool has_quotient = false;
  Mono q_lead;
  std::vector<Term> q_tail;
  std::vector<uint8_t> q_tail_coeffs;
  RingPtr ambient_ring;  // set on quotient rings

  int nvars() const { return int(var_names.size()); }

  static RingPtr polynomial_ring(unsigned p, std::vector<std::string> vars);
  // Quotient of this ring by a homogeneous nonzero relation.
  RingPtr quotient_by(const Polynomial& rel) const;
  RingPtr ambient() const;  // polynomial ring with same vars/char

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(unsigned c) const;
  Polynomial variable(int i) const;
  Polynomial monomial(const Mono& m, unsigned c = 1, uint32_t comp = 0) const;
  Polynomial quotient_relation() const;  // throws if none

  // dim_k of the degree-d graded piece of the ring itself.
  long long piece_dim(int d) const;
  // Monomial basis of the degree-d piece (normal forms mod the relation),
  // grevlex-descending.
  std::vector<Mono> piece_basis(int d) const;

  Polynomial parse(const std::string& text) const;
  std::string render(const Mono& m) const;

  int var_index(const std::string& name) const;  // -1 if absent
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<uint8_t>& coeffs() const { return coeffs_; }
  const Term& lead_term() const { return terms_.front(); }
  unsigned lead_coeff() const { return coeffs_.front(); }

  bool is_scalar() const;            // all comps zero
  uint32_t max_component() const;    // 0 for scalars

  // Total degree of the lead term's monomial; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }
  // Homogeneous of a single degree (twists all zero)? Returns degree or nullopt.
  std::optional<int> homogeneous_degree() const;
  // With component twists: all terms satisfy m.degree() + twist[comp] == d.
  std::optional<int> homogeneous_degree(const std::vector<int>& twists) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;  // at least one side scalar
  bool operator==(const Polynomial& o) const {
    return terms_ == o.terms_ && coeffs_ == o.coeffs_;
  }

  Polynomial term_multiple(const Mono& m, unsigned c) const;  // no quotient reduction
  Polynomial scaled(unsigned c) const;
  Polynomial monic() const;
  Polynomial shift_component(uint32_t delta) const;
  Polynomial map_components(const std::vector<uint32_t>& image) const;
  // Keep only terms with comp in [lo, hi), renumber to comp - lo.
  Polynomial restrict_components(uint32_t lo, uint32_t hi) const;
  Polynomial component_part(uint32_t comp) const;  // scalar coefficient of e_comp

  // Reduce modulo the ring's quotient relation (no-op on polynomial rings).
  Polynomial reduced() const;
  // Reinterpret over another ring with the same variables/char (quotient <-> ambient).
  Polynomial transfer(const RingPtr& to) const;

  std::string str() const;

  // Builder interface: push terms in arbitrary order, then normalize.
  void raw_add_term(const Mono& m, unsigned c, uint32_t comp = 0) {
    terms_.push_back({m, comp});
    coeffs_.push_back(uint8_t(c));
  }
  void normalize();  // sort, combine, drop zeros (mod p)

 private:
  void check_same_ring(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
  std::vector<uint8_t> coeffs_;
};

struct RingMap {
  RingPtr source;
  RingPtr target;
  std::vector<Polynomial> images;  // one per source variable
  int scale = 1;

  Polynomial apply(const Polynomial& p) const;  // scalar polys
  // true + empty, or false + diagnostic.
  std::pair<bool, std::string> validate() const;
};

// The spec-level order abstraction, used directly by the order-axiom tests and
// internally by the engine.
struct MonomialOrder {
  enum class Kind { Grevlex, Elimination, ModuleTOP, ModulePOT } kind = Kind::Grevlex;
  int elim_block = 0;                // Elimination: first block size
  std::vector<int> column_twists;    // module orders: bookkeeping only

  std::strong_ordering compare(const Mono& a, const Mono& b) const;
  std::strong_ordering compare(const Term& a, const Term& b) const;
};

}  // namespace tango
