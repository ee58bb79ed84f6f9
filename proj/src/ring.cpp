#include "tango/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tango {

std::vector<Mono> monomials_of_degree(int nvars, int degree) {
  std::vector<Mono> out;
  std::vector<int> e(nvars, 0);
  // lexicographic enumeration over exponent vectors, then sort by grevlex
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == nvars - 1) {
      e[i] = rem;
      out.push_back(Mono::from_exponents(e));
      e[i] = 0;
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, rem - v);
    }
    e[i] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(Mono::one());
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [](const Mono& a, const Mono& b) { return a.grevlex(b) > 0; });
  return out;
}

RingPtr GradedRing::polynomial_ring(unsigned p, std::vector<std::string> vars) {
  if (vars.size() > size_t(kMaxVars)) throw std::invalid_argument("too many variables");
  auto r = std::make_shared<GradedRing>();
  r->field = PrimeField{p};
  r->var_names = std::move(vars);
  return r;
}

RingPtr GradedRing::quotient_by(const Polynomial& rel) const {
  if (has_quotient) throw std::invalid_argument("ring already has a relation");
  if (rel.is_zero() || !rel.is_scalar())
    throw std::invalid_argument("quotient relation must be a nonzero scalar polynomial");
  if (!rel.homogeneous_degree())
    throw std::invalid_argument("quotient relation must be homogeneous");
  auto r = std::make_shared<GradedRing>();
  r->field = field;
  r->var_names = var_names;
  r->has_quotient = true;
  Polynomial m = rel.monic();
  r->q_lead = m.lead_term().m;
  r->ambient_ring = shared_from_this();
  for (size_t i = 1; i < m.terms().size(); ++i) {
    r->q_tail.push_back(m.terms()[i]);
    // tail moved to the other side: q = lead + tail => lead -> -tail
    r->q_tail_coeffs.push_back(uint8_t(field.neg(m.coeffs()[i])));
  }
  return r;
}

RingPtr GradedRing::ambient() const {
  if (!has_quotient) return shared_from_this();
  return ambient_ring;
}

Polynomial GradedRing::zero() const { return Polynomial(shared_from_this()); }

Polynomial GradedRing::one() const { return constant(1); }

Polynomial GradedRing::constant(unsigned c) const {
  Polynomial p(shared_from_this());
  if (c % field.p) p.raw_add_term(Mono::one(), c % field.p);
  return p;
}

Polynomial GradedRing::variable(int i) const {
  if (i < 0 || i >= nvars()) throw std::out_of_range("variable index");
  Polynomial p(shared_from_this());
  p.raw_add_term(Mono::variable(i), 1);
  return p;
}

Polynomial GradedRing::monomial(const Mono& m, unsigned c, uint32_t comp) const {
  Polynomial p(shared_from_this());
  if (c % field.p) p.raw_add_term(m, c % field.p, comp);
  return p.reduced();
}

Polynomial GradedRing::quotient_relation() const {
  if (!has_quotient) throw std::logic_error("no quotient relation");
  Polynomial p(ambient());
  p.raw_add_term(q_lead, 1);
  for (size_t i = 0; i < q_tail.size(); ++i)
    p.raw_add_term(q_tail[i].m, field.neg(q_tail_coeffs[i]));
  p.normalize();
  return p;
}

static long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long GradedRing::piece_dim(int d) const {
  if (d < 0) return 0;
  int n = nvars();
  long long full = binom(d + n - 1, n - 1);
  if (!has_quotient) return full;
  return full - binom(d - q_lead.degree() + n - 1, n - 1);
}

std::vector<Mono> GradedRing::piece_basis(int d) const {
  std::vector<Mono> all = monomials_of_degree(nvars(), d);
  if (!has_quotient) return all;
  std::vector<Mono> out;
  out.reserve(all.size());
  for (const Mono& m : all)
    if (!q_lead.divides(m)) out.push_back(m);
  return out;
}

int GradedRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (var_names[i] == name) return i;
  return -1;
}

std::string GradedRing::render(const Mono& m) const {
  if (m == Mono::one()) return "1";
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    int e = m.exponent(i);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += var_names[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool Polynomial::is_scalar() const {
  for (const Term& t : terms_)
    if (t.comp) return false;
  return true;
}

uint32_t Polynomial::max_component() const {
  uint32_t m = 0;
  for (const Term& t : terms_) m = std::max(m, t.comp);
  return m;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_[0].m.degree();
  for (const Term& t : terms_)
    if (t.m.degree() != d) return std::nullopt;
  return d;
}

std::optional<int> Polynomial::homogeneous_degree(const std::vector<int>& twists) const {
  if (terms_.empty()) return std::nullopt;  // zero: any degree; caller decides
  int d = terms_[0].m.degree() + twists.at(terms_[0].comp);
  for (const Term& t : terms_)
    if (t.m.degree() + twists.at(t.comp) != d) return std::nullopt;
  return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_)
    throw std::invalid_argument("operands belong to different rings");
}

void Polynomial::normalize() {
  const PrimeField f = ring_->field;
  std::vector<size_t> idx(terms_.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return term_order(terms_[a], terms_[b]) > 0;
  });
  std::vector<Term> ts;
  std::vector<uint8_t> cs;
  ts.reserve(terms_.size());
  cs.reserve(terms_.size());
  for (size_t i : idx) {
    if (!ts.empty() && ts.back() == terms_[i]) {
      cs.back() = uint8_t(f.add(cs.back(), coeffs_[i]));
    } else {
      ts.push_back(terms_[i]);
      cs.push_back(uint8_t(coeffs_[i] % f.p));
    }
  }
  terms_.clear();
  coeffs_.clear();
  for (size_t i = 0; i < ts.size(); ++i) {
    if (cs[i]) {
      terms_.push_back(ts[i]);
      coeffs_.push_back(cs[i]);
    }
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  const PrimeField f = ring_->field;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  r.coeffs_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i == terms_.size())
      cmp = -1;
    else if (j == o.terms_.size())
      cmp = 1;
    else {
      auto c = term_order(terms_[i], o.terms_[j]);
      cmp = c > 0 ? 1 : (c < 0 ? -1 : 0);
    }
    if (cmp > 0) {
      r.terms_.push_back(terms_[i]);
      r.coeffs_.push_back(coeffs_[i]);
      ++i;
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j]);
      r.coeffs_.push_back(o.coeffs_[j]);
      ++j;
    } else {
      unsigned c = f.add(coeffs_[i], o.coeffs_[j]);
      if (c) {
        r.terms_.push_back(terms_[i]);
        r.coeffs_.push_back(uint8_t(c));
      }
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(ring_->field.neg(1));
}

Polynomial Polynomial::scaled(unsigned c) const {
  const PrimeField f = ring_->field;
  c %= f.p;
  if (!c) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = uint8_t(f.mul(x, c));
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field.inv(coeffs_.front()));
}

Polynomial Polynomial::term_multiple(const Mono& m, unsigned c) const {
  const PrimeField f = ring_->field;
  c %= f.p;
  Polynomial r(ring_);
  if (!c) return r;
  r.terms_.reserve(terms_.size());
  r.coeffs_.reserve(terms_.size());
  for (size_t i = 0; i < terms_.size(); ++i) {
    r.terms_.push_back({terms_[i].m * m, terms_[i].comp});
    r.coeffs_.push_back(uint8_t(f.mul(coeffs_[i], c)));
  }
  // multiplying by a fixed monomial preserves the storage order
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  const Polynomial* scalar = is_scalar() ? this : &o;
  const Polynomial* other = is_scalar() ? &o : this;
  if (!scalar->is_scalar())
    throw std::invalid_argument("product requires a scalar factor");
  Polynomial acc(ring_);
  for (size_t i = 0; i < scalar->terms_.size(); ++i)
    acc = acc + other->term_multiple(scalar->terms_[i].m, scalar->coeffs_[i]);
  return acc.reduced();
}

Polynomial Polynomial::reduced() const {
  if (!ring_->has_quotient) return *this;
  const PrimeField f = ring_->field;
  Polynomial cur = *this;
  // single confluent rewrite lead(q) -> -tail(q); terminates by grevlex descent
  for (;;) {
    ssize_t hit = -1;
    for (size_t i = 0; i < cur.terms_.size(); ++i)
      if (ring_->q_lead.divides(cur.terms_[i].m)) {
        hit = ssize_t(i);
        break;
      }
    if (hit < 0) return cur;
    Mono rest = ring_->q_lead.quotient_into(cur.terms_[hit].m);
    uint32_t comp = cur.terms_[hit].comp;
    unsigned c = cur.coeffs_[hit];
    Polynomial sub(ring_);
    for (size_t k = 0; k < ring_->q_tail.size(); ++k)
      sub.raw_add_term(ring_->q_tail[k].m * rest,
                       f.mul(ring_->q_tail_coeffs[k], c), comp);
    sub.normalize();
    cur.terms_.erase(cur.terms_.begin() + hit);
    cur.coeffs_.erase(cur.coeffs_.begin() + hit);
    cur = cur + sub;
  }
}

Polynomial Polynomial::transfer(const RingPtr& to) const {
  if (to->var_names != ring_->var_names || to->field.p != ring_->field.p)
    throw std::invalid_argument("transfer requires identical variables");
  Polynomial r(to);
  r.terms_ = terms_;
  r.coeffs_ = coeffs_;
  return r.reduced();
}

Polynomial Polynomial::shift_component(uint32_t delta) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.comp += delta;
  return r;
}

Polynomial Polynomial::map_components(const std::vector<uint32_t>& image) const {
  Polynomial r(ring_);
  for (size_t i = 0; i < terms_.size(); ++i)
    r.raw_add_term(terms_[i].m, coeffs_[i], image.at(terms_[i].comp));
  r.normalize();
  return r;
}

Polynomial Polynomial::restrict_components(uint32_t lo, uint32_t hi) const {
  Polynomial r(ring_);
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].comp >= lo && terms_[i].comp < hi)
      r.raw_add_term(terms_[i].m, coeffs_[i], terms_[i].comp - lo);
  r.normalize();
  return r;
}

Polynomial Polynomial::component_part(uint32_t comp) const {
  return restrict_components(comp, comp + 1);
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << "+";
    unsigned c = coeffs_[i];
    bool unit_mono = terms_[i].m == Mono::one();
    if (c != 1 || unit_mono) {
      os << c;
      if (!unit_mono) os << "*";
    }
    if (!unit_mono) os << ring_->render(terms_[i].m);
    if (terms_[i].comp) os << "<" << terms_[i].comp << ">";
  }
  return os.str();
}

// ---- parsing ----------------------------------------------------------------

namespace {

struct PolyParser {
  const GradedRing& ring;
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("polynomial syntax error at offset " +
                             std::to_string(pos) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term_chain();
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc = acc + parse_term_chain();
      else if (eat('-'))
        acc = acc - parse_term_chain();
      else
        return acc;
    }
  }

  Polynomial parse_term_chain() {
    Polynomial acc = parse_power();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc = acc * parse_power();
        continue;
      }
      // implicit product when a factor follows directly (letter/digit/paren)
      if (pos < s.size() &&
          (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '(')) {
        acc = acc * parse_power();
        continue;
      }
      return acc;
    }
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("exponent expected");
      int e = std::stoi(s.substr(start, pos - start));
      Polynomial acc = ring.one();
      for (int i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      Polynomial inner = parse_expr();
      if (!eat(')')) fail("')' expected");
      return inner;
    }
    if (eat('-')) return ring.zero() - parse_power();
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      long long v = std::stoll(s.substr(start, pos - start));
      return ring.constant(ring.field.normalize(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos;
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int idx = ring.var_index(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return ring.variable(idx);
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial GradedRing::parse(const std::string& text) const {
  PolyParser p{*this, text};
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r.reduced();
}

// ---- ring maps --------------------------------------------------------------

Polynomial RingMap::apply(const Polynomial& p) const {
  if (p.ring() != source) throw std::invalid_argument("polynomial not in the source ring");
  if (!p.is_scalar()) throw std::invalid_argument("ring maps apply to scalar polynomials");
  // power table per variable, built on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& tab = powers[v];
    if (tab.empty()) tab.push_back(target->one());
    while (int(tab.size()) <= e) tab.push_back(tab.back() * images[v]);
    return tab[e];
  };
  Polynomial acc = target->zero();
  for (size_t i = 0; i < p.terms().size(); ++i) {
    Polynomial t = target->constant(p.coeffs()[i]);
    for (int v = 0; v < source->nvars(); ++v) {
      int e = p.terms()[i].m.exponent(v);
      if (e) t = t * power(v, e);
    }
    acc = acc + t;
  }
  return acc.reduced();
}

std::pair<bool, std::string> RingMap::validate() const {
  if (int(images.size()) != source->nvars())
    return {false, "expected one image per source variable"};
  if (scale <= 0) return {false, "degree scale must be positive"};
  for (int i = 0; i < source->nvars(); ++i) {
    if (images[i].ring() != target) return {false, "image not in the target ring"};
    auto d = images[i].homogeneous_degree();
    if (!images[i].is_zero() && (!d || *d != scale))
      return {false, "image of " + source->var_names[i] +
                         " is not homogeneous of degree " + std::to_string(scale)};
  }
  if (source->has_quotient) {
    // apply to the ambient representative; transferring into the quotient ring
    // would reduce the relation to zero before the map sees it
    RingMap amb{source->ambient(), target, images, scale};
    if (!amb.apply(source->quotient_relation()).is_zero())
      return {false, "source relation does not map to zero"};
  }
  return {true, ""};
}

// ---- order abstraction -------------------------------------------------------

std::strong_ordering MonomialOrder::compare(const Mono& a, const Mono& b) const {
  switch (kind) {
    case Kind::Grevlex:
      return a.grevlex(b);
    case Kind::Elimination: {
      int da = a.block_degree(elim_block), db = b.block_degree(elim_block);
      if (da != db) return da <=> db;
      return a.grevlex(b);
    }
    default:
      return a.grevlex(b);
  }
}

std::strong_ordering MonomialOrder::compare(const Term& a, const Term& b) const {
  switch (kind) {
    case Kind::ModulePOT: {
      if (a.comp != b.comp) return b.comp <=> a.comp;  // low component on top
      return a.m.grevlex(b.m);
    }
    case Kind::ModuleTOP:
    default: {
      auto c = compare(a.m, b.m);
      if (c != std::strong_ordering::equal) return c;
      return b.comp <=> a.comp;
    }
  }
}

}  // namespace tango
