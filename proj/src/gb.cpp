#include "tango/gb.hpp"

#include <algorithm>
#include <set>

namespace tango {

namespace {

// Engine term order: elimination block degree (optional), grevlex, then lower
// component first. Tags live out of band, so this only ever orders F-parts.
struct TermCmp {
  int elim_block = 0;
  std::strong_ordering cmp(const Term& a, const Term& b) const {
    if (elim_block) {
      int da = a.m.block_degree(elim_block), db = b.m.block_degree(elim_block);
      if (da != db) return da <=> db;
    }
    auto c = a.m.grevlex(b.m);
    if (c != std::strong_ordering::equal) return c;
    return b.comp <=> a.comp;
  }
  bool greater(const Term& a, const Term& b) const { return cmp(a, b) > 0; }
};

// Term list sorted descending, consumed from the front via a head index.
struct EElem {
  std::vector<Term> t;
  std::vector<uint8_t> c;
  size_t head = 0;

  bool empty() const { return head == t.size(); }
  size_t size() const { return t.size() - head; }
  const Term& front_term() const { return t[head]; }
  unsigned front_coeff() const { return c[head]; }
  void pop_front() { ++head; }
  void push(const Term& term, unsigned coeff) {
    t.push_back(term);
    c.push_back(uint8_t(coeff));
  }
};

EElem merge(const EElem& a, const EElem& b, const TermCmp& ord, const PrimeField& f) {
  EElem r;
  r.t.reserve(a.size() + b.size());
  r.c.reserve(a.size() + b.size());
  size_t i = a.head, j = b.head;
  while (i < a.t.size() || j < b.t.size()) {
    int side;
    if (i == a.t.size())
      side = 1;
    else if (j == b.t.size())
      side = 0;
    else {
      auto c = ord.cmp(a.t[i], b.t[j]);
      side = c > 0 ? 0 : (c < 0 ? 1 : 2);
    }
    if (side == 0) {
      r.push(a.t[i], a.c[i]);
      ++i;
    } else if (side == 1) {
      r.push(b.t[j], b.c[j]);
      ++j;
    } else {
      unsigned cc = f.add(a.c[i], b.c[j]);
      if (cc) r.push(a.t[i], cc);
      ++i;
      ++j;
    }
  }
  return r;
}

EElem term_multiple(const EElem& e, const Mono& m, unsigned c, const PrimeField& f,
                    size_t skip_front = 0) {
  EElem r;
  r.t.reserve(e.size());
  r.c.reserve(e.size());
  for (size_t i = e.head + skip_front; i < e.t.size(); ++i) {
    unsigned cc = f.mul(e.c[i], c);
    if (!cc) continue;
    r.push({e.t[i].m * m, e.t[i].comp}, cc);
  }
  return r;
}

// Geobucket accumulator: bucket k holds a sorted element of at most 4^(k+1)
// terms; additions go to the matching size class and carry upward.
struct Geobucket {
  const TermCmp* ord;
  const PrimeField* f;
  std::vector<EElem> buckets;

  static size_t size_class(size_t n) {
    size_t k = 0, cap = 4;
    while (n > cap) {
      cap *= 4;
      ++k;
    }
    return k;
  }

  void add(EElem e) {
    if (e.empty()) return;
    size_t k = size_class(e.size());
    for (;;) {
      if (buckets.size() <= k) buckets.resize(k + 1);
      if (buckets[k].empty()) {
        buckets[k] = std::move(e);
        return;
      }
      e = merge(buckets[k], e, *ord, *f);
      buckets[k] = EElem{};
      if (e.empty()) return;
      k = std::max(k + 1, size_class(e.size()));
    }
  }

  // Current lead term with combined coefficient; consumes cancelled heads.
  std::optional<std::pair<Term, unsigned>> lead() {
    for (;;) {
      int best = -1;
      for (size_t k = 0; k < buckets.size(); ++k) {
        if (buckets[k].empty()) continue;
        if (best < 0 ||
            ord->greater(buckets[k].front_term(), buckets[best].front_term()))
          best = int(k);
      }
      if (best < 0) return std::nullopt;
      Term lt = buckets[best].front_term();
      unsigned c = 0;
      for (auto& b : buckets)
        while (!b.empty() && b.front_term() == lt) {
          c = f->add(c, b.front_coeff());
          b.pop_front();
        }
      if (c) return std::make_pair(lt, c);
    }
  }

  EElem drain() {
    EElem acc;
    for (auto& b : buckets) acc = merge(acc, b, *ord, *f);
    buckets.clear();
    return acc;
  }
};

struct WorkElem {
  EElem f;    // F-part (components < rank)
  EElem tag;  // component j <-> input j
  int sugar = 0;
};

struct Engine {
  RingPtr out_ring;  // caller's ring (may be a quotient)
  RingPtr ring;      // ambient polynomial ring used internally
  PrimeField field;
  TermCmp ord;
  uint32_t rank = 1;
  bool track = false;
  bool has_q = false;
  Mono q_lead;
  EElem q_elem;

  std::vector<WorkElem> basis;
  std::vector<char> alive;
  std::vector<EElem> syz;
  bool truncated = false;

  struct Pair {
    int sugar;
    Mono lcm;
    int i, j;  // j == -1: pair with the ring relation on i's lead component
  };
  struct PairCmp {
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      auto c = a.lcm.grevlex(b.lcm);
      if (c != std::strong_ordering::equal) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<Pair, PairCmp> pairs;
  std::set<std::pair<int, int>> done_pairs;

  EElem to_eelem(const Polynomial& p) const {
    std::vector<size_t> idx(p.terms().size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return ord.cmp(p.terms()[a], p.terms()[b]) > 0;
    });
    EElem r;
    r.t.reserve(idx.size());
    r.c.reserve(idx.size());
    for (size_t i : idx) r.push(p.terms()[i], p.coeffs()[i]);
    return r;
  }

  Polynomial to_poly(const EElem& e, const RingPtr& r) const {
    Polynomial p(r);
    for (size_t i = e.head; i < e.t.size(); ++i)
      p.raw_add_term(e.t[i].m, e.c[i], e.t[i].comp);
    p.normalize();
    return p.reduced();
  }

  static int elem_sugar(const EElem& e) {
    int d = 0;
    for (size_t i = e.head; i < e.t.size(); ++i)
      d = std::max(d, e.t[i].m.degree());
    return d;
  }

  // Full reduction of (f, tag) by the live basis and the ring relation.
  WorkElem reduce(EElem f0, EElem tag0, int sugar) {
    Geobucket gb{&ord, &field};
    Geobucket gt{&ord, &field};
    gb.add(std::move(f0));
    gt.add(std::move(tag0));
    EElem rem;
    for (;;) {
      auto l = gb.lead();
      if (!l) break;
      auto [lt, lc] = *l;
      if (has_q && q_lead.divides(lt.m)) {
        Mono u = q_lead.quotient_into(lt.m);
        // q has lead coeff 1; its lead-term contribution was already popped
        EElem sub = term_multiple(q_elem, u, field.neg(lc), field, /*skip_front=*/1);
        // fix component: q_elem is scalar (comp 0), the rewritten term keeps lt.comp
        for (auto& term : sub.t) term.comp = lt.comp;
        gb.add(std::move(sub));
        continue;
      }
      int hit = -1;
      for (size_t k = 0; k < basis.size(); ++k) {
        if (!alive[k]) continue;
        const Term& bl = basis[k].f.front_term();
        if (bl.comp == lt.comp && bl.m.divides(lt.m)) {
          hit = int(k);
          break;
        }
      }
      if (hit < 0) {
        rem.push(lt, lc);
        continue;
      }
      const WorkElem& red = basis[hit];
      Mono u = red.f.front_term().m.quotient_into(lt.m);
      unsigned nc = field.neg(field.mul(lc, field.inv(red.f.front_coeff())));
      gb.add(term_multiple(red.f, u, nc, field, /*skip_front=*/1));
      if (track) gt.add(term_multiple(red.tag, u, nc, field));
      sugar = std::max(sugar, u.degree() + red.sugar);
    }
    WorkElem w;
    w.f = std::move(rem);
    w.tag = gt.drain();
    w.sugar = sugar;
    return w;
  }

  // scalar EElem (comp 0) times a module EElem
  EElem multiply_scalar(const EElem& scalar, const EElem& vec) {
    Geobucket g{&ord, &field};
    for (size_t i = scalar.head; i < scalar.t.size(); ++i)
      g.add(term_multiple(vec, scalar.t[i].m, scalar.c[i], field));
    return g.drain();
  }

  void make_pairs(int t) {
    const Term& lt = basis[t].f.front_term();
    for (int i = 0; i < t; ++i) {
      const Term& li = basis[i].f.front_term();
      if (li.comp != lt.comp) continue;
      if (rank == 1 && li.m.coprime(lt.m)) {
        // product criterion; the skipped syzygy is the Koszul one
        if (track) {
          EElem a = multiply_scalar(basis[t].f, basis[i].tag);
          EElem b = multiply_scalar(basis[i].f, basis[t].tag);
          EElem tau =
              merge(a, term_multiple(b, Mono::one(), field.neg(1), field), ord, field);
          if (!tau.empty()) syz.push_back(std::move(tau));
        }
        done_pairs.insert({i, t});
        continue;
      }
      Mono l = li.m.lcm(lt.m);
      int sug = std::max(basis[i].sugar + l.degree() - li.m.degree(),
                         basis[t].sugar + l.degree() - lt.m.degree());
      pairs.insert({sug, l, i, t});
    }
    if (has_q) {
      Mono l = lt.m.lcm(q_lead);
      pairs.insert({basis[t].sugar + l.degree() - lt.m.degree(), l, t, -1});
    }
  }

  bool chain_covered(const Pair& p) const {
    if (p.j < 0) return false;
    uint32_t comp = basis[p.i].f.front_term().comp;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (int(k) == p.i || int(k) == p.j) continue;
      const Term& lk = basis[k].f.front_term();
      if (lk.comp != comp || !lk.m.divides(p.lcm)) continue;
      auto key = [&](int a, int b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done_pairs.count(key(p.i, int(k))) && done_pairs.count(key(p.j, int(k))))
        return true;
    }
    return false;
  }

  void insert_element(WorkElem w) {
    if (w.f.empty()) {
      if (track && !w.tag.empty()) syz.push_back(std::move(w.tag));
      return;
    }
    unsigned inv = field.inv(w.f.front_coeff());
    if (inv != 1) {
      for (size_t i = w.f.head; i < w.f.t.size(); ++i)
        w.f.c[i] = uint8_t(field.mul(w.f.c[i], inv));
      for (size_t i = w.tag.head; i < w.tag.t.size(); ++i)
        w.tag.c[i] = uint8_t(field.mul(w.tag.c[i], inv));
    }
    basis.push_back(std::move(w));
    alive.push_back(1);
    make_pairs(int(basis.size()) - 1);
  }

  void run(const std::vector<Polynomial>& inputs, const GBOptions& opts) {
    std::vector<EElem> es(inputs.size());
    for (size_t i = 0; i < inputs.size(); ++i) es[i] = to_eelem(inputs[i]);
    std::vector<int> order_idx;
    for (size_t i = 0; i < inputs.size(); ++i) order_idx.push_back(int(i));
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
      if (es[a].empty() || es[b].empty()) return !es[a].empty() && es[b].empty();
      return ord.cmp(es[a].front_term(), es[b].front_term()) < 0;
    });
    for (int i : order_idx) {
      if (es[i].empty()) {
        // a zero input contributes its own basis vector as a syzygy
        if (track) {
          EElem tau;
          tau.push({Mono::one(), uint32_t(i)}, 1);
          syz.push_back(std::move(tau));
        }
        continue;
      }
      EElem tag;
      if (track) tag.push({Mono::one(), uint32_t(i)}, 1);
      int sugar = elem_sugar(es[i]);
      insert_element(reduce(std::move(es[i]), std::move(tag), sugar));
    }
    while (!pairs.empty()) {
      Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      if (p.sugar > opts.degree_cap) {
        truncated = true;
        break;
      }
      if (p.j >= 0) {
        if (chain_covered(p)) {
          done_pairs.insert({p.i, p.j});
          continue;
        }
        done_pairs.insert({p.i, p.j});
        const WorkElem& a = basis[p.i];
        const WorkElem& b = basis[p.j];
        Mono ua = a.f.front_term().m.quotient_into(p.lcm);
        Mono ub = b.f.front_term().m.quotient_into(p.lcm);
        EElem f = merge(term_multiple(a.f, ua, 1, field),
                        term_multiple(b.f, ub, field.neg(1), field), ord, field);
        EElem tag;
        if (track)
          tag = merge(term_multiple(a.tag, ua, 1, field),
                      term_multiple(b.tag, ub, field.neg(1), field), ord, field);
        insert_element(reduce(std::move(f), std::move(tag), p.sugar));
      } else {
        // S-pair with q on this component: reduce (lcm/lm) * g; the q-divisible
        // lead rewrites first, which realizes the S-polynomial exactly.
        const WorkElem& a = basis[p.i];
        Mono ua = a.f.front_term().m.quotient_into(p.lcm);
        EElem f = term_multiple(a.f, ua, 1, field);
        EElem tag;
        if (track) tag = term_multiple(a.tag, ua, 1, field);
        insert_element(reduce(std::move(f), std::move(tag), p.sugar));
      }
    }
  }

  GBasis finish(std::vector<Polynomial> inputs) {
    std::vector<int> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        const Term &li = basis[i].f.front_term(), &lj = basis[j].f.front_term();
        if (li.comp == lj.comp && lj.m.divides(li.m) && (!(lj.m == li.m) || j < i))
          redundant = true;
      }
      if (!redundant) keep.push_back(int(i));
    }
    std::fill(alive.begin(), alive.end(), 0);
    for (int i : keep) alive[i] = 1;
    std::vector<WorkElem> reduced_basis;
    for (int i : keep) {
      alive[i] = 0;  // tail-reduce against the others only
      WorkElem w = reduce(basis[i].f, basis[i].tag, basis[i].sugar);
      alive[i] = 1;
      if (!w.f.empty()) reduced_basis.push_back(std::move(w));
    }
    std::sort(reduced_basis.begin(), reduced_basis.end(),
              [&](const WorkElem& a, const WorkElem& b) {
                return ord.cmp(a.f.front_term(), b.f.front_term()) < 0;
              });
    GBasis out;
    out.ring = out_ring;
    out.rank = rank;
    out.elim_block = ord.elim_block;
    out.gens = std::move(inputs);
    out.truncated = truncated;
    for (auto& w : reduced_basis) {
      Polynomial f = to_poly(w.f, out_ring);
      if (f.is_zero()) continue;  // pure multiple of the ring relation
      out.basis.push_back(f.monic());
      if (track) out.tags.push_back(to_poly(w.tag, out_ring));
    }
    if (track) {
      std::set<std::string> seen;
      for (auto& s : syz) {
        Polynomial p = to_poly(s, out_ring);
        if (p.is_zero()) continue;
        p = p.monic();
        if (seen.insert(p.str()).second) out.syzygies.push_back(std::move(p));
      }
    }
    return out;
  }
};

}  // namespace

GBasis groebner(const RingPtr& ring, uint32_t rank, std::vector<Polynomial> gens,
                const GBOptions& opts) {
  Engine e;
  e.out_ring = ring;
  e.ring = ring->ambient();
  e.field = ring->field;
  e.ord.elim_block = opts.elim_block;
  e.rank = rank;
  e.track = opts.track;
  if (ring->has_quotient) {
    e.has_q = true;
    e.q_lead = ring->q_lead;
    e.q_elem = e.to_eelem(ring->quotient_relation());
  }
  std::vector<Polynomial> ambient_gens;
  ambient_gens.reserve(gens.size());
  for (const Polynomial& g : gens) {
    if (g.ring() != ring) throw std::invalid_argument("generator in wrong ring");
    if (!g.is_zero() && g.max_component() >= rank)
      throw std::invalid_argument("generator component exceeds rank");
    ambient_gens.push_back(g.transfer(e.ring));
  }
  e.run(ambient_gens, opts);
  return e.finish(std::move(gens));
}

namespace {

Polynomial reduce_public(const GBasis& gb, const Polynomial& p, Polynomial* lift,
                         bool* member) {
  if (p.ring() != gb.ring) throw std::invalid_argument("element in wrong ring");
  Engine e;
  e.out_ring = gb.ring;
  e.ring = gb.ring->ambient();
  e.field = gb.ring->field;
  e.rank = gb.rank;
  e.ord.elim_block = gb.elim_block;
  e.track = lift != nullptr && !gb.tags.empty();
  if (gb.ring->has_quotient) {
    e.has_q = true;
    e.q_lead = gb.ring->q_lead;
    e.q_elem = e.to_eelem(gb.ring->quotient_relation());
  }
  for (size_t i = 0; i < gb.basis.size(); ++i) {
    WorkElem w;
    w.f = e.to_eelem(gb.basis[i].transfer(e.ring));
    if (e.track) w.tag = e.to_eelem(gb.tags[i].transfer(e.ring));
    w.sugar = Engine::elem_sugar(w.f);
    e.basis.push_back(std::move(w));
    e.alive.push_back(1);
  }
  EElem f = e.to_eelem(p.transfer(e.ring));
  int sugar = Engine::elem_sugar(f);
  WorkElem r = e.reduce(std::move(f), EElem{}, sugar);
  if (member) *member = r.f.empty();
  if (lift) {
    // reduce() accumulated -sum(quotients * tag), so negate to express p
    Polynomial acc = e.to_poly(r.tag, gb.ring);
    *lift = gb.ring->zero() - acc;
  }
  return e.to_poly(r.f, gb.ring);
}

}  // namespace

Polynomial normal_form(const GBasis& gb, const Polynomial& p) {
  return reduce_public(gb, p, nullptr, nullptr);
}

bool in_module(const GBasis& gb, const Polynomial& p) {
  bool member = false;
  reduce_public(gb, p, nullptr, &member);
  return member;
}

std::optional<Polynomial> lift_through(const GBasis& gb, const Polynomial& p) {
  if (gb.tags.size() != gb.basis.size())
    throw std::logic_error("lift_through requires a tracked basis");
  Polynomial lift;
  bool member = false;
  reduce_public(gb, p, &lift, &member);
  if (!member) return std::nullopt;
  return lift;
}

}  // namespace tango
