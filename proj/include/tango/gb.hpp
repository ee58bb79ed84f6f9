// Buchberger engine for submodules of free modules over GF(p)[x]/(q).
//
// One computation yields the reduced Groebner basis, the expression of each
// basis element in the input generators (tags), and generators of the first
// syzygy module of the inputs: inputs are augmented with tag components that
// ride along through every reduction, and zero reductions drop their tags
// into the syzygy list. Over a quotient ring the relation acts as a virtual
// extra column per component; its coefficients are discarded, which is
// exactly restriction of ambient syzygies to the input coordinates.
#pragma once

#include <climits>
#include <optional>

#include "tango/ring.hpp"

namespace tango {

struct GBOptions {
  bool track = false;        // collect tags + syzygies
  int degree_cap = INT_MAX;  // skip S-pairs above this degree (homogeneous use)
  int elim_block = 0;        // >0: eliminate the first elim_block variables
};

struct GBasis {
  RingPtr ring;
  uint32_t rank = 1;
  int elim_block = 0;  // order the basis was computed under
  std::vector<Polynomial> gens;
  std::vector<Polynomial> basis;     // reduced GB, deterministic order
  std::vector<Polynomial> tags;      // basis[i] = sum_j tags[i][j] gens[j] (tracked)
  std::vector<Polynomial> syzygies;  // Syz(gens) generators (tracked)
  bool truncated = false;
};

GBasis groebner(const RingPtr& ring, uint32_t rank, std::vector<Polynomial> gens,
                const GBOptions& opts = {});

// Remainder of p modulo gb (and the ring relation).
Polynomial normal_form(const GBasis& gb, const Polynomial& p);

// Write p as a combination of gb.gens (requires tracked gb); nullopt when p is
// not in the module. The returned element has comp j <-> gens[j].
std::optional<Polynomial> lift_through(const GBasis& gb, const Polynomial& p);

// Membership helper.
bool in_module(const GBasis& gb, const Polynomial& p);

}  // namespace tango
