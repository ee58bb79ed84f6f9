// Homogeneous ideals with a lazily computed reduced Groebner basis, ideal
// quotient, saturation and ring-map kernels.
#pragma once

#include <memory>

#include "tango/gb.hpp"

namespace tango {

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const GBasis& gb() const;

  bool is_zero_ideal() const;
  bool is_unit_ideal() const;
  bool contains(const Polynomial& p) const;
  bool same_ideal_as(const Ideal& other) const;  // reduced GBs coincide

  // dim_k of the degree-d piece of the ideal (inside its ring).
  long long piece_dim(int d) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<GBasis> gb_;
};

// The irrelevant maximal ideal (all variables).
Ideal irrelevant_ideal(const RingPtr& ring);

// (I : J) = { h : hJ ⊆ I }.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

// (I : J^∞); J defaults to the irrelevant ideal.
Ideal saturate(const Ideal& I);
Ideal saturate(const Ideal& I, const Ideal& J);

// Kernel of a ring map via elimination on the graph ideal.
Ideal ring_map_kernel(const RingMap& m);

}  // namespace tango
