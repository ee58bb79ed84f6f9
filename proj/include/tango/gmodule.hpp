// Finitely presented graded modules (cokernel convention): presentations,
// Hilbert data, minimal free resolutions, Hom/Ext, duals, tensor powers,
// minors, pullbacks, finite pushforwards and extensions.
#pragma once

#include <map>

#include "tango/ideals.hpp"
#include "tango/pieces.hpp"
#include "tango/ratpoly.hpp"

namespace tango {

class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(RingPtr ring, std::vector<int> row_deg, std::vector<int> col_deg,
               std::vector<Polynomial> cols);
  static GradedMatrix from_entries(const RingPtr& ring, std::vector<int> row_deg,
                                   std::vector<int> col_deg,
                                   const std::vector<std::vector<Polynomial>>& entries);
  static GradedMatrix zero_map(const RingPtr& ring, std::vector<int> row_deg);

  const RingPtr& ring() const { return ring_; }
  size_t rows() const { return row_deg_.size(); }
  size_t cols() const { return col_deg_.size(); }
  const std::vector<int>& row_degrees() const { return row_deg_; }
  const std::vector<int>& col_degrees() const { return col_deg_; }
  const std::vector<Polynomial>& columns() const { return cols_; }
  const Polynomial& column(size_t j) const { return cols_.at(j); }
  Polynomial entry(size_t i, size_t j) const;

  // (i, j) of the first non-homogeneous entry, if any.
  std::optional<std::pair<size_t, size_t>> homogeneity_defect() const;

  GradedMatrix transpose() const;
  GradedMatrix compose(const GradedMatrix& then) const;  // this ∘ then
  GradedMatrix twist(int d) const;
  bool is_zero() const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<int> row_deg_, col_deg_;
  std::vector<Polynomial> cols_;  // column j lives in ⊕_i R(-row_deg_[i])
};

class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(RingPtr ring, std::vector<int> gen_deg, GradedMatrix relations);
  static GradedModule free_module(const RingPtr& ring, std::vector<int> gen_deg);
  static GradedModule zero_module(const RingPtr& ring);
  static GradedModule cokernel(const GradedMatrix& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& gen_degrees() const { return gen_deg_; }
  const GradedMatrix& relations() const { return rel_; }
  size_t gen_count() const { return gen_deg_.size(); }
  bool is_free_presentation() const { return rel_.cols() == 0; }

  GradedModule twist(int d) const;

 private:
  RingPtr ring_;
  std::vector<int> gen_deg_;
  GradedMatrix rel_;
};

struct BettiTable {
  // (homological step, twist) -> rank
  std::map<std::pair<int, int>, long long> entries;
  bool truncated = false;

  bool operator==(const BettiTable& o) const { return entries == o.entries; }
  std::string str() const;  // grid, steps as columns
};

struct Resolution {
  GradedModule module;               // pruned module the resolution starts from
  std::vector<GradedMatrix> steps;   // steps[0] = minimal presentation, d1
  bool truncated = false;
  BettiTable betti() const;
};

// Graded piece of a presented module, with a quotient basis: ambient basis
// elements at non-pivot columns of the relation row space.
class ModulePiece {
 public:
  ModulePiece() = default;
  ModulePiece(const GradedModule& m, int d);
  size_t dim() const { return free_cols_.size(); }
  int degree() const { return degree_; }
  // quotient coordinates of the class of p (one bit per basis element)
  std::vector<uint64_t> coords(const Polynomial& p) const;
  // ambient monomial representative of the k-th quotient basis element
  Polynomial representative(size_t k) const;

 private:
  RingPtr ring_;
  int degree_ = 0;
  PieceBasis basis_;
  RowSpace rel_{0};
  std::vector<size_t> free_cols_;
};

// -- presentations and invariants ------------------------------------------

GradedModule prune(const GradedModule& m);
long long hilbert_function(const GradedModule& m, int d);          // linear algebra
long long hilbert_function_gb(const GradedModule& m, int d);       // GB counting
RatPoly hilbert_polynomial(const GradedModule& m);                 // via resolution
Resolution free_resolution(const GradedModule& m, int length_cap);

// Syzygies of the columns of a graded matrix (generators, minimalized).
GradedMatrix syzygies(const GradedMatrix& m);

// -- functors ----------------------------------------------------------------

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
GradedModule tensor(const GradedModule& a, const GradedModule& b);
GradedModule sym2(const GradedModule& m);
GradedModule wedge2(const GradedModule& m);
GradedModule dual_sheaf(const GradedModule& m);  // Hom(M, R)
GradedModule hom_module(const GradedModule& m, const GradedModule& n);
GradedModule ext_module(int i, const GradedModule& m, const GradedModule& n);
// Γ_* normalization for modules whose sheaf is locally free: Hom(Hom(M,R),R).
GradedModule saturate_reflexive(const GradedModule& m);

// image of the matrix as a module: generators = columns, relations = syzygies
GradedModule image_module(const GradedMatrix& m);
// kernel of the module map F -> coker(rel) given by the columns of `to_gens`
// composed with ... (see homology helpers below)

// Map of presented modules, given on generators; composition with relations
// must land in the target relations (checked).
struct ModuleMap {
  GradedModule source;
  GradedModule target;
  GradedMatrix matrix;  // rows: target generators, cols: source generators
  std::optional<std::string> well_defined() const;  // nullopt when fine
};

GradedModule kernel_of_map(const ModuleMap& f);
// ker(g)/im(f) for a composable pair with g∘f = 0.
GradedModule homology_of_pair(const ModuleMap& f, const ModuleMap& g);

// -- ring-map functors ---------------------------------------------------------

GradedModule pullback_module(const RingMap& f, const GradedModule& m);
GradedModule frobenius_pullback(const GradedModule& m);
// quotient-ring module seen over the ambient polynomial ring (relation columns
// q·e_i adjoined)
GradedModule restrict_scalars(const GradedModule& m);

Ideal minors_ideal(int k, const GradedMatrix& a);
Polynomial determinant(const GradedMatrix& a);

struct PushforwardResult {
  GradedModule presentation;  // over the source ring of the map
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;
  bool certified = false;  // Hilbert equality held on the whole window
  std::string diagnostic;
};

// Presentation over f's source ring of the pushforward of `m` (a module over
// f's target ring), with the chosen parity class when the map doubles degrees:
// the source-degree-d piece of the result is the target degree s*d + offset
// piece of m. Certified by Hilbert equality for all source degrees <= bound.
PushforwardResult pushforward_presentation(const RingMap& f, const GradedModule& m,
                                           int offset, int degree_bound = 10);

struct ExtensionResult {
  GradedModule middle;
  bool split = false;   // flagged when the class was zero
  int ext_dimension = 0;  // dim of the Ext^1 degree-0 piece used
};

// Middle term of 0 -> M -> W -> N -> 0 for a degree-0 class in Ext^1(N, M).
// cocycle_index selects a basis cocycle; index -1 means "zero class".
ExtensionResult extension_module(const GradedModule& n, const GradedModule& m,
                                 int cocycle_index = 0);

}  // namespace tango
