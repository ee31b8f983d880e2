#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "lieab/orbits.hpp"

namespace lieab {

using OrtSubset = std::vector<RootVector>;

// nodes q (0-based) with [theta : alpha_q] = 1
std::vector<int> hermitian_nodes(const CartanMatrix& finite);
// rank of G/G_0 from the classification table; Bourbaki numbering, q 0-based
int hermitian_table_rank(const FiniteType& t, int q);

// (Pi, alpha_q) with [theta : alpha_q] = 1. Roots are written in the
// coordinates of the given finite diagram.
class HermitianPair {
 public:
  HermitianPair(const CartanMatrix& finite, int q);  // NotHermitian
  HermitianPair(const FiniteType& t, int q) : HermitianPair(cartan_matrix(t), q) {}

  const FiniteRootSystem& roots() const { return sys_; }
  int q() const { return q_; }
  bool simply_laced() const { return sys_.simply_laced(); }
  // Phi_1^+ ordered by (height, lex)
  const std::vector<RootVector>& phi1plus() const { return phi1_; }
  int index(const RootVector& b) const;  // -1 outside Phi_1^+
  bool leq(const RootVector& b, const RootVector& c) const;  // b <=_0 c
  bool orthogonal(const RootVector& b, const RootVector& c) const { return sys_.form(b, c) == 0; }
  bool is_long(const RootVector& b) const { return sys_.is_long(b); }

  // p_u^+ as a B0-stable abelian subalgebra of the grading s_0 = s_q = 1
  const AbelianSubalgebra& nilradical() const { return nil_; }
  RootVector to_affine(const RootVector& b) const;
  RootVector from_affine(const RootVector& v) const;

  // every orthogonal subset of Phi_1^+, the empty set included
  std::vector<OrtSubset> ort_subsets() const;
  // inclusion-maximal orthogonal subsets
  std::vector<OrtSubset> ort_max() const;

  std::pair<int, int> type(const OrtSubset& b) const;  // (#short, #long)
  bool is_orthogonal(const OrtSubset& b) const;
  bool is_antichain(const OrtSubset& b) const;
  OrtSubset up_closure(const OrtSubset& b) const;    // B^{>=0}
  OrtSubset down_closure(const OrtSubset& b) const;  // B^{<=0}
  // a ⊢ b: a ⊆ b^{>=0}
  bool vdash(const OrtSubset& a, const OrtSubset& b) const;
  int dim_generated(const OrtSubset& b) const { return int(up_closure(b).size()); }

 private:
  CartanMatrix a_;
  FiniteRootSystem sys_;
  int q_;
  std::vector<RootVector> phi1_;
  std::vector<RootSet> leq_, orth_;
  AbelianSubalgebra nil_;
  RootSet to_set(const OrtSubset& b) const;
  OrtSubset to_roots(const RootSet& s) const;
};

OrtSubset harish_chandra_cascade(const HermitianPair& p);
// an antichain A with A ⊢ B of the size / type promised by the antichain theorem
OrtSubset antichain_below(const HermitianPair& p, const OrtSubset& b);
bool is_tube_type(const HermitianPair& p);
// antichains of Ort_max contained in B^{>=0} and B^{<=0} for every B in Ort_max
std::vector<OrtSubset> closure_antichains(const HermitianPair& p);
OrtSubset unique_max_antichain(const HermitianPair& p);  // NotTubeType
std::pair<RootVector, RootVector> short_root_decomposition(const HermitianPair& p, const RootVector& beta,
                                                           const OrtSubset& s);

// action of the longest element of W on the simple root alpha_i
RootVector longest_element_image(const FiniteRootSystem& sys, int i);

}  // namespace lieab
