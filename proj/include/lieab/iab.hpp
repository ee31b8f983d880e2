#pragma once

#include <memory>
#include <vector>

#include "lieab/hermitian.hpp"

namespace lieab {

// sigma-minuscule inversion sets N(w), as subsets of the level-one roots
class IabPoset {
 public:
  IabPoset(std::shared_ptr<const GradedRoots> gr, std::vector<RootSet> elems);

  const std::shared_ptr<const GradedRoots>& graded() const { return gr_; }
  int size() const { return int(elems_.size()); }
  // ordered by (cardinality, set_less); element 0 is the empty set
  const std::vector<RootSet>& elements() const { return elems_; }
  const RootSet& operator[](int i) const { return elems_[i]; }
  int find(const RootSet& inv) const;  // -1 when absent
  bool leq(int i, int j) const { return (elems_[i] & ~elems_[j]).none(); }
  bool maximal(int i) const { return maximal_[i]; }
  std::vector<int> maximal_elements() const;

 private:
  std::shared_ptr<const GradedRoots> gr_;
  std::vector<RootSet> elems_;
  std::vector<bool> maximal_;
};

// breadth-first search in the weak order; NotInvolution unless m = 2
std::vector<RootSet> enumerate_minuscule_serial(const GradedRoots& gr);
std::vector<RootSet> enumerate_minuscule_parallel(const GradedRoots& gr);
// independent enumeration of biconvex subsets of the level-one positive roots
std::vector<RootSet> enumerate_biconvex(const GradedRoots& gr);

IabPoset enumerate_iab(std::shared_ptr<const GradedRoots> gr, bool parallel = true);
IabPoset enumerate_iab(const GradingDatum& g, int level_bound = 3, bool parallel = true);

// N ∪ {c} is again an inversion set inside the level-one roots (N itself being one)
bool extends(const GradedRoots& gr, const RootSet& n, int c);

AbelianSubalgebra theta(std::shared_ptr<const GradedRoots> gr, const RootSet& inv);
RootSet theta_inverse(const AbelianSubalgebra& a);

// Pi_1 = {alpha_p}, alpha_p long and non-complex
struct SpecialCase {
  int p = -1;
  std::vector<std::vector<int>> sigma;  // components of Pi_0, affine node indices
  std::vector<int> alpha_sigma;         // node of each component joined to alpha_p
};
bool special_hypotheses(const GradedRoots& gr);
SpecialCase special_case(const GradedRoots& gr);  // NotApplicable

// {alpha in level one : alpha_p + k delta - alpha a positive root}
RootSet c1_sigma(const GradedRoots& gr);
// {alpha_p} ∪ {gamma + alpha_p : gamma in Phi(Sigma)^+_1}, checked against c1_sigma
RootSet special_wp(const GradedRoots& gr);
// the unique maximal orthogonal antichain of C^1 \ {alpha_p}
RootSet special_antichain(const GradedRoots& gr);
// its down-closure inside C^1: the inversion set of the minimal non-spherical element
RootSet abar(const GradedRoots& gr);

// Phi(Sigma)^+_1 of a component, in affine coordinates
std::vector<RootVector> sigma_phi1(const GradedRoots& gr, const SpecialCase& sc, int component);
HermitianPair sigma_pair(const GradedRoots& gr, const SpecialCase& sc, int component);

}  // namespace lieab
