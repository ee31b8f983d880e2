#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieab/iab.hpp"

namespace lieab {

// alpha(h_S) = sum_{gamma in S} <alpha, gamma^vee>, with S a set of level-one
// lifts (weights of Psi) and alpha any real root standing for its weight
int grade(const GradedRoots& gr, const RootSet& s, const RootVector& alpha);

// g0, g1: largest h_S-grade on the weights of g_0 (and 0) and of g_1.
// h, h0, h1: ad-power heights of x_S = sum of root vectors, read off the
// decomposition of g into sl_2 strings (needs an involution).
struct Heights {
  int g0 = 0, g1 = 0;
  int h = 0, h0 = 0, h1 = 0;
  bool operator==(const Heights&) const = default;
};
Heights heights(const GradedRoots& gr, const RootSet& s);
std::pair<int, int> grade_heights(const GradedRoots& gr, const RootSet& s);

// when some weight has grade 4: it is a non-complex weight of g_1 and
// sum_{gamma in S^+(alpha)} <beta, gamma^vee> = 2 <beta, alpha^vee> for every beta
bool height4_identity(const GradedRoots& gr, const RootSet& s);

struct SphericityVerdict {
  RootSet open_rep;
  Heights open_heights;
  int max_h1 = 0;  // over every orthogonal subset of Psi
  bool spherical = true;
  std::optional<RootVector> witness;  // weight of grade >= 4
  std::optional<bool> abar_contained;
};
// abar_inv: precomputed abar(gr), saving its recomputation in sweeps
SphericityVerdict is_spherical_subalgebra(const AbelianSubalgebra& a, bool all_subsets = true,
                                          const RootSet* abar_inv = nullptr);

// Pi_{S,alpha} = S^+(alpha) ∪ {-alpha}: the matrix (<x_j, x_i^vee>) and its class
struct PiS {
  std::vector<RootVector> nodes;
  CartanMatrix matrix;
  DiagramClass cls;
};
PiS pi_S_matrix(const GradedRoots& gr, const std::vector<RootVector>& s, const RootVector& alpha);

// orthogonal subsets of C^1 \ {alpha_p}
std::vector<RootSet> c1_orthogonal_subsets(const GradedRoots& gr);
std::vector<RootSet> c1_max_cardinality(const GradedRoots& gr);
std::vector<RootSet> c1_maximal(const GradedRoots& gr);
// the Psi-side set {-eta bar} of a subset of C^1
RootSet to_psi(const GradedRoots& gr, const RootSet& s);

struct P63Report {
  PiS pi;
  bool affine_listed = false;  // one of the five diagrams
  bool label_identity = false;  // k a_xi = |<alpha, xi^vee>| and k sum a_xi = 4
  bool sum_rule = false;        // sum <alpha_p, eta^vee> eta = k delta + 2 alpha_p
};
P63Report p63_check(const GradedRoots& gr, const RootSet& s);
const std::vector<std::string>& p63_table();

// alpha(h_S) on the simple roots of Pi_0, after checking the closed form
// -2 <alpha, alpha_p^vee> on every weight. NotMaximal unless S is maximal.
std::map<int, int> weighted_dynkin(const GradedRoots& gr, const RootSet& s);

struct SpecialGradingReport {
  std::vector<RootVector> grade3_in_g1, grade4_in_g0, grade4_in_g1;
  std::vector<int> g0_values;  // distinct grades on Phi_0
  bool pi00_orthogonal = false;  // -alpha_p bar orthogonal to Pi_00
};
SpecialGradingReport special_grading_check(const GradedRoots& gr, const RootSet& s);

// a non-spherical element exists: Pi_1 = {alpha_p}, alpha_p long and non-complex
bool nonspherical_exists(const GradedRoots& gr);
// abar ⊆ a; NotApplicable outside the special hypotheses
bool mt_criterion(const GradedRoots& gr, const AbelianSubalgebra& a);
bool abar_contained(const RootSet& abar_inv, const AbelianSubalgebra& a);

}  // namespace lieab
