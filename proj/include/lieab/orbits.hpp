#pragma once

#include <string>
#include <vector>

#include "lieab/affine.hpp"

namespace lieab {

struct PropertyCheck {
  bool ok = true;
  std::string property;  // "A1", "A2", "A3" or "adding-roots"
  std::vector<RootVector> witness;
  explicit operator bool() const { return ok; }
};

PropertyCheck check_A1A2A3(const AbelianSubalgebra& a);
// alpha, beta orthogonal in Psi, gamma in Phi_0, alpha + gamma in Psi => beta + gamma not in Psi
PropertyCheck check_adding_roots(const AbelianSubalgebra& a);

// throws PropertiesViolated when (A1)-(A3) fail
AbelianSubalgebra make_subalgebra(std::shared_ptr<const GradedRoots> gr, const RootSet& psi);

// (alpha, beta) = 0; asserts agreement with alpha - beta not in Phi_0 and,
// for m = 2, with strong orthogonality of the lifts. NotInPsi, NotDistinct.
bool is_orthogonal_pair(const AbelianSubalgebra& a, const RootVector& alpha, const RootVector& beta);
bool is_orthogonal_set(const GradedRoots& gr, const RootSet& s);

// Psi_S = {beta in Phi_1 : beta - alpha in Phi_0^+ for some alpha in S}
RootSet psi_S(const GradedRoots& gr, const RootSet& s);
// minimal elements for <=_0
RootSet minimal_elements(const GradedRoots& gr, const RootSet& s);
bool is_antichain(const GradedRoots& gr, const RootSet& s);

struct OrbitRecord {
  RootSet rep;
  RootSet psiS;
  int dim = 0;
  bool open = false;
};

// one record per orthogonal subset of Psi, the empty set first
std::vector<OrbitRecord> enumerate_orbits(const AbelianSubalgebra& a);
std::vector<RootSet> orthogonal_subsets(const GradedRoots& gr, const RootSet& psi);

RootSet open_orbit_rep(const AbelianSubalgebra& a);
// orbit of x with the given support and generic coefficients
RootSet generic_normal_form(const AbelianSubalgebra& a, const RootSet& support);

}  // namespace lieab
