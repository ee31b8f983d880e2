#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lieab/rootsys.hpp"

namespace lieab {

// X_N^(k) built from the type of g and the twist. Node 0 is Kac's alpha_0;
// for k = 1 the remaining nodes carry the Bourbaki numbering of g.
class AffineRootSystem {
 public:
  AffineRootSystem(const FiniteType& g, int k);
  // untwisted extension of an arbitrary irreducible finite diagram; node i + 1
  // is node i of `finite`
  explicit AffineRootSystem(const CartanMatrix& finite);

  const FiniteType& g_type() const { return g_; }
  int twist() const { return k_; }
  const std::string& name() const { return name_; }  // Kac table name, e.g. "D3^(2)" for (A3, 2)
  const CartanMatrix& cartan() const { return a_; }
  int nodes() const { return a_.rank(); }
  const std::vector<int>& labels() const { return labels_; }
  const RootVector& delta() const { return delta_; }
  // rank of g
  int finite_rank() const { return g_.n; }

  long long form(const RootVector& u, const RootVector& v) const { return a_.form(u, v); }
  bool is_long_simple(int i) const;

 private:
  FiniteType g_;
  int k_;
  std::string name_;
  CartanMatrix a_;
  std::vector<int> labels_;
  RootVector delta_;
};

// throws IllegalTwist
std::shared_ptr<const AffineRootSystem> build_affine(const FiniteType& g, int k);

// Real roots alpha + j delta with |j| <= L, i.e. |[beta : alpha_0]| <= L a_0.
std::vector<RootVector> real_roots_up_to_level(const AffineRootSystem& sys, int L);

struct GradingDatum {
  std::shared_ptr<const AffineRootSystem> sys;
  std::vector<int> s;
  int m = 1;
  std::vector<int> pi0, pi1;
  bool flip = false;  // g = k + k with the swap, encoded as (X^(1), s = e_0, m = 1)

  int level(const RootVector& v) const;
  std::string spec() const;  // round-trips through parse_grading
  std::string label() const;  // e.g. "D4^(1) s=(0,0,1,0,0)"
};

// throws NotCoprime when gcd(s) != 1, InvalidArgument on malformed s
GradingDatum build_grading(std::shared_ptr<const AffineRootSystem> sys, const std::vector<int>& s);
GradingDatum flip_grading(const FiniteType& k);
// "D4:0,0,1,0,0", "A5^2:1,0,0,0", "flip:A2"
GradingDatum parse_grading(const std::string& spec);

// permutations p with a(p i, p j) = a(i, j)
std::vector<std::vector<int>> diagram_automorphisms(const CartanMatrix& a);

// Kac coordinates of involutions (m = 2) for (g, k), one per conjugacy class
std::vector<GradingDatum> involutions(const FiniteType& g, int k);
// every (g, k) with rank g <= max_rank whose series is in `series` (empty = all)
std::vector<std::pair<FiniteType, int>> twisted_pairs(int max_rank, const std::string& series = "");
std::vector<GradingDatum> all_involutions(int max_rank, const std::string& series = "");

// The roots of a grading inside the window |level| <= L, with the index
// tables used by the combinatorics of abelian subalgebras. Weights of t0 are
// handled through their lifts: a weight of Phi_i is represented by the unique
// real root of level i with that restriction.
class GradedRoots {
 public:
  explicit GradedRoots(GradingDatum g, int level_bound = 3);

  const GradingDatum& grading() const { return g_; }
  const AffineRootSystem& sys() const { return *g_.sys; }
  int level_bound() const { return L_; }
  int nodes() const { return g_.sys->nodes(); }

  int level(const RootVector& v) const { return g_.level(v); }
  // throw LevelBoundTooSmall outside the window
  bool is_real_root(const RootVector& v) const;
  bool is_imaginary_root(const RootVector& v) const;
  bool is_root(const RootVector& v) const { return is_real_root(v) || is_imaginary_root(v); }

  long long form(const RootVector& u, const RootVector& v) const { return g_.sys->form(u, v); }
  // <u, v^vee>, integral for real roots u, v
  int pairing(const RootVector& u, const RootVector& v) const;
  bool is_long(const RootVector& v) const;

  // positive real roots of level <= L, ordered by (level, height, lex)
  const std::vector<RootVector>& positive() const { return pos_; }

  // m * bar(v) written on the simple roots; equal keys <=> equal restriction to t0
  RootVector weight_key(const RootVector& v) const;
  // the real root of the given level restricting like v, if any
  std::optional<RootVector> lift(const RootVector& v, int level) const;

  const std::vector<RootVector>& phi1() const { return phi1_; }
  const std::vector<RootVector>& phi0() const { return phi0_; }
  int size1() const { return int(phi1_.size()); }
  int size0() const { return int(phi0_.size()); }
  int index1(const RootVector& v) const;
  int index0(const RootVector& v) const;
  bool positive0(int a) const { return phi0_[a].positive(); }

  // lift of -weight(phi1[i]) at level one, or -1
  int neg1(int i) const { return neg1_[i]; }
  // j with phi1[j] - phi1[i] a positive level-0 root
  const RootSet& up(int i) const { return up_[i]; }
  // j with phi1[i] <=_0 phi1[j] (reflexive)
  const RootSet& leq(int i) const { return leq_[i]; }
  // j != i with (phi1[i], phi1[j]) = 0
  const RootSet& orth(int i) const { return orth_[i]; }
  // j with phi1[i] - phi1[j] a level-0 root
  const RootSet& diff0(int i) const { return diff0_[i]; }
  // j with phi1[i] + phi1[j] a real root (a weight of g_2)
  const RootSet& sum2(int i) const { return sum2_[i]; }
  // weight of phi1[i] also a weight of g_0
  bool complex1(int i) const { return complex1_[i]; }

  int pair11(int a, int g) const { return p11_[a * phi1_.size() + g]; }
  int pair01(int a, int g) const { return p01_[a * phi1_.size() + g]; }

  // dimension of the zero weight space of g_i
  int zero_mult(int i) const;

  RootSet all1() const;
  std::vector<RootVector> roots_of(const RootSet& s) const;
  RootSet set_of(const std::vector<RootVector>& v) const;  // NotInPsi on non level-one input

 private:
  GradingDatum g_;
  int L_;
  std::vector<RootVector> pos_, phi1_, phi0_;
  std::unordered_map<RootVector, int, RootVectorHash> real_, idx1_, idx0_;
  std::vector<int> neg1_;
  std::vector<RootSet> up_, leq_, orth_, diff0_, sum2_;
  std::vector<bool> complex1_;
  std::vector<int8_t> p11_, p01_;
};

// B0-stable abelian subalgebra of g_1, given by its weights. A weight of g_1
// is stored as the level-one real root restricting to it.
struct AbelianSubalgebra {
  std::shared_ptr<const GradedRoots> gr;
  RootSet psi;
  std::optional<RootSet> source;  // inversion set N(w) when built from w

  int dim() const { return int(psi.count()); }
  std::vector<RootVector> weights() const { return gr->roots_of(psi); }
};

// a root set is biconvex: closed, with closed complement in the positive roots
bool is_biconvex(const GradedRoots& gr, const std::vector<RootVector>& a);

}  // namespace lieab
