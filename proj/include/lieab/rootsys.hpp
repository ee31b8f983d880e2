#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lieab/core.hpp"

namespace lieab {

// Generalized Cartan matrix with entries a_ij = <alpha_j, alpha_i^vee>.
// The invariant form is fixed per connected component so that the longest
// simple roots have squared length 2; it is stored as an integer Gram matrix
// gram = scale * (alpha_i, alpha_j).
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(std::vector<std::vector<int>> a);

  int rank() const { return n_; }
  int operator()(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<int>>& entries() const { return a_; }

  long long gram(int i, int j) const { return g_[i][j]; }
  long long scale() const { return scale_; }
  // scaled squared length of alpha_i
  long long norm(int i) const { return g_[i][i]; }

  long long form(const RootVector& u, const RootVector& v) const;
  Rational norm2(const RootVector& u) const { return Rational(form(u, u), scale_); }

  std::vector<std::vector<int>> components() const;
  bool indecomposable() const { return components().size() == 1; }
  CartanMatrix sub(const std::vector<int>& nodes) const;

  bool operator==(const CartanMatrix& o) const { return a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> a_;
  std::vector<std::vector<long long>> g_;
  long long scale_ = 1;
};

struct FiniteType {
  char series = 'A';
  int n = 1;
  std::string name() const { return std::string(1, series) + std::to_string(n); }
  bool operator==(const FiniteType&) const = default;
};

// parses "A3", "E6", "G2"; throws InvalidArgument
FiniteType parse_finite_type(const std::string& s);
bool is_valid_finite_type(const FiniteType& t);

// Bourbaki numbering, nodes 0..n-1 standing for alpha_1..alpha_n
CartanMatrix cartan_matrix(const FiniteType& t);

// GCM of a diagram given by integral squared lengths and an edge list:
// (alpha_i, alpha_j) = -max(len_i, len_j) / 2 on edges
CartanMatrix cartan_from_lengths(const std::vector<int>& len,
                                 const std::vector<std::pair<int, int>>& edges);

// Positive real roots beta with sum_i weight_i * beta_i <= bound, found by
// root strings. When delta is given (affine case) imaginary roots j*delta are
// recognised and used in the strings; they are reported in *imaginary.
std::vector<RootVector> positive_real_roots(const CartanMatrix& a, const std::vector<int>& weight,
                                            long long bound, const RootVector* delta = nullptr,
                                            std::vector<RootVector>* imaginary = nullptr);

class FiniteRootSystem {
 public:
  FiniteRootSystem() = default;
  explicit FiniteRootSystem(const CartanMatrix& a);

  const CartanMatrix& cartan() const { return a_; }
  int rank() const { return a_.rank(); }
  const std::optional<FiniteType>& type() const { return type_; }

  const std::vector<RootVector>& roots() const { return roots_; }
  const std::vector<RootVector>& positive_roots() const { return pos_; }
  // highest root (irreducible systems only)
  const RootVector& highest_root() const;
  bool simply_laced() const { return simply_laced_; }

  bool contains(const RootVector& v) const { return index_.count(v) > 0; }
  int index_of(const RootVector& v) const;

  long long form(const RootVector& u, const RootVector& v) const { return a_.form(u, v); }
  Rational norm2(const RootVector& u) const { return a_.norm2(u); }
  bool is_long(const RootVector& v) const;
  // <lambda, mu^vee> = 2 (lambda, mu) / (mu, mu)
  Rational pairing(const RootVector& lam, const RootVector& mu) const;
  int pairing_int(const RootVector& lam, const RootVector& mu) const;
  RootVector reflect(const RootVector& gamma, const RootVector& v) const;

 private:
  CartanMatrix a_;
  std::optional<FiniteType> type_;
  std::vector<RootVector> roots_, pos_;
  std::vector<RootVector> highest_;
  std::unordered_map<RootVector, int, RootVectorHash> index_;
  bool simply_laced_ = true;
};

// throws NotFiniteType unless every component of a is of finite type
FiniteRootSystem generate_roots(const CartanMatrix& a);
FiniteRootSystem generate_roots(const FiniteType& t);

// p, q with mu - p lam, ..., mu + q lam the lam-string through mu
std::pair<int, int> root_string(const FiniteRootSystem& sys, const RootVector& mu,
                                const RootVector& lam);

// lam <=_0 mu: mu - lam has nonnegative coordinates supported on the nodes in pi0
bool dominance_leq(const RootVector& lam, const RootVector& mu, const std::vector<bool>& pi0);

// Orthogonal positive roots gamma_1..gamma_m with beta' - beta = sum gamma_i and
// every partial sum beta + gamma_1 + ... + gamma_i a root. Simply-laced only.
std::vector<RootVector> decompose_orthogonal(const FiniteRootSystem& sys, const RootVector& beta,
                                             const RootVector& beta_prime);

struct DiagramClass {
  enum class Kind { Finite, Affine, Indefinite };
  Kind kind = Kind::Indefinite;
  std::string name;               // "A3", "D4^(1)", "A1+A1"; empty when unnamed
  int twist = 0;                  // affine only
  std::vector<int> labels;        // affine only, kernel of A in input node order
  std::vector<int> table_labels;  // affine only, in the numbering of the table entry
  std::vector<int> node_map;      // input node -> table node
  std::vector<DiagramClass> components;  // filled for decomposable input

  std::string kind_name() const;
};

DiagramClass classify_gcm(const CartanMatrix& a);
bool positive_definite(const CartanMatrix& a);

// alpha_0 = delta - theta prepended as node 0
CartanMatrix untwisted_affine_cartan(const CartanMatrix& finite);
// twisted entries of the built-in table by name, e.g. "A5^(2)", "D3^(2)", "D4^(3)"
CartanMatrix twisted_affine_cartan(const std::string& kac_name);

// DOT graph; edge attributes mult and arrow (arrow names the shorter node)
std::string to_dot(const CartanMatrix& a, const std::string& title,
                   const std::vector<int>& labels = {}, int first_index = 1);

}  // namespace lieab
