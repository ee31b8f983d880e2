#pragma once

#include <map>
#include <memory>
#include <vector>

#include "lieab/affine.hpp"

namespace lieab {

// square integer matrix, row-major
struct Mat {
  int n = 0;
  std::vector<long long> a;

  explicit Mat(int size = 0) : n(size), a(size_t(size) * size, 0) {}
  long long& operator()(int i, int j) { return a[size_t(i) * n + j]; }
  long long operator()(int i, int j) const { return a[size_t(i) * n + j]; }
  bool is_zero() const;
  bool operator==(const Mat&) const = default;
};
Mat operator+(const Mat& x, const Mat& y);
Mat operator*(long long t, const Mat& x);
Mat bracket(const Mat& x, const Mat& y);

// Inner involution of sl_n, so_n or sp_2n realized by matrices. Root vectors
// are matched with the combinatorial weights through their epsilon
// coordinates; the matrix side computes its own grading from a diagonal
// element, so a wrong dictionary surfaces as DictionaryMismatch.
class MatrixPair {
 public:
  explicit MatrixPair(std::shared_ptr<const GradedRoots> gr);
  static bool supported(const GradingDatum& g);

  const GradedRoots& graded() const { return *gr_; }
  int size() const { return n_; }
  // root vector of the weight of an affine real root of level 0 or 1
  const Mat& root_vector(const RootVector& v) const;
  const std::vector<Mat>& cartan() const { return cartan_; }
  const std::vector<Mat>& g0_basis() const { return g0_; }
  const std::vector<Mat>& g1_basis() const { return g1_; }
  // Cartan plus the root vectors of Phi_0^+
  const std::vector<Mat>& borel() const { return borel_; }
  // the algebra is closed under brackets and brackets respect the grading
  bool closure_check() const;

  Mat x_of(const RootSet& s) const;  // sum of root vectors of the weights in s

 private:
  std::shared_ptr<const GradedRoots> gr_;
  char series_;
  int rank_, n_;
  std::vector<std::vector<int>> weight_;  // epsilon weight of each basis vector
  std::map<std::vector<int>, Mat> roots_;
  std::map<std::vector<int>, int> grade_;
  std::vector<Mat> cartan_, g0_, g1_, borel_;

  std::vector<int> eps(const RootVector& v) const;
};

struct AdHeights {
  int h = 0, h0 = 0, h1 = 0;
  bool operator==(const AdHeights&) const = default;
};
// max n with ad(x_S)^n nonzero on g, g_0, g_1
AdHeights ad_power_height(const MatrixPair& p, const RootSet& s);
// dim [b_0, x_S]
int bracket_dim(const MatrixPair& p, const RootSet& s);
// exact rank of integer vectors
int exact_rank(const std::vector<std::vector<long long>>& rows);

}  // namespace lieab
