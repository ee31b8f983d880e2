#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace lieab {

using Rational = boost::rational<long long>;

// enough for affine diagrams of rank <= 12 plus slack for Pi_S matrices
inline constexpr int kMaxNodes = 16;

// subsets of the level-one roots of a window (at most 240 for the flip of E8)
inline constexpr int kMaxSet = 256;
using RootSet = std::bitset<kMaxSet>;

enum class ErrorCode {
  InvalidCartan,
  NotSymmetrizable,
  NotFiniteType,
  NotFiniteOrAffine,
  IsotropicCoroot,
  SameRootLine,
  NotSimplyLaced,
  NotDominated,
  IllegalTwist,
  NotCoprime,
  LevelBoundTooSmall,
  NotInvolution,
  NotApplicable,
  NotInPsi,
  NotDistinct,
  PropertiesViolated,
  NotTubeType,
  NoShortRoots,
  NoDecomposition,
  NotMaximal,
  NotHermitian,
  DictionaryMismatch,
  BoundViolation,
  TheoremViolation,
  InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode c, const std::string& what)
      : std::runtime_error(std::string(error_name(c)) + ": " + what), code_(c) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Coordinates of a root (or any element of the root lattice) on the simple roots.
// Unused trailing coordinates stay zero, so comparison is plain lexicographic.
struct RootVector {
  std::array<int16_t, kMaxNodes> c{};

  RootVector() = default;
  explicit RootVector(const std::vector<int>& v) {
    if (v.size() > static_cast<size_t>(kMaxNodes))
      throw Error(ErrorCode::InvalidArgument, "root vector too long");
    for (size_t i = 0; i < v.size(); ++i) c[i] = static_cast<int16_t>(v[i]);
  }
  static RootVector unit(int i) {
    RootVector r;
    r.c[i] = 1;
    return r;
  }

  int16_t& operator[](int i) { return c[i]; }
  int operator[](int i) const { return c[i]; }

  RootVector& operator+=(const RootVector& o) {
    for (int i = 0; i < kMaxNodes; ++i) c[i] = static_cast<int16_t>(c[i] + o.c[i]);
    return *this;
  }
  RootVector& operator-=(const RootVector& o) {
    for (int i = 0; i < kMaxNodes; ++i) c[i] = static_cast<int16_t>(c[i] - o.c[i]);
    return *this;
  }
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator-(RootVector a) {
    for (auto& x : a.c) x = static_cast<int16_t>(-x);
    return a;
  }
  friend RootVector operator*(int t, RootVector a) {
    for (auto& x : a.c) x = static_cast<int16_t>(t * x);
    return a;
  }

  auto operator<=>(const RootVector&) const = default;

  bool is_zero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
  bool nonneg() const {
    for (auto x : c)
      if (x < 0) return false;
    return true;
  }
  // sign-uniform and nonzero
  bool positive() const { return nonneg() && !is_zero(); }
  bool negative() const { return (-*this).positive(); }
  int height() const {
    int h = 0;
    for (auto x : c) h += x;
    return h;
  }
  std::vector<int> to_vector(int n) const { return std::vector<int>(c.begin(), c.begin() + n); }
  std::string str(int n) const;
};

struct RootVectorHash {
  size_t operator()(const RootVector& v) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (auto x : v.c) {
      h ^= static_cast<uint16_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct RootSetHash {
  size_t operator()(const RootSet& s) const noexcept { return std::hash<RootSet>()(s); }
};

// indices of the set bits, increasing
std::vector<int> members(const RootSet& s);

// canonical order on subsets: by cardinality, then by the sorted index list
bool set_less(const RootSet& a, const RootSet& b);

}  // namespace lieab
