#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropmod/graphs.hpp"
#include "tropmod/lattice.hpp"
#include "tropmod/rational.hpp"
#include "tropmod/trees.hpp"

namespace tropmod {

// Dense univariate polynomial in the degeneration parameter t, exact
// rational coefficients, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  static Poly t();
  static Poly from_coeffs(std::vector<Rat> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 when zero
  int ord() const;                                   // lowest nonzero exponent; fails on zero
  Rat coeff(int k) const;
  Rat at_zero() const { return coeff(0); }

  Poly shifted_down(int k) const;  // divide by t^k

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string str() const;

  // Recursive-descent parser: rationals, t, t^k, parentheses, + - *,
  // implicit multiplication as in "2t^3".
  static Poly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rat> c_;
};

// A point of the projective line over Q[t], normalized so that the common
// power of t is cleared; (x, y) is then nonzero at t = 0.
struct ProjectivePoint {
  Poly x, y;
  static ProjectivePoint make(Poly x, Poly y);
};

struct PointFamily {
  int n = 0;
  std::vector<ProjectivePoint> points;  // index 1..n, slot 0 unused

  // One point per line: "p3 = (1+t : 1)". Blank lines and #-comments skipped.
  static PointFamily parse(std::string_view text);
};

struct PlueckerVector {
  int n = 0;
  std::vector<Poly> minors;  // pair-indexed via DistanceVector::pair_index

  const Poly& at(int i, int j) const;  // i < j
};

// All 2x2 minors x_i y_j - x_j y_i; the Pluecker relations are verified.
PlueckerVector pluecker(const PointFamily& f);

enum class Fiber { Special, Generic };

// Whether the family lies in the graph-open locus: coordinates x_1j and the
// edge coordinates nonzero. Special fiber evaluates at t = 0 after clearing
// the overall normalization; Generic only requires not identically zero.
bool gamma_open_check(const PlueckerVector& pv, const StabilityGraph& g,
                      Fiber fiber = Fiber::Special);

// Frame-ordered valuation vector ord(x_ij) - ord(x_23).
IntVec trop_family(const PlueckerVector& pv, const StabilityGraph& g);

// ord of every minor, pair-indexed; fails if any minor vanishes identically.
std::vector<long long> full_valuations(const PlueckerVector& pv);

// The dual metric tree of the t -> 0 limit, recovered from the pairwise
// collision orders by exact split decomposition.
MetricTree limit_dual_tree(const PlueckerVector& pv);

// Forgetful morphism to the four markings {1,a,b,c} with designated
// degeneration {a,b} | {1,c}.
struct CrossRatioUnit {
  int a = 0, b = 0, c = 0;
};

// Valuation of the unit on the divisor D_J: 1 when the image of the generic
// element degenerates with the designated split, 0 when it stays smooth.
// A two-element intersection other than {a,b} is reported as AmbiguousSplit.
int cross_ratio_valuation(const CrossRatioUnit& u, MarkSet J);

// A unit with valuation 1 on D_I and 0 on every other divisor of the stratum,
// or nothing when no such unit exists. The search realizes the constructive
// proof choices deterministically (lexicographically smallest valid triple).
std::optional<CrossRatioUnit> find_separating_unit(const NestedFamily& stratum, MarkSet I,
                                                   const StabilityGraph& g);

// Symbols for the classical cross-ratio generators.
struct PSym {
  enum class Kind { Var, Zero, One, Inf };
  Kind kind = Kind::Zero;
  int var = 0;

  static PSym variable(int i) { return PSym{Kind::Var, i}; }
  static PSym zero() { return PSym{Kind::Zero, 0}; }
  static PSym one() { return PSym{Kind::One, 0}; }
  static PSym inf() { return PSym{Kind::Inf, 0}; }
};

struct CrossRatioFactor {
  std::array<PSym, 4> points;
  int exponent = 1;
};

struct CrossRatioProduct {
  Rat constant = Rat(1);
  std::vector<CrossRatioFactor> factors;
};

struct MonomialFactor {
  enum class Kind { X, XMinusOne, XMinusX };
  Kind kind = Kind::X;
  int i = 0;
  int j = 0;  // only for XMinusX
  int exponent = 1;
};

using Monomial = std::vector<MonomialFactor>;

// Rewrites a monomial in x_i, x_i - 1, x_i - x_j as a scalar times a product
// of cross ratios; re-expansion is exactly the input.
CrossRatioProduct units_monomial_decompose(const Monomial& m);

// Exact evaluation at x_i = values[i] (1-based); nothing on poles or on
// indeterminate 0/0 factors.
std::optional<Rat> evaluate(const CrossRatioProduct& p, const std::vector<Rat>& values);
std::optional<Rat> evaluate(const Monomial& m, const std::vector<Rat>& values);

}  // namespace tropmod
