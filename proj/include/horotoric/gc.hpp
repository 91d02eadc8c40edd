#pragma once

#include "horotoric/polytope.hpp"

namespace horotoric {

enum class Group { GL, SP };

/// Dominant weight of GL(n) or SP(2n): weakly decreasing components,
/// nonnegative for SP. Rational components are admitted (they make sense for
/// polytope construction); dimension formulas require integral weights.
struct DominantWeight {
  Group group = Group::SP;
  std::vector<Rational> lambda;

  DominantWeight() = default;
  DominantWeight(Group g, std::vector<Rational> l);
  static DominantWeight sp(std::vector<Rational> l) { return {Group::SP, std::move(l)}; }
  static DominantWeight gl(std::vector<Rational> l) { return {Group::GL, std::move(l)}; }
  /// k-th fundamental weight of SP(2n): (1,...,1,0,...,0) with k ones.
  static DominantWeight sp_fundamental(int n, int k);

  int rank() const { return static_cast<int>(lambda.size()); }
  bool is_integral() const;
  bool is_zero() const;
  DominantWeight operator+(const DominantWeight& o) const;
  DominantWeight operator*(const Rational& c) const;
  bool operator==(const DominantWeight& o) const;
};

/// Dimension of the irreducible module with highest weight w, by the Weyl
/// product formula over the positive roots of the group. The independent
/// counting oracle used throughout the test suites.
Int weyl_dim(const DominantWeight& w);

/// The triangular interlacing pattern attached to a weight: row sizes, which
/// rows carry a trailing constant zero (SP only), and the joint linear
/// inequality system over (weight coordinates | pattern coordinates).
/// Pattern coordinates are numbered row by row, left to right, skipping the
/// constant zeros.
struct GCShape {
  Group group = Group::SP;
  int n = 0;
  int pattern_dim = 0;
  // Joint system rows: [coefficients on lambda | coefficients on pattern] >= 0.
  MatrixXq lambda_block;   // rows x n
  MatrixXq pattern_block;  // rows x pattern_dim
};

GCShape gc_shape(Group group, int n);

/// Interlacing polytope of the weight, in R^{n^2} (SP) or R^{n(n-1)/2} (GL).
HPolytope gc_polytope(const DominantWeight& w);

/// The integral change of variables between monomial exponents on the
/// unipotent coordinates and interlacing pattern coordinates:
///   (pattern) = A (exponents) + B (weight),
/// with |det A| = 1, so the two coordinate systems are integrally
/// equivalent. Column order of A is the universe's row-major x order; row
/// order matches the pattern coordinate order of gc_shape.
struct ChangeOfVariables {
  int n = 0;
  MatrixXq a;      // n^2 x n^2, entries in {-1, 0, 1}
  MatrixXq a_inv;  // integral by unimodularity
  MatrixXq b;      // n^2 x n, entries in {0, 1}
  std::vector<std::string> p_labels;  // x[i,j] in column order
  std::vector<std::string> q_labels;  // pattern row/position in row order
};

ChangeOfVariables change_of_vars_matrices(int n);

/// A^{-1}(gc_polytope(w) - B w): the exponent-coordinate image of the
/// interlacing polytope. SP weights only.
HPolytope gc_prime_polytope(const DominantWeight& w);

enum class NewtonVariant { Plain, Prime };

/// Polytope in R^{n + n^2} fibered over the convex hull of the given SP
/// weights, with the interlacing polytope of lambda as the fiber over
/// lambda. The Prime variant applies the exponent-coordinate transform
/// (lambda, x) -> (lambda, A^{-1}(x - B lambda)).
HPolytope newton_polytope(const std::vector<DominantWeight>& weights, NewtonVariant variant);

/// (lambda, x) -> (lambda, A^{-1}(x - B lambda)) on a polytope in R^{n + n^2}.
HPolytope newton_transform(const HPolytope& d, int n);
/// The inverse transform (lambda, x) -> (lambda, A x + B lambda).
HPolytope newton_transform_inverse(const HPolytope& d, int n);

}  // namespace horotoric
