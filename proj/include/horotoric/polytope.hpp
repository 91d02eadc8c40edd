#pragma once

#include <optional>

#include "horotoric/types.hpp"

namespace horotoric {

/// Rational H-polyhedron { z in R^D : A z >= b }, rows kept in insertion
/// order. Equalities are stored as inequality pairs. Degenerate values
/// (empty, lower-dimensional) are legal.
class HPolytope {
 public:
  explicit HPolytope(int dim);
  HPolytope(MatrixXq a, VectorXq b);

  int dim() const { return dim_; }
  int row_count() const { return static_cast<int>(a_.rows()); }
  const MatrixXq& lhs() const { return a_; }
  const VectorXq& rhs() const { return b_; }

  void add_inequality(const RowVectorXq& a, const Rational& b);
  void add_equality(const RowVectorXq& a, const Rational& b);

  bool contains(const VectorXq& z) const;
  bool contains(const LatticePoint& z) const;

  bool operator==(const HPolytope& o) const;

 private:
  int dim_;
  MatrixXq a_;
  VectorXq b_;
};

/// Finite per-coordinate rational bounds, or the discovery that the
/// inequality system is infeasible over the reals.
struct BoundsResult {
  bool feasible = true;
  std::vector<Rational> lo, hi;
};

/// Interval constraint propagation over the inequality system. Throws,
/// naming the first coordinate without derivable bounds, if some coordinate
/// cannot be bounded within the sweep limit.
BoundsResult propagate_bounds(const HPolytope& p);

/// True iff propagation finds a finite box (the boundedness certificate used
/// throughout this library).
bool has_propagatable_bounds(const HPolytope& p);

/// Scales the polytope by k >= 0 (offsets b -> k*b).
HPolytope dilate(const HPolytope& p, const Rational& k);

/// All integer points of a bounded polytope, sorted lexicographically.
LatticePointSet lattice_points(const HPolytope& p);

/// Image { M z + c : z in P } for a unimodular integer matrix M. Such images
/// preserve lattice-point counts at every dilation when c is integral.
HPolytope affine_image(const HPolytope& p, const MatrixXq& m, const VectorXq& c);

/// The cone { (z, k) : k >= 0, z in k*base } over a bounded base polytope.
class ConeOverPolytope {
 public:
  explicit ConeOverPolytope(HPolytope base);
  const HPolytope& base() const { return base_; }

 private:
  HPolytope base_;
};

/// Lattice points of the level-k slice (k*base, k), with the level appended
/// as the final coordinate.
LatticePointSet cone_lattice_points(const ConeOverPolytope& c, int k);

struct SemigroupGenerators {
  LatticePointSet generators;  // levels 1..K, indecomposable into two lower-level points
  bool certified = false;      // every level-k point (k <= K) generated by the set
  int level_bound = 0;
};

/// Generators of the semigroup of cone lattice points, certified up to level
/// K: the points at levels 1..K that are not sums of two lower-level cone
/// points, together with a generation certificate over levels <= K.
SemigroupGenerators semigroup_generators(const ConeOverPolytope& c, int level_bound);

/// Exact vertex enumeration by the double description method on the
/// homogenization cone. Requires a bounded input and dim <= 12.
std::vector<VectorXq> vertices(const HPolytope& p);

/// H-representation of the convex hull of finitely many rational points
/// (affine-hull equalities plus facet inequalities found by running the
/// double description method on the polar).
HPolytope hull_of_points(const std::vector<VectorXq>& points, int dim);

/// Convex hull of pairwise vertex sums, as an H-polytope. Dim <= 12.
HPolytope minkowski_sum(const HPolytope& p, const HPolytope& q);

}  // namespace horotoric
