#pragma once

#include "horotoric/gc.hpp"
#include "horotoric/laurent.hpp"

namespace horotoric {

/// The antidiagonal symplectic form on C^{2n}: entries +1 at (i, 2n+1-i) for
/// i <= n and -1 for i > n (1-based). Satisfies J^T = -J and J^2 = -I.
struct SymplecticForm {
  int n = 0;
  MatrixXq j;

  explicit SymplecticForm(int n);
  /// Form value on basis vectors, 1-based indices.
  Rational pairing(int a, int b) const { return j(a - 1, b - 1); }
};

/// Square matrix of polynomials over the unipotent coordinate universe.
struct PolyMatrix {
  int size = 0;
  UniversePtr universe;
  std::vector<LaurentPolynomial> entries;  // row-major

  PolyMatrix(int size, UniversePtr u);
  const LaurentPolynomial& at(int i, int j) const;  // 1-based
  LaurentPolynomial& at(int i, int j);
  PolyMatrix operator*(const PolyMatrix& o) const;
  bool is_identity() const;
};

/// Generic element of the unipotent upper-triangular subgroup of SP(2n):
/// unit diagonal, free variables x_{ij} at the n^2 legal positions, and the
/// remaining above-diagonal entries solved from u^T J u = J. The identity
/// u^T J u = J is verified symbolically at construction.
struct SymbolicUnipotentMatrix {
  int n = 0;
  PolyMatrix m;

  explicit SymbolicUnipotentMatrix(int n);
};

SymbolicUnipotentMatrix generic_unipotent(int n);

/// Exact inverse of a unipotent upper-triangular polynomial matrix; verifies
/// u * u^{-1} = I.
PolyMatrix symbolic_inverse(const SymbolicUnipotentMatrix& u);

/// An irreducible module realized as a space of polynomial functions on the
/// unipotent subgroup: an echelon basis (canonical form) whose element with
/// leading exponent zero is the constant 1 (the normalized highest vector).
struct RepSpace {
  DominantWeight weight;
  UniversePtr universe;  // (n, 0)
  std::vector<LaurentPolynomial> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// The k-th fundamental module of SP(2n): the kernel of contraction with the
/// symplectic form inside the k-th exterior power, realized via k x k minors
/// of the inverse generic unipotent matrix with row set {1..k}.
RepSpace fundamental_rep(int n, int k);

RepSpace trivial_rep(int n);

/// Function-space product: the echelon span of all pairwise basis products.
/// Its dimension must equal weyl_dim(sum of weights); a mismatch is a hard
/// error (it falsifies the construction).
RepSpace cartan_product(const RepSpace& s, const RepSpace& t);

/// The module of an arbitrary integral dominant SP weight, as an iterated
/// product of fundamental modules.
RepSpace rep_space(const DominantWeight& w);

/// Leading exponents of the echelon basis (all achievable leading exponents
/// of the subspace), as x-block lattice points in Z^{n^2}.
LatticePointSet initial_exponent_set(const RepSpace& s, const TermOrder& o);

}  // namespace horotoric
