#pragma once

#include <random>

#include "horotoric/symplectic.hpp"

namespace horotoric {

/// Input description of a projectively embedded variety whose degree-1 part
/// decomposes as a direct sum of irreducible SP(2n)-modules V_{w_1},...,
/// V_{w_s}: the weights, a basis of a rank-r sublattice of the weight
/// lattice containing them, and the vertex list of the moment polytope
/// (inside the real span of the sublattice).
struct HoroVarietySpec {
  int n = 0;
  std::vector<DominantWeight> weights;
  MatrixXq lattice_basis;               // n x r, integer columns, rank r
  std::vector<VectorXq> moment_vertices;  // in weight coordinates (length n)

  // Derived data (filled by make/from_weights):
  std::vector<VectorXq> weight_coords;  // each weight in lattice coordinates (length r, integral)
  std::vector<VectorXq> moment_coords;  // vertices in lattice coordinates (length r, rational)

  int r() const { return static_cast<int>(lattice_basis.cols()); }
  int s() const { return static_cast<int>(weights.size()); }

  /// Helper mode: lattice = span of the weights themselves (they must be
  /// linearly independent) and moment polytope = their convex hull.
  static HoroVarietySpec from_weights(int n, std::vector<DominantWeight> weights);
  /// Full mode with explicit lattice basis and moment vertices.
  static HoroVarietySpec make(int n, std::vector<DominantWeight> weights, MatrixXq lattice_basis,
                              std::vector<VectorXq> moment_vertices);
};

/// dim R_k = sum of weyl_dim(w) over lattice weights w in the k-th dilation
/// of the moment polytope.
Int hilbert_function(const HoroVarietySpec& spec, int k);

/// Convex hull of the moment vertices in lattice coordinates (R^r).
HPolytope moment_hull(const HoroVarietySpec& spec);

/// The fibered polytope of the variety description in exponent coordinates
/// [x | y], ambient R^{n^2 + r}: y ranges over the moment hull, and the
/// x-fiber over y is the exponent-coordinate interlacing polytope of the
/// weight L y. Variant Plain keeps the pattern-coordinate fibers instead.
HPolytope newton_base(const HoroVarietySpec& spec, NewtonVariant variant);

/// The graded image of the coordinate ring inside the Laurent algebra
/// C[x, y^{+-1}, t]: one generator t * y^{w_i} * f per echelon basis element
/// f of each degree-1 module, plus the cone over the fibered polytope as the
/// reference object for verification.
struct EmbeddedAlgebra {
  HoroVarietySpec spec;
  UniversePtr universe;  // (n, r)
  std::shared_ptr<const TermOrder> order;
  std::vector<LaurentPolynomial> generators;
  std::vector<int> generator_weight;  // index into spec.weights
  HPolytope cone_base;                // newton_base(spec, Prime)
  int check_level = 0;

  EmbeddedAlgebra() : cone_base(0) {}
  ConeOverPolytope cone() const { return ConeOverPolytope(cone_base); }
};

/// Builds the embedded algebra and verifies, for every degree k up to
/// check_level, that the span of degree-k generator products has dimension
/// hilbert_function(spec, k); a mismatch is a hard error.
EmbeddedAlgebra psi_embed(const HoroVarietySpec& spec, int check_level = 2);

enum class SubductionStatus { ZeroRemainder, Stuck, BudgetExhausted };
enum class SubductionChoice { LowestLex, Random };

struct SubductionStep {
  std::vector<std::int64_t> powers;  // exponents d_i over the generators
  Rational coeff;
  LaurentPolynomial remainder;  // after the step
};

struct SubductionTrace {
  SubductionStatus status = SubductionStatus::ZeroRemainder;
  std::vector<SubductionStep> steps;
  LaurentPolynomial remainder;
  bool strictly_decreasing = true;

  explicit SubductionTrace(UniversePtr u) : remainder(LaurentPolynomial(std::move(u))) {}
};

/// Default step budget: 10 * (term count of f + K * number of generators).
long default_subduction_budget(const LaurentPolynomial& f, const EmbeddedAlgebra& e, int level_bound);

/// The classical rewriting loop: match the leading term of f by a monomial
/// in the generators' leading terms, subtract, repeat. The leading exponent
/// decreases strictly at every step. Choice of the matching exponent vector:
/// lexicographically lowest by default, or seeded-random among all matches.
SubductionTrace subduct(const LaurentPolynomial& f, const EmbeddedAlgebra& e, long max_steps,
                        SubductionChoice choice = SubductionChoice::LowestLex,
                        std::uint64_t seed = 0);

/// Leading exponents of the echelon span of all degree-k generator
/// products, as full-layout lattice points in Z^{n^2 + r + 1}.
LatticePointSet initial_algebra_level(const EmbeddedAlgebra& e, int k);

struct SagbiLevelReport {
  int k = 0;
  Int dim;            // echelon dimension of degree-k products
  Int lattice_count;  // cone slice count
  bool match = false;
};

struct SubductionTrialReport {
  std::uint64_t seed = 0;
  int steps = 0;
  bool remainder_zero = false;
  bool strictly_decreasing = false;
};

struct SagbiReport {
  int level_bound = 0;
  std::vector<SagbiLevelReport> levels;
  bool generation_certified = false;
  std::vector<SubductionTrialReport> trials;

  bool levels_match() const;
  bool trials_passed() const;
  bool all_passed() const { return levels_match() && generation_certified && trials_passed(); }
};

/// Three verdicts, all reported rather than thrown:
///  (a) per level k <= K, leading exponents of degree-k products equal the
///      cone slice over the fibered polytope;
///  (b) every cone lattice point at level <= K is a nonnegative integer
///      combination of the generators' leading exponents;
///  (c) seeded random elements of degree <= K subduct to remainder zero.
SagbiReport verify_sagbi(const EmbeddedAlgebra& e, int level_bound, int trials,
                         std::uint64_t seed, SubductionChoice choice = SubductionChoice::LowestLex);

/// Number of semigroup points at the same level that precede p in the term
/// order: the per-level termination witness for subduction (a homogeneous
/// remainder chain cannot be longer). Errors if p is not a level-<=K point
/// of the semigroup.
Int finiteness_check(const EmbeddedAlgebra& e, const ExponentVector& p, int level_bound);

struct Binomial {
  std::vector<std::int64_t> plus, minus;  // exponents over the generator list
};

struct HilbertSlice {
  int k = 0;
  Int slice_count;
  Int hilbert;
  bool match = false;
};

struct ToricDegenerationData {
  LatticePointSet generators;  // semigroup generators up to the certified level
  std::vector<Binomial> binomials;
  int certified_level = 0;
  std::vector<HilbertSlice> hilbert_certificate;
};

/// Degeneration data: semigroup generators of the cone up to level K,
/// binomial relations among them up to the given total degree, and the
/// dimension-preservation certificate (level-k slice sizes against the
/// Hilbert function). Requires a passed verification report.
ToricDegenerationData degenerate(const EmbeddedAlgebra& e, int level_bound, int deg_bound,
                                 const SagbiReport& report);
/// Convenience overload: runs verify_sagbi internally with a fixed seed.
ToricDegenerationData degenerate(const EmbeddedAlgebra& e, int level_bound, int deg_bound);

/// Integer weight vector realizing the term order on the finite exponent set
/// of all degree-<=K generator products (plus the given extra exponents):
/// e1 > e2 in the order implies <w, e1> < <w, e2>. Built from per-variable
/// spreads along the order schedule and verified pairwise on the set.
std::vector<std::int64_t> order_weight_vector(const EmbeddedAlgebra& e, int level_bound,
                                              const std::vector<ExponentVector>& extra);

/// One-parameter family member: substitutes each variable v by tau^{w(v)} v
/// and rescales so the leading coefficient is unchanged. At tau = 1 this is
/// f; at tau = 0 it is the leading term of f; in between, every non-leading
/// monomial carries a strictly positive power of tau.
LaurentPolynomial flat_family_member(const LaurentPolynomial& f, const EmbeddedAlgebra& e,
                                     const Rational& tau, int level_bound);

/// Seeded random element of the degree-<=K part of the embedded algebra
/// (a rational combination of generator products).
LaurentPolynomial random_ring_element(const EmbeddedAlgebra& e, int level_bound,
                                      std::mt19937_64& rng);

}  // namespace horotoric
