#pragma once

#include <map>

#include "horotoric/universe.hpp"

namespace horotoric {

/// Exact multivariate Laurent polynomial: a finite map from exponent vectors
/// to nonzero rational coefficients. Terms are stored sorted descending by
/// the universe's standard order, so iteration, printing, and serialized
/// output are reproducible byte for byte.
class LaurentPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, DescendingExponents>;

  explicit LaurentPolynomial(UniversePtr u);
  static LaurentPolynomial monomial(UniversePtr u, const ExponentVector& e, const Rational& c);
  static LaurentPolynomial constant(UniversePtr u, const Rational& c);
  static LaurentPolynomial variable(UniversePtr u, int var_index);

  const UniversePtr& universe() const { return u_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  Rational coefficient(const ExponentVector& e) const;
  void add_term(const ExponentVector& e, const Rational& c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const Rational& c) const;
  bool operator==(const LaurentPolynomial& o) const;
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  /// Re-express over a universe with the same n (x-block is copied; the y
  /// and t exponents of this polynomial must vanish outside the target).
  LaurentPolynomial extended_to(UniversePtr target) const;

 private:
  UniversePtr u_;
  std::shared_ptr<const TermOrder> storage_order_;
  TermMap terms_;
};

/// Three-way comparison of exponent vectors under a term order.
int compare(const ExponentVector& a, const ExponentVector& b, const TermOrder& o);

/// Leading coefficient and exponent of a nonzero polynomial.
std::pair<Rational, ExponentVector> initial_term(const LaurentPolynomial& f, const TermOrder& o);

/// Reduced row echelon form of the rational span of `fs` with respect to the
/// monomial basis ordered by `o`: the result is a basis with pairwise
/// distinct leading exponents, each element monic, every leading exponent
/// eliminated from all other elements, sorted descending by leading
/// exponent. The output is a canonical form of the subspace.
std::vector<LaurentPolynomial> row_echelon(const std::vector<LaurentPolynomial>& fs,
                                           const TermOrder& o);

/// Remainder of f after full linear reduction against an echelon basis
/// (every monomial matching a leading exponent is eliminated). The remainder
/// is zero iff f lies in the span.
LaurentPolynomial reduce_against(const LaurentPolynomial& f,
                                 const std::vector<LaurentPolynomial>& echelon_basis,
                                 const TermOrder& o);

/// Text form: terms sorted descending by the standard order, each printed as
/// `coef * x[i,j]^e * y[k]^e * t^e` with exact `p/q` coefficients, joined by
/// " + ". The zero polynomial prints as "0".
std::string to_string(const LaurentPolynomial& f);
std::string to_string(const ExponentVector& e);

/// Parses the text form produced by to_string (also accepts "-" separators
/// and omitted unit coefficients).
LaurentPolynomial parse_polynomial(UniversePtr u, const std::string& text);

}  // namespace horotoric
