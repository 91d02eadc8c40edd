#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace horotoric {

// Exact scalars: GMP-backed rationals and integers. No floating point anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVectorXq = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

// Integer tuples (lattice points, exponent data) live outside Eigen.
using LatticePoint = std::vector<std::int64_t>;
using LatticePointSet = std::vector<LatticePoint>;  // kept sorted and duplicate-free

inline Int numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

// Floor/ceil division for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b > a) --q;
  return q;
}
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b < a) ++q;
  return q;
}

inline Int rational_floor(const Rational& q) { return floor_div(numer(q), denom(q)); }
inline Int rational_ceil(const Rational& q) { return ceil_div(numer(q), denom(q)); }

inline std::int64_t to_int64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  return static_cast<std::int64_t>(v);
}

inline std::string to_string(const Rational& q) { return q.str(); }

Rational rational_from_string(const std::string& s);

inline bool exact_equal(const MatrixXq& a, const MatrixXq& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline void sort_unique(LatticePointSet& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace horotoric
