#pragma once

#include <memory>
#include <utility>

#include "horotoric/types.hpp"

namespace horotoric {

/// Variable set for the ambient Laurent algebra of SP(2n) data:
/// x_{ij} with i < j and i + j <= 2n+1 (one per coordinate of the maximal
/// unipotent subgroup, n^2 in total), torus variables y_1..y_r, and the
/// grading variable t. The index set is fixed at construction.
///
/// Storage layout of exponent vectors: x-block in row-major pair order
/// (x_{1,2}, x_{1,3}, ..., x_{1,2n}, x_{2,3}, ...), then y_1..y_r, then t.
class VariableUniverse {
 public:
  static std::shared_ptr<const VariableUniverse> make(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int x_count() const { return static_cast<int>(x_pairs_.size()); }
  int var_count() const { return x_count() + r_ + 1; }
  int t_index() const { return x_count() + r_; }

  /// y_k for k = 1..r.
  int y_index(int k) const;
  /// x_{ij}; throws if (i, j) is not a legal coordinate.
  int x_index(int i, int j) const;
  bool has_x(int i, int j) const;
  const std::vector<std::pair<int, int>>& x_pairs() const { return x_pairs_; }

  std::string var_name(int index) const;

  bool operator==(const VariableUniverse& o) const { return n_ == o.n_ && r_ == o.r_; }
  bool operator!=(const VariableUniverse& o) const { return !(*this == o); }

 private:
  VariableUniverse(int n, int r);
  int n_;
  int r_;
  std::vector<std::pair<int, int>> x_pairs_;        // row-major
  std::vector<std::vector<int>> x_index_by_pair_;   // [i][j] -> index or -1
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

/// Checks that two values live over matching universes (same n, r).
void require_same_universe(const VariableUniverse& a, const VariableUniverse& b);

/// An exponent vector over a universe. x- and t-exponents must be
/// nonnegative; y-exponents may be negative (Laurent directions).
class ExponentVector {
 public:
  ExponentVector(UniversePtr u, std::vector<std::int64_t> exps);
  static ExponentVector zero(UniversePtr u);
  static ExponentVector unit(UniversePtr u, int var_index, std::int64_t e = 1);

  const UniversePtr& universe() const { return u_; }
  std::int64_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  int size() const { return static_cast<int>(e_.size()); }
  const std::vector<std::int64_t>& raw() const { return e_; }

  ExponentVector operator+(const ExponentVector& o) const;
  bool operator==(const ExponentVector& o) const;
  bool operator!=(const ExponentVector& o) const { return !(*this == o); }
  bool is_zero() const;

  std::int64_t t_exponent() const { return e_[static_cast<size_t>(u_->t_index())]; }
  /// The x-block as a lattice point in Z^{n^2}.
  LatticePoint x_part() const;
  /// The whole vector as a lattice point (x-block, y-block, t).
  LatticePoint full() const { return e_; }

 private:
  UniversePtr u_;
  std::vector<std::int64_t> e_;
};

/// Total order on exponent vectors, compatible with addition. Realized as a
/// signed lexicographic comparison along a fixed priority schedule:
///   1. t, larger exponent wins;
///   2. y_r, ..., y_1, larger exponent wins;
///   3. x_{1,2n}, x_{1,2n-1}, ..., x_{1,2}, x_{2,2n-1}, ..., x_{2,3}, ...,
///      x_{n,n+1}, where the *smaller* exponent wins.
/// Restricted to x-monomials with nonnegative exponents, the constant
/// monomial is the unique maximum.
class TermOrder {
 public:
  static TermOrder standard(UniversePtr u);

  const UniversePtr& universe() const { return u_; }

  /// -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const ExponentVector& a, const ExponentVector& b) const;
  /// Raw comparison on full-layout integer vectors (no sign constraints).
  int compare_raw(const LatticePoint& a, const LatticePoint& b) const;

  bool less(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }
  bool greater(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) > 0; }

  struct Slot {
    int var;
    bool larger_wins;
  };
  const std::vector<Slot>& schedule() const { return schedule_; }

 private:
  UniversePtr u_;
  std::vector<Slot> schedule_;
};

/// Map comparator placing the order-largest exponent first.
struct DescendingExponents {
  std::shared_ptr<const TermOrder> order;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return order->compare(a, b) > 0;
  }
};

}  // namespace horotoric
