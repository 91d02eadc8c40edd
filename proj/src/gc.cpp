#include "horotoric/gc.hpp"

#include <sstream>

#include "horotoric/universe.hpp"

namespace horotoric {

DominantWeight::DominantWeight(Group g, std::vector<Rational> l) : group(g), lambda(std::move(l)) {
  if (lambda.empty()) throw std::invalid_argument("weight has no components");
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw std::invalid_argument("weight components must be weakly decreasing");
  if (group == Group::SP && lambda.back() < 0)
    throw std::invalid_argument("SP weights must be nonnegative");
}

DominantWeight DominantWeight::sp_fundamental(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("fundamental weight index out of range");
  std::vector<Rational> l(static_cast<size_t>(n), 0);
  for (int i = 0; i < k; ++i) l[static_cast<size_t>(i)] = 1;
  return sp(std::move(l));
}

bool DominantWeight::is_integral() const {
  for (const auto& c : lambda)
    if (!is_integer(c)) return false;
  return true;
}

bool DominantWeight::is_zero() const {
  for (const auto& c : lambda)
    if (c != 0) return false;
  return true;
}

DominantWeight DominantWeight::operator+(const DominantWeight& o) const {
  if (group != o.group || rank() != o.rank())
    throw std::invalid_argument("weights of different groups cannot be added");
  std::vector<Rational> l(lambda);
  for (size_t i = 0; i < l.size(); ++i) l[i] += o.lambda[i];
  return DominantWeight(group, std::move(l));
}

DominantWeight DominantWeight::operator*(const Rational& c) const {
  if (c < 0) throw std::invalid_argument("negative weight multiple");
  std::vector<Rational> l(lambda);
  for (auto& v : l) v *= c;
  return DominantWeight(group, std::move(l));
}

bool DominantWeight::operator==(const DominantWeight& o) const {
  return group == o.group && lambda == o.lambda;
}

Int weyl_dim(const DominantWeight& w) {
  if (!w.is_integral()) throw std::invalid_argument("weyl_dim requires an integral weight");
  const int n = w.rank();
  Rational dim = 1;
  if (w.group == Group::GL) {
    // Positive roots e_i - e_j, i < j.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        dim *= (w.lambda[static_cast<size_t>(i)] - w.lambda[static_cast<size_t>(j)] + (j - i)) /
               Rational(j - i);
  } else {
    // Positive roots of C_n: e_i - e_j, e_i + e_j (i < j), and 2 e_i.
    std::vector<Rational> l(static_cast<size_t>(n)), rho(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      rho[static_cast<size_t>(i)] = n - i;
      l[static_cast<size_t>(i)] = w.lambda[static_cast<size_t>(i)] + rho[static_cast<size_t>(i)];
    }
    for (int i = 0; i < n; ++i) {
      dim *= l[static_cast<size_t>(i)] / rho[static_cast<size_t>(i)];
      for (int j = i + 1; j < n; ++j) {
        dim *= (l[static_cast<size_t>(i)] - l[static_cast<size_t>(j)]) /
               (rho[static_cast<size_t>(i)] - rho[static_cast<size_t>(j)]);
        dim *= (l[static_cast<size_t>(i)] + l[static_cast<size_t>(j)]) /
               (rho[static_cast<size_t>(i)] + rho[static_cast<size_t>(j)]);
      }
    }
  }
  if (!is_integer(dim) || dim <= 0) throw std::logic_error("dimension formula gave a non-integer");
  return numer(dim);
}

namespace {

// A pattern cell is a linear form over (lambda | pattern variables); the
// trailing constant zeros of SP shapes are the zero form.
struct Cell {
  int lambda_index = -1;   // >= 0: that lambda coordinate
  int pattern_index = -1;  // >= 0: that pattern coordinate
};

std::vector<std::vector<Cell>> shape_rows(Group group, int n, int* pattern_dim_out) {
  std::vector<std::vector<Cell>> rows;
  int next = 0;
  if (group == Group::GL) {
    std::vector<Cell> top(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) top[static_cast<size_t>(i)].lambda_index = i;
    rows.push_back(std::move(top));
    for (int len = n - 1; len >= 1; --len) {
      std::vector<Cell> row(static_cast<size_t>(len));
      for (auto& c : row) c.pattern_index = next++;
      rows.push_back(std::move(row));
    }
  } else {
    // Rows alternate: a padded row (trailing constant 0), then a free row.
    std::vector<Cell> top(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) top[static_cast<size_t>(i)].lambda_index = i;
    rows.push_back(std::move(top));  // lambda_1 .. lambda_n 0
    for (int k = 1; k <= n; ++k) {
      {
        std::vector<Cell> row(static_cast<size_t>(n - k + 1));
        for (auto& c : row) c.pattern_index = next++;
        rows.push_back(std::move(row));
      }
      if (k <= n - 1) {
        std::vector<Cell> row(static_cast<size_t>(n - k + 1));  // n-k variables + trailing 0
        for (int i = 0; i + 1 < static_cast<int>(row.size()); ++i)
          row[static_cast<size_t>(i)].pattern_index = next++;
        rows.push_back(std::move(row));
      }
    }
  }
  if (pattern_dim_out) *pattern_dim_out = next;
  return rows;
}

}  // namespace

GCShape gc_shape(Group group, int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  GCShape shape;
  shape.group = group;
  shape.n = n;
  auto rows = shape_rows(group, n, &shape.pattern_dim);
  const int expected = (group == Group::GL) ? n * (n - 1) / 2 : n * n;
  if (shape.pattern_dim != expected) throw std::logic_error("pattern coordinate count mismatch");

  std::vector<RowVectorXq> lambda_rows, pattern_rows;
  auto emit = [&](const Cell& hi, const Cell& lo) {
    // hi - lo >= 0
    RowVectorXq lrow = RowVectorXq::Zero(n);
    RowVectorXq prow = RowVectorXq::Zero(shape.pattern_dim);
    if (hi.lambda_index >= 0) lrow(hi.lambda_index) += 1;
    if (hi.pattern_index >= 0) prow(hi.pattern_index) += 1;
    if (lo.lambda_index >= 0) lrow(lo.lambda_index) -= 1;
    if (lo.pattern_index >= 0) prow(lo.pattern_index) -= 1;
    lambda_rows.push_back(std::move(lrow));
    pattern_rows.push_back(std::move(prow));
  };
  for (size_t r = 0; r + 1 < rows.size(); ++r) {
    const auto& upper = rows[r];
    const auto& lower = rows[r + 1];
    for (size_t i = 0; i < lower.size(); ++i) {
      emit(upper[i], lower[i]);                                // a >= c
      if (i + 1 < upper.size()) emit(lower[i], upper[i + 1]);  // c >= b
    }
  }
  const int m = static_cast<int>(lambda_rows.size());
  shape.lambda_block.resize(m, n);
  shape.pattern_block.resize(m, shape.pattern_dim);
  for (int i = 0; i < m; ++i) {
    shape.lambda_block.row(i) = lambda_rows[static_cast<size_t>(i)];
    shape.pattern_block.row(i) = pattern_rows[static_cast<size_t>(i)];
  }
  return shape;
}

HPolytope gc_polytope(const DominantWeight& w) {
  GCShape shape = gc_shape(w.group, w.rank());
  VectorXq lam(w.rank());
  for (int i = 0; i < w.rank(); ++i) lam(i) = w.lambda[static_cast<size_t>(i)];
  VectorXq b = -(shape.lambda_block * lam);
  return HPolytope(shape.pattern_block, std::move(b));
}

ChangeOfVariables change_of_vars_matrices(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  auto u = VariableUniverse::make(n, 0);
  const int d = n * n;
  ChangeOfVariables cv;
  cv.n = n;
  cv.a = MatrixXq::Zero(d, d);
  cv.b = MatrixXq::Zero(d, n);
  cv.p_labels.reserve(static_cast<size_t>(d));
  for (const auto& [i, j] : u->x_pairs()) {
    std::ostringstream os;
    os << "x[" << i << "," << j << "]";
    cv.p_labels.push_back(os.str());
  }

  // Rows over [p (d) | lambda (n)], built by block recursion: each block m
  // subtracts one exponent from the previous partial sums and adds one back,
  // consuming every coordinate of the m-th unipotent row exactly once.
  using Form = RowVectorXq;  // length d + n
  std::vector<Form> theta_prev(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Form f = Form::Zero(d + n);
    f(d + i) = 1;
    theta_prev[static_cast<size_t>(i)] = std::move(f);
  }
  std::vector<char> used(static_cast<size_t>(d), 0);
  int row = 0;
  auto take = [&](int i, int j) {
    const int idx = u->x_index(i, j);
    if (used[static_cast<size_t>(idx)])
      throw std::logic_error("coordinate consumed twice in change of variables");
    used[static_cast<size_t>(idx)] = 1;
    return idx;
  };
  for (int m = 1; m <= n; ++m) {
    std::vector<Form> eta(static_cast<size_t>(n - m + 1));
    for (int i = 1; i <= n - m + 1; ++i) {
      Form f = theta_prev[static_cast<size_t>(i - 1)];
      f(take(m, 2 * n - m + 2 - i)) -= 1;
      eta[static_cast<size_t>(i - 1)] = f;
      cv.a.row(row) = f.head(d);
      cv.b.row(row) = f.tail(n);
      {
        std::ostringstream os;
        os << "row" << (2 * m - 1) << "[" << i << "]";
        cv.q_labels.push_back(os.str());
      }
      ++row;
    }
    std::vector<Form> theta(static_cast<size_t>(std::max(0, n - m)));
    for (int i = 1; i <= n - m; ++i) {
      Form f = eta[static_cast<size_t>(i)];
      f(take(m, m + i)) += 1;
      theta[static_cast<size_t>(i - 1)] = f;
      cv.a.row(row) = f.head(d);
      cv.b.row(row) = f.tail(n);
      {
        std::ostringstream os;
        os << "row" << (2 * m) << "[" << i << "]";
        cv.q_labels.push_back(os.str());
      }
      ++row;
    }
    theta_prev = std::move(theta);
  }
  if (row != d) throw std::logic_error("change of variables did not fill all rows");
  for (int i = 0; i < d; ++i)
    if (!used[static_cast<size_t>(i)]) throw std::logic_error("coordinate never consumed");

  Eigen::FullPivLU<MatrixXq> lu(cv.a);
  const Rational det = lu.determinant();
  if (det != 1 && det != -1)
    throw std::logic_error("change of variables is not unimodular, det = " + to_string(det));
  cv.a_inv = lu.inverse();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!is_integer(cv.a_inv(i, j))) throw std::logic_error("inverse is not integral");
  return cv;
}

HPolytope gc_prime_polytope(const DominantWeight& w) {
  if (w.group != Group::SP)
    throw std::invalid_argument("exponent-coordinate polytope is defined for SP weights only");
  const int n = w.rank();
  ChangeOfVariables cv = change_of_vars_matrices(n);
  VectorXq lam(n);
  for (int i = 0; i < n; ++i) lam(i) = w.lambda[static_cast<size_t>(i)];
  const VectorXq shift = -(cv.a_inv * (cv.b * lam));
  return affine_image(gc_polytope(w), cv.a_inv, shift);
}

HPolytope newton_polytope(const std::vector<DominantWeight>& weights, NewtonVariant variant) {
  if (weights.empty()) throw std::invalid_argument("no weights given");
  const int n = weights.front().rank();
  for (const auto& w : weights) {
    if (w.group != Group::SP) throw std::invalid_argument("fibered polytopes require SP weights");
    if (w.rank() != n) throw std::invalid_argument("weights of mixed ranks");
  }
  GCShape shape = gc_shape(Group::SP, n);
  const int joint = n + shape.pattern_dim;
  HPolytope out(joint);
  for (int i = 0; i < shape.lambda_block.rows(); ++i) {
    RowVectorXq row = RowVectorXq::Zero(joint);
    row.head(n) = shape.lambda_block.row(i);
    row.tail(shape.pattern_dim) = shape.pattern_block.row(i);
    out.add_inequality(row, Rational(0));
  }
  std::vector<VectorXq> pts;
  pts.reserve(weights.size());
  for (const auto& w : weights) {
    VectorXq v(n);
    for (int i = 0; i < n; ++i) v(i) = w.lambda[static_cast<size_t>(i)];
    pts.push_back(std::move(v));
  }
  HPolytope hull = hull_of_points(pts, n);
  for (int i = 0; i < hull.row_count(); ++i) {
    RowVectorXq row = RowVectorXq::Zero(joint);
    row.head(n) = hull.lhs().row(i);
    out.add_inequality(row, hull.rhs()(i));
  }
  if (variant == NewtonVariant::Prime) return newton_transform(out, n);
  return out;
}

namespace {

MatrixXq block_transform(int n, bool inverse) {
  ChangeOfVariables cv = change_of_vars_matrices(n);
  const int d = n * n;
  MatrixXq m = MatrixXq::Zero(n + d, n + d);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  if (!inverse) {
    m.block(n, 0, d, n) = -(cv.a_inv * cv.b);
    m.block(n, n, d, d) = cv.a_inv;
  } else {
    m.block(n, 0, d, n) = cv.b;
    m.block(n, n, d, d) = cv.a;
  }
  return m;
}

}  // namespace

HPolytope newton_transform(const HPolytope& d, int n) {
  if (d.dim() != n + n * n) throw std::invalid_argument("polytope has wrong joint dimension");
  return affine_image(d, block_transform(n, false), VectorXq::Zero(d.dim()));
}

HPolytope newton_transform_inverse(const HPolytope& d, int n) {
  if (d.dim() != n + n * n) throw std::invalid_argument("polytope has wrong joint dimension");
  return affine_image(d, block_transform(n, true), VectorXq::Zero(d.dim()));
}

}  // namespace horotoric
