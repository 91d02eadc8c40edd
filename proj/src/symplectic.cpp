#include "horotoric/symplectic.hpp"

#include <algorithm>
#include <functional>

namespace horotoric {

SymplecticForm::SymplecticForm(int n_) : n(n_), j(MatrixXq::Zero(2 * n_, 2 * n_)) {
  if (n_ < 1) throw std::invalid_argument("rank must be >= 1");
  for (int i = 1; i <= 2 * n; ++i) j(i - 1, 2 * n - i) = (i <= n) ? 1 : -1;
}

PolyMatrix::PolyMatrix(int size_, UniversePtr u)
    : size(size_), universe(std::move(u)), entries(static_cast<size_t>(size_) * size_,
                                                   LaurentPolynomial(universe)) {}

const LaurentPolynomial& PolyMatrix::at(int i, int j) const {
  return entries[static_cast<size_t>(i - 1) * size + (j - 1)];
}

LaurentPolynomial& PolyMatrix::at(int i, int j) {
  return entries[static_cast<size_t>(i - 1) * size + (j - 1)];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (size != o.size) throw std::invalid_argument("matrix size mismatch");
  PolyMatrix out(size, universe);
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      LaurentPolynomial acc(universe);
      for (int k = 1; k <= size; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc = acc + at(i, k) * o.at(k, j);
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

bool PolyMatrix::is_identity() const {
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      const auto& e = at(i, j);
      if (i == j) {
        if (!(e == LaurentPolynomial::constant(universe, 1))) return false;
      } else if (!e.is_zero()) {
        return false;
      }
    }
  return true;
}

SymbolicUnipotentMatrix::SymbolicUnipotentMatrix(int n_) : n(n_), m(2 * n_, VariableUniverse::make(n_, 0)) {
  const auto& u = m.universe;
  const int dim = 2 * n;
  auto sigma = [&](int i) { return (i <= n) ? Rational(1) : Rational(-1); };
  for (int i = 1; i <= dim; ++i) m.at(i, i) = LaurentPolynomial::constant(u, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; i + j <= dim + 1; ++j)
      m.at(i, j) = LaurentPolynomial::variable(u, u->x_index(i, j));

  // Entries with i + j > 2n+1 are forced by the bilinear relations
  //   sum_i sigma(i) u_{i,a} u_{2n+1-i,b} = J_{ab}.
  // Solving column by column, bottom row first, every reference is to an
  // already-known entry.
  for (int j = n + 2; j <= dim; ++j) {
    for (int i = j - 1; i >= dim + 2 - j; --i) {
      if (i + j <= dim + 1) break;
      const int a = dim + 1 - i;  // constraint (a, j) pins u_{i,j}
      LaurentPolynomial rest(u);
      for (int ip = 1; ip <= dim; ++ip) {
        if (ip == a) continue;
        const int row2 = dim + 1 - ip;
        if (ip > a || row2 > j) continue;  // zero below the diagonal
        if (m.at(ip, a).is_zero() || m.at(row2, j).is_zero()) continue;
        rest = rest + m.at(ip, a) * m.at(row2, j) * sigma(ip);
      }
      // sigma(a) * u_{i,j} + rest = J_{a,j} = 0 here (a + j > 2n+1)
      m.at(i, j) = -(rest * sigma(a));
    }
  }

  // Verify u^T J u = J as a polynomial identity.
  SymplecticForm form(n);
  for (int a = 1; a <= dim; ++a)
    for (int b = 1; b <= dim; ++b) {
      LaurentPolynomial acc(u);
      for (int ip = 1; ip <= dim; ++ip) {
        const int row2 = dim + 1 - ip;
        if (ip > a || row2 > b) continue;
        if (m.at(ip, a).is_zero() || m.at(row2, b).is_zero()) continue;
        acc = acc + m.at(ip, a) * m.at(row2, b) * sigma(ip);
      }
      if (!(acc == LaurentPolynomial::constant(u, form.pairing(a, b))))
        throw std::logic_error("unipotent matrix does not preserve the form");
    }
}

SymbolicUnipotentMatrix generic_unipotent(int n) { return SymbolicUnipotentMatrix(n); }

PolyMatrix symbolic_inverse(const SymbolicUnipotentMatrix& u) {
  const int dim = 2 * u.n;
  const auto& univ = u.m.universe;
  // u = I + N with N strictly upper: inverse is the alternating geometric sum.
  PolyMatrix nil(dim, univ);
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) nil.at(i, j) = u.m.at(i, j);
  PolyMatrix inv(dim, univ);
  for (int i = 1; i <= dim; ++i) inv.at(i, i) = LaurentPolynomial::constant(univ, 1);
  PolyMatrix power = nil;
  Rational sign = -1;
  for (int k = 1; k < dim; ++k) {
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j)
        if (!power.at(i, j).is_zero()) inv.at(i, j) = inv.at(i, j) + power.at(i, j) * sign;
    power = power * nil;
    sign = -sign;
  }
  if (!(u.m * inv).is_identity()) throw std::logic_error("inverse verification failed");
  return inv;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic k-subsets of {1..n}
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

LaurentPolynomial poly_det(const PolyMatrix& m, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  const auto& u = m.universe;
  const size_t k = rows.size();
  if (k == 0) return LaurentPolynomial::constant(u, 1);
  if (k == 1) return m.at(rows[0], cols[0]);
  LaurentPolynomial acc(u);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  Rational sign = 1;
  for (size_t c = 0; c < k; ++c) {
    if (!m.at(rows[0], cols[c]).is_zero()) {
      std::vector<int> sub_cols;
      for (size_t cc = 0; cc < k; ++cc)
        if (cc != c) sub_cols.push_back(cols[cc]);
      acc = acc + m.at(rows[0], cols[c]) * poly_det(m, sub_rows, sub_cols) * sign;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

RepSpace trivial_rep(int n) {
  RepSpace s;
  s.weight = DominantWeight::sp(std::vector<Rational>(static_cast<size_t>(n), 0));
  s.universe = VariableUniverse::make(n, 0);
  s.basis.push_back(LaurentPolynomial::constant(s.universe, 1));
  return s;
}

RepSpace fundamental_rep(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("fundamental index must be in 1..n");
  SymbolicUnipotentMatrix uni(n);
  PolyMatrix inv = symbolic_inverse(uni);
  const auto& u = uni.m.universe;
  const int dim = 2 * n;
  SymplecticForm form(n);

  auto wedge = subsets_of_size(dim, k);
  std::map<std::vector<int>, int> wedge_index;
  for (size_t i = 0; i < wedge.size(); ++i) wedge_index[wedge[i]] = static_cast<int>(i);

  // Kernel of contraction with the form inside the k-th exterior power:
  //   e_S -> sum_{p<q} (-1)^{p+q-1} J(s_p, s_q) e_{S \ {s_p, s_q}}.
  MatrixXq contraction;
  MatrixXq kernel;
  if (k >= 2) {
    auto lower = subsets_of_size(dim, k - 2);
    std::map<std::vector<int>, int> lower_index;
    for (size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = static_cast<int>(i);
    contraction = MatrixXq::Zero(static_cast<int>(lower.size()), static_cast<int>(wedge.size()));
    for (size_t s = 0; s < wedge.size(); ++s) {
      const auto& sub = wedge[s];
      for (size_t p = 0; p < sub.size(); ++p)
        for (size_t q = p + 1; q < sub.size(); ++q) {
          const Rational w = form.pairing(sub[p], sub[q]);
          if (w == 0) continue;
          std::vector<int> rem;
          for (size_t i = 0; i < sub.size(); ++i)
            if (i != p && i != q) rem.push_back(sub[i]);
          const Rational sign = ((p + 1 + q + 1) % 2 == 0) ? -1 : 1;  // (-1)^{p+q-1}, 1-based
          contraction(lower_index.at(rem), static_cast<int>(s)) += sign * w;
        }
    }
    Eigen::FullPivLU<MatrixXq> lu(contraction);
    if (lu.dimensionOfKernel() == 0) throw std::logic_error("contraction kernel is trivial");
    kernel = lu.kernel();
  } else {
    kernel = MatrixXq::Identity(dim, dim);
  }

  // Function attached to a wedge vector: the k x k minor of u^{-1} with row
  // set {1..k} and the wedge set as columns.
  std::vector<int> top_rows(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) top_rows[static_cast<size_t>(i)] = i + 1;
  std::vector<LaurentPolynomial> minors;
  minors.reserve(wedge.size());
  for (const auto& cols : wedge) minors.push_back(poly_det(inv, top_rows, cols));

  std::vector<LaurentPolynomial> functions;
  for (int c = 0; c < kernel.cols(); ++c) {
    LaurentPolynomial f(u);
    for (int s = 0; s < kernel.rows(); ++s) {
      if (kernel(s, c) == 0) continue;
      f = f + minors[static_cast<size_t>(s)] * kernel(s, c);
    }
    functions.push_back(std::move(f));
  }

  RepSpace out;
  out.weight = DominantWeight::sp_fundamental(n, k);
  out.universe = u;
  out.basis = row_echelon(functions, TermOrder::standard(u));
  const Int expected = weyl_dim(out.weight);
  if (Int(out.dim()) != expected)
    throw std::logic_error("fundamental module dimension mismatch: got " +
                           std::to_string(out.dim()) + ", expected " + expected.str());
  return out;
}

RepSpace cartan_product(const RepSpace& s, const RepSpace& t) {
  require_same_universe(*s.universe, *t.universe);
  std::vector<LaurentPolynomial> products;
  products.reserve(s.basis.size() * t.basis.size());
  for (const auto& f : s.basis)
    for (const auto& g : t.basis) products.push_back(f * g);
  RepSpace out;
  out.weight = s.weight + t.weight;
  out.universe = s.universe;
  out.basis = row_echelon(products, TermOrder::standard(s.universe));
  const Int expected = weyl_dim(out.weight);
  if (Int(out.dim()) != expected)
    throw std::logic_error("product module dimension mismatch: got " +
                           std::to_string(out.dim()) + ", expected " + expected.str());
  return out;
}

RepSpace rep_space(const DominantWeight& w) {
  if (w.group != Group::SP) throw std::invalid_argument("rep_space requires an SP weight");
  if (!w.is_integral()) throw std::invalid_argument("rep_space requires an integral weight");
  const int n = w.rank();
  RepSpace acc = trivial_rep(n);
  std::vector<RepSpace> fundamentals(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    const Rational mult = w.lambda[static_cast<size_t>(k - 1)] -
                          (k < n ? w.lambda[static_cast<size_t>(k)] : Rational(0));
    if (mult == 0) continue;
    if (fundamentals[static_cast<size_t>(k)].basis.empty())
      fundamentals[static_cast<size_t>(k)] = fundamental_rep(n, k);
    for (Int i = 0; i < numer(mult); ++i)
      acc = cartan_product(acc, fundamentals[static_cast<size_t>(k)]);
  }
  return acc;
}

LatticePointSet initial_exponent_set(const RepSpace& s, const TermOrder& o) {
  LatticePointSet out;
  out.reserve(s.basis.size());
  for (const auto& f : s.basis) {
    auto [c, e] = initial_term(f, o);
    out.push_back(e.x_part());
  }
  sort_unique(out);
  if (out.size() != s.basis.size())
    throw std::logic_error("echelon basis has repeated leading exponents");
  return out;
}

}  // namespace horotoric
