#include "horotoric/polytope.hpp"

#include <algorithm>
#include <sstream>

namespace horotoric {

HPolytope::HPolytope(int dim) : dim_(dim), a_(0, dim), b_(0) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
}

HPolytope::HPolytope(MatrixXq a, VectorXq b) : dim_(static_cast<int>(a.cols())), a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows()) throw std::invalid_argument("inequality system shape mismatch");
}

void HPolytope::add_inequality(const RowVectorXq& a, const Rational& b) {
  if (a.cols() != dim_) throw std::invalid_argument("inequality has wrong dimension");
  a_.conservativeResize(a_.rows() + 1, Eigen::NoChange);
  b_.conservativeResize(b_.rows() + 1);
  a_.row(a_.rows() - 1) = a;
  b_(b_.rows() - 1) = b;
}

void HPolytope::add_equality(const RowVectorXq& a, const Rational& b) {
  add_inequality(a, b);
  add_inequality(-a, -b);
}

bool HPolytope::contains(const VectorXq& z) const {
  if (z.rows() != dim_) throw std::invalid_argument("point has wrong dimension");
  for (int i = 0; i < row_count(); ++i) {
    Rational lhs = 0;
    for (int j = 0; j < dim_; ++j) lhs += a_(i, j) * z(j);
    if (lhs < b_(i)) return false;
  }
  return true;
}

bool HPolytope::contains(const LatticePoint& z) const {
  VectorXq v(dim_);
  if (static_cast<int>(z.size()) != dim_) throw std::invalid_argument("point has wrong dimension");
  for (int j = 0; j < dim_; ++j) v(j) = z[static_cast<size_t>(j)];
  return contains(v);
}

bool HPolytope::operator==(const HPolytope& o) const {
  return dim_ == o.dim_ && a_.rows() == o.a_.rows() && exact_equal(a_, o.a_) &&
         exact_equal(b_, o.b_);
}

namespace {

// Completion fallback: interval propagation is incomplete (a sheared system
// may admit no single-row bound), so bounded systems that stall are boxed by
// exact vertex enumeration instead.
BoundsResult bounds_from_vertices(const HPolytope& p);

}  // namespace

BoundsResult propagate_bounds(const HPolytope& p) {
  const int d = p.dim();
  std::vector<std::optional<Rational>> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
  const int max_sweeps = 4 * d + 8;
  bool changed = true;
  for (int sweep = 0; sweep < max_sweeps && changed; ++sweep) {
    changed = false;
    for (int row = 0; row < p.row_count(); ++row) {
      for (int j = 0; j < d; ++j) {
        const Rational& aj = p.lhs()(row, j);
        if (aj == 0) continue;
        // a_j z_j >= b - sum_{k != j} sup(a_k z_k)
        Rational m = p.rhs()(row);
        bool finite = true;
        for (int k = 0; k < d && finite; ++k) {
          if (k == j) continue;
          const Rational& ak = p.lhs()(row, k);
          if (ak == 0) continue;
          const auto& side = (ak > 0) ? hi[static_cast<size_t>(k)] : lo[static_cast<size_t>(k)];
          if (!side) {
            finite = false;
            break;
          }
          m -= ak * *side;
        }
        if (!finite) continue;
        const Rational bound = m / aj;
        if (aj > 0) {
          auto& L = lo[static_cast<size_t>(j)];
          if (!L || bound > *L) {
            L = bound;
            changed = true;
          }
        } else {
          auto& H = hi[static_cast<size_t>(j)];
          if (!H || bound < *H) {
            H = bound;
            changed = true;
          }
        }
      }
    }
    for (int j = 0; j < d; ++j)
      if (lo[static_cast<size_t>(j)] && hi[static_cast<size_t>(j)] &&
          *lo[static_cast<size_t>(j)] > *hi[static_cast<size_t>(j)]) {
        return {false, {}, {}};
      }
  }
  BoundsResult out;
  out.lo.resize(static_cast<size_t>(d));
  out.hi.resize(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    if (!lo[static_cast<size_t>(j)] || !hi[static_cast<size_t>(j)]) {
      if (d <= 12) {
        try {
          return bounds_from_vertices(p);
        } catch (const std::invalid_argument&) {
          // fall through to the coordinate-naming error
        }
      }
      std::ostringstream os;
      os << "no derivable bounds for coordinate " << j << " (interval propagation)";
      throw std::invalid_argument(os.str());
    }
    out.lo[static_cast<size_t>(j)] = *lo[static_cast<size_t>(j)];
    out.hi[static_cast<size_t>(j)] = *hi[static_cast<size_t>(j)];
  }
  return out;
}

bool has_propagatable_bounds(const HPolytope& p) {
  try {
    propagate_bounds(p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

HPolytope dilate(const HPolytope& p, const Rational& k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  if (!has_propagatable_bounds(p)) throw std::invalid_argument("dilate requires a bounded polytope");
  VectorXq b = p.rhs();
  for (int i = 0; i < b.rows(); ++i) b(i) *= k;
  return HPolytope(p.lhs(), std::move(b));
}

namespace {

void enumerate_rec(const HPolytope& p, const BoundsResult& box, LatticePoint& partial, int depth,
                   LatticePointSet& out) {
  const int d = p.dim();
  if (depth == d) {
    if (p.contains(partial)) out.push_back(partial);
    return;
  }
  // Refine the box bound for coordinate `depth` using the fixed prefix.
  Rational lo = box.lo[static_cast<size_t>(depth)];
  Rational hi = box.hi[static_cast<size_t>(depth)];
  for (int row = 0; row < p.row_count(); ++row) {
    const Rational& aj = p.lhs()(row, depth);
    if (aj == 0) continue;
    Rational m = p.rhs()(row);
    for (int k = 0; k < d; ++k) {
      if (k == depth) continue;
      const Rational& ak = p.lhs()(row, k);
      if (ak == 0) continue;
      if (k < depth) {
        m -= ak * Rational(partial[static_cast<size_t>(k)]);
      } else {
        m -= ak * ((ak > 0) ? box.hi[static_cast<size_t>(k)] : box.lo[static_cast<size_t>(k)]);
      }
    }
    const Rational bound = m / aj;
    if (aj > 0) {
      if (bound > lo) lo = bound;
    } else {
      if (bound < hi) hi = bound;
    }
  }
  if (lo > hi) return;
  const Int zlo = rational_ceil(lo);
  const Int zhi = rational_floor(hi);
  for (Int z = zlo; z <= zhi; ++z) {
    partial[static_cast<size_t>(depth)] = to_int64(z);
    enumerate_rec(p, box, partial, depth + 1, out);
  }
}

}  // namespace

LatticePointSet lattice_points(const HPolytope& p) {
  if (p.dim() == 0) {
    for (int i = 0; i < p.row_count(); ++i)
      if (p.rhs()(i) > 0) return {};
    return {LatticePoint{}};
  }
  BoundsResult box = propagate_bounds(p);  // throws when unbounded
  if (!box.feasible) return {};
  LatticePoint partial(static_cast<size_t>(p.dim()), 0);
  LatticePointSet out;
  enumerate_rec(p, box, partial, 0, out);
  sort_unique(out);
  return out;
}

namespace {

bool is_integer_matrix(const MatrixXq& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

}  // namespace

HPolytope affine_image(const HPolytope& p, const MatrixXq& m, const VectorXq& c) {
  const int d = p.dim();
  if (m.rows() != d || m.cols() != d) throw std::invalid_argument("matrix has wrong shape");
  if (c.rows() != d) throw std::invalid_argument("translation has wrong dimension");
  if (!is_integer_matrix(m)) throw std::invalid_argument("matrix must be integral");
  Eigen::FullPivLU<MatrixXq> lu(m);
  const Rational det = lu.determinant();
  if (det != 1 && det != -1) throw std::invalid_argument("matrix must be unimodular (det = +-1)");
  const MatrixXq minv = lu.inverse();
  // w = Mz + c  <=>  z = M^{-1}(w - c); row a.z >= b becomes (M^{-T} a).w >= b + (M^{-T} a).c
  MatrixXq a2 = p.lhs() * minv;
  VectorXq b2 = p.rhs();
  for (int i = 0; i < a2.rows(); ++i) {
    Rational shift = 0;
    for (int j = 0; j < d; ++j) shift += a2(i, j) * c(j);
    b2(i) += shift;
  }
  return HPolytope(std::move(a2), std::move(b2));
}

ConeOverPolytope::ConeOverPolytope(HPolytope base) : base_(std::move(base)) {
  BoundsResult box = propagate_bounds(base_);  // throws when unbounded
  (void)box;                                   // feasibility not required; empty base gives the origin ray only
}

LatticePointSet cone_lattice_points(const ConeOverPolytope& c, int k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  LatticePointSet out;
  if (k == 0) {
    out.push_back(LatticePoint(static_cast<size_t>(c.base().dim() + 1), 0));
    return out;
  }
  LatticePointSet slice = lattice_points(dilate(c.base(), k));
  out.reserve(slice.size());
  for (auto& z : slice) {
    z.push_back(k);
    out.push_back(std::move(z));
  }
  sort_unique(out);
  return out;
}

SemigroupGenerators semigroup_generators(const ConeOverPolytope& c, int level_bound) {
  if (level_bound < 1) throw std::invalid_argument("level bound must be >= 1");
  SemigroupGenerators out;
  out.level_bound = level_bound;
  std::vector<LatticePointSet> levels(static_cast<size_t>(level_bound) + 1);
  for (int k = 1; k <= level_bound; ++k) levels[static_cast<size_t>(k)] = cone_lattice_points(c, k);

  auto in_level = [&](const LatticePoint& p, int k) {
    const auto& L = levels[static_cast<size_t>(k)];
    return std::binary_search(L.begin(), L.end(), p);
  };

  std::vector<LatticePointSet> gens_by_level(static_cast<size_t>(level_bound) + 1);
  for (int k = 1; k <= level_bound; ++k) {
    for (const auto& p : levels[static_cast<size_t>(k)]) {
      bool decomposable = false;
      for (int j = 1; j <= k - j && !decomposable; ++j) {
        for (const auto& q : levels[static_cast<size_t>(j)]) {
          LatticePoint rem(p.size());
          for (size_t i = 0; i < p.size(); ++i) rem[i] = p[i] - q[i];
          if (in_level(rem, k - j)) {
            decomposable = true;
            break;
          }
        }
      }
      if (!decomposable) gens_by_level[static_cast<size_t>(k)].push_back(p);
    }
  }
  for (int k = 1; k <= level_bound; ++k)
    for (const auto& g : gens_by_level[static_cast<size_t>(k)]) out.generators.push_back(g);
  sort_unique(out.generators);

  // Generation certificate: dynamic programming over levels.
  std::vector<LatticePointSet> reach(static_cast<size_t>(level_bound) + 1);
  out.certified = true;
  for (int k = 1; k <= level_bound; ++k) {
    LatticePointSet r = gens_by_level[static_cast<size_t>(k)];
    for (int j = 1; j < k; ++j) {
      for (const auto& g : gens_by_level[static_cast<size_t>(j)]) {
        for (const auto& a : reach[static_cast<size_t>(k - j)]) {
          LatticePoint sum(a.size());
          for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + g[i];
          r.push_back(std::move(sum));
        }
      }
    }
    sort_unique(r);
    reach[static_cast<size_t>(k)] = std::move(r);
    if (reach[static_cast<size_t>(k)] != levels[static_cast<size_t>(k)]) out.certified = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Double description on the homogenization cone { (z, w) : A z - b w >= 0, w >= 0 }.

namespace {

constexpr int kDimGuard = 12;

// Scales to a primitive integer vector. Orientation is preserved: the double
// description iteration relies on stored directions lying inside the cone.
VectorXq primitive(VectorXq v) {
  Int l = 1;
  for (int i = 0; i < v.rows(); ++i) l = boost::multiprecision::lcm(l, denom(v(i)));
  Int g = 0;
  for (int i = 0; i < v.rows(); ++i) {
    v(i) *= Rational(l);
    g = boost::multiprecision::gcd(g, numer(v(i)));
  }
  if (g == 0) return v;
  for (int i = 0; i < v.rows(); ++i) v(i) /= Rational(g);
  return v;
}

struct Ray {
  VectorXq dir;                // primitive
  std::vector<char> zero_set;  // per processed constraint row
};

bool subset(const std::vector<char>& a, const std::vector<char>& b, int upto) {
  // a subset of b over rows [0, upto)
  for (int i = 0; i < upto; ++i)
    if (a[static_cast<size_t>(i)] && !b[static_cast<size_t>(i)]) return false;
  return true;
}

std::vector<Ray> dd_extreme_rays(const MatrixXq& cmat) {
  const int d = static_cast<int>(cmat.cols());
  const int m = static_cast<int>(cmat.rows());

  // Greedy choice of d linearly independent rows for the initial cone.
  std::vector<int> init_rows;
  MatrixXq chosen(0, d);
  for (int i = 0; i < m && static_cast<int>(init_rows.size()) < d; ++i) {
    MatrixXq trial(chosen.rows() + 1, d);
    trial.topRows(chosen.rows()) = chosen;
    trial.row(chosen.rows()) = cmat.row(i);
    Eigen::FullPivLU<MatrixXq> lu(trial);
    if (lu.rank() == trial.rows()) {
      chosen = std::move(trial);
      init_rows.push_back(i);
    }
  }
  if (static_cast<int>(init_rows.size()) < d)
    throw std::invalid_argument("system is not pointed after homogenization (unbounded input)");

  Eigen::FullPivLU<MatrixXq> lu(chosen);
  MatrixXq inv = lu.inverse();

  std::vector<Ray> rays;
  for (int j = 0; j < d; ++j) {
    Ray r;
    r.dir = primitive(inv.col(j));
    rays.push_back(std::move(r));
  }

  std::vector<int> order = init_rows;
  for (int i = 0; i < m; ++i)
    if (std::find(init_rows.begin(), init_rows.end(), i) == init_rows.end()) order.push_back(i);

  // Evaluate the initial rays against the initial rows.
  const int total = m;
  for (auto& r : rays) r.zero_set.assign(static_cast<size_t>(total), 0);
  for (int t = 0; t < d; ++t) {
    for (auto& r : rays) {
      Rational v = 0;
      for (int j = 0; j < d; ++j) v += cmat(order[static_cast<size_t>(t)], j) * r.dir(j);
      r.zero_set[static_cast<size_t>(t)] = (v == 0) ? 1 : 0;
    }
  }

  for (int t = d; t < total; ++t) {
    const auto row = cmat.row(order[static_cast<size_t>(t)]);
    std::vector<Rational> val(rays.size());
    std::vector<int> pos, neg;
    for (size_t i = 0; i < rays.size(); ++i) {
      Rational v = 0;
      for (int j = 0; j < d; ++j) v += row(j) * rays[i].dir(j);
      val[i] = v;
      if (v > 0)
        pos.push_back(static_cast<int>(i));
      else if (v < 0)
        neg.push_back(static_cast<int>(i));
    }
    if (neg.empty()) {
      for (size_t i = 0; i < rays.size(); ++i)
        rays[i].zero_set[static_cast<size_t>(t)] = (val[i] == 0) ? 1 : 0;
      continue;
    }
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] >= 0) {
        Ray r = rays[i];
        r.zero_set[static_cast<size_t>(t)] = (val[i] == 0) ? 1 : 0;
        next.push_back(std::move(r));
      }
    }
    for (int ip : pos) {
      for (int in : neg) {
        // Adjacency: no third ray's zero set contains the common zero set.
        std::vector<char> common(static_cast<size_t>(total), 0);
        for (int u = 0; u < t; ++u)
          common[static_cast<size_t>(u)] =
              rays[static_cast<size_t>(ip)].zero_set[static_cast<size_t>(u)] &&
              rays[static_cast<size_t>(in)].zero_set[static_cast<size_t>(u)];
        bool adjacent = true;
        for (size_t other = 0; other < rays.size(); ++other) {
          if (static_cast<int>(other) == ip || static_cast<int>(other) == in) continue;
          if (subset(common, rays[other].zero_set, t)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray r;
        r.dir = primitive(val[static_cast<size_t>(ip)] * rays[static_cast<size_t>(in)].dir -
                          val[static_cast<size_t>(in)] * rays[static_cast<size_t>(ip)].dir);
        r.zero_set.assign(static_cast<size_t>(total), 0);
        for (int u = 0; u <= t; ++u) {
          Rational v = 0;
          for (int j = 0; j < d; ++j) v += cmat(order[static_cast<size_t>(u)], j) * r.dir(j);
          r.zero_set[static_cast<size_t>(u)] = (v == 0) ? 1 : 0;
        }
        next.push_back(std::move(r));
      }
    }
    // Deduplicate directions.
    std::sort(next.begin(), next.end(), [](const Ray& a, const Ray& b) {
      for (int i = 0; i < a.dir.rows(); ++i) {
        if (a.dir(i) != b.dir(i)) return a.dir(i) < b.dir(i);
      }
      return false;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Ray& a, const Ray& b) {
                             for (int i = 0; i < a.dir.rows(); ++i)
                               if (a.dir(i) != b.dir(i)) return false;
                             return true;
                           }),
               next.end());
    rays = std::move(next);
  }
  return rays;
}

}  // namespace

std::vector<VectorXq> vertices(const HPolytope& p) {
  const int d = p.dim();
  if (d > kDimGuard) throw std::invalid_argument("vertex enumeration limited to dimension <= 12");
  if (d == 0) {
    for (int i = 0; i < p.row_count(); ++i)
      if (p.rhs()(i) > 0) return {};
    return {VectorXq(0)};
  }
  // Homogenize: rows (a | -b), plus (0 | 1).
  MatrixXq cmat(p.row_count() + 1, d + 1);
  for (int i = 0; i < p.row_count(); ++i) {
    for (int j = 0; j < d; ++j) cmat(i, j) = p.lhs()(i, j);
    cmat(i, d) = -p.rhs()(i);
  }
  for (int j = 0; j < d; ++j) cmat(p.row_count(), j) = 0;
  cmat(p.row_count(), d) = 1;

  std::vector<Ray> rays = dd_extreme_rays(cmat);
  std::vector<VectorXq> verts;
  for (const auto& r : rays) {
    const Rational& w = r.dir(d);
    if (w == 0) throw std::invalid_argument("polytope is unbounded (recession ray found)");
    VectorXq v(d);
    for (int j = 0; j < d; ++j) v(j) = r.dir(j) / w;
    verts.push_back(std::move(v));
  }
  std::sort(verts.begin(), verts.end(), [](const VectorXq& a, const VectorXq& b) {
    for (int i = 0; i < a.rows(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  });
  verts.erase(std::unique(verts.begin(), verts.end(),
                          [](const VectorXq& a, const VectorXq& b) {
                            for (int i = 0; i < a.rows(); ++i)
                              if (a(i) != b(i)) return false;
                            return true;
                          }),
              verts.end());
  return verts;
}

namespace {

BoundsResult bounds_from_vertices(const HPolytope& p) {
  std::vector<VectorXq> verts = vertices(p);  // throws when unbounded
  BoundsResult out;
  if (verts.empty()) {
    out.feasible = false;
    return out;
  }
  const int d = p.dim();
  out.lo.assign(static_cast<size_t>(d), Rational(0));
  out.hi.assign(static_cast<size_t>(d), Rational(0));
  for (int j = 0; j < d; ++j) {
    out.lo[static_cast<size_t>(j)] = verts.front()(j);
    out.hi[static_cast<size_t>(j)] = verts.front()(j);
  }
  for (const auto& v : verts)
    for (int j = 0; j < d; ++j) {
      if (v(j) < out.lo[static_cast<size_t>(j)]) out.lo[static_cast<size_t>(j)] = v(j);
      if (v(j) > out.hi[static_cast<size_t>(j)]) out.hi[static_cast<size_t>(j)] = v(j);
    }
  return out;
}

}  // namespace

HPolytope hull_of_points(const std::vector<VectorXq>& points, int dim) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  if (dim > kDimGuard) throw std::invalid_argument("hull limited to dimension <= 12");
  for (const auto& p : points)
    if (p.rows() != dim) throw std::invalid_argument("hull point has wrong dimension");
  if (dim == 0) return HPolytope(0);

  const VectorXq& p0 = points.front();

  HPolytope out(dim);
  // Per-coordinate bounds first. They are implied by the facets below but
  // give interval propagation unary rows to start from.
  for (int j = 0; j < dim; ++j) {
    Rational mn = points.front()(j), mx = points.front()(j);
    for (const auto& p : points) {
      if (p(j) < mn) mn = p(j);
      if (p(j) > mx) mx = p(j);
    }
    RowVectorXq row = RowVectorXq::Zero(dim);
    row(j) = 1;
    out.add_inequality(row, mn);
    row(j) = -1;
    out.add_inequality(row, -mx);
  }

  // Affine-hull basis: greedy independent differences.
  MatrixXq basis(dim, 0);
  for (const auto& p : points) {
    VectorXq diff = p - p0;
    MatrixXq trial(dim, basis.cols() + 1);
    trial.leftCols(basis.cols()) = basis;
    trial.col(basis.cols()) = diff;
    Eigen::FullPivLU<MatrixXq> lu(trial);
    if (lu.rank() == trial.cols()) basis = std::move(trial);
  }
  const int adim = static_cast<int>(basis.cols());

  // Equalities: kernel of diff^T spans the normals of the affine hull.
  {
    MatrixXq diffs(static_cast<int>(points.size()), dim);
    for (size_t i = 0; i < points.size(); ++i) diffs.row(static_cast<int>(i)) = (points[i] - p0).transpose();
    Eigen::FullPivLU<MatrixXq> lu(diffs);
    if (lu.dimensionOfKernel() > 0) {
      MatrixXq ker = lu.kernel();  // dim x (dim - adim)
      for (int c = 0; c < ker.cols(); ++c) {
        RowVectorXq a = primitive(ker.col(c)).transpose();
        Rational b = 0;
        for (int j = 0; j < dim; ++j) b += a(j) * p0(j);
        out.add_equality(a, b);
      }
    }
  }
  if (adim == 0) return out;  // single point: equalities say it all

  // Coordinates within the affine hull: s = (U^T U)^{-1} U^T (z - p0).
  MatrixXq ut_u = basis.transpose() * basis;
  Eigen::FullPivLU<MatrixXq> lu_ut(ut_u);
  MatrixXq proj = lu_ut.inverse() * basis.transpose();  // adim x dim

  std::vector<VectorXq> s_points;
  s_points.reserve(points.size());
  for (const auto& p : points) s_points.push_back(proj * (p - p0));

  VectorXq centroid = VectorXq::Zero(adim);
  for (const auto& s : s_points) centroid += s;
  for (int i = 0; i < adim; ++i) centroid(i) /= Rational(static_cast<long>(s_points.size()));

  // Polar of the centered hull; its vertices are the facet normals.
  HPolytope polar(adim);
  {
    std::vector<VectorXq> centered;
    for (const auto& s : s_points) centered.push_back(s - centroid);
    std::sort(centered.begin(), centered.end(), [](const VectorXq& a, const VectorXq& b) {
      for (int i = 0; i < a.rows(); ++i)
        if (a(i) != b(i)) return a(i) < b(i);
      return false;
    });
    centered.erase(std::unique(centered.begin(), centered.end(),
                               [](const VectorXq& a, const VectorXq& b) {
                                 for (int i = 0; i < a.rows(); ++i)
                                   if (a(i) != b(i)) return false;
                                 return true;
                               }),
                   centered.end());
    for (const auto& s : centered) polar.add_inequality(-s.transpose(), Rational(-1));
  }
  std::vector<VectorXq> normals = vertices(polar);

  for (const auto& a : normals) {
    // Facet <a, s - centroid> <= 1 pulled back to z-coordinates.
    RowVectorXq row = -(a.transpose() * proj);
    Rational b = -1;
    for (int i = 0; i < adim; ++i) b -= a(i) * centroid(i);
    Rational shift = 0;
    for (int j = 0; j < dim; ++j) shift += row(j) * p0(j);
    out.add_inequality(row, b + shift);
  }
  for (const auto& p : points)
    if (!out.contains(p)) throw std::logic_error("hull construction failed verification");
  return out;
}

HPolytope minkowski_sum(const HPolytope& p, const HPolytope& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  if (p.dim() > kDimGuard) throw std::invalid_argument("minkowski sum limited to dimension <= 12");
  std::vector<VectorXq> vp = vertices(p);
  std::vector<VectorXq> vq = vertices(q);
  if (vp.empty() || vq.empty()) {
    HPolytope empty(p.dim());
    empty.add_inequality(RowVectorXq::Zero(p.dim()), Rational(1));
    return empty;
  }
  std::vector<VectorXq> sums;
  sums.reserve(vp.size() * vq.size());
  for (const auto& a : vp)
    for (const auto& b : vq) sums.push_back(a + b);
  return hull_of_points(sums, p.dim());
}

}  // namespace horotoric
