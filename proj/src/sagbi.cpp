#include "horotoric/sagbi.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace horotoric {

namespace {

VectorXq solve_in_basis(const MatrixXq& basis, const VectorXq& v, const char* what) {
  if (basis.cols() == 0) {
    for (int i = 0; i < v.rows(); ++i)
      if (v(i) != 0) throw std::invalid_argument(std::string(what) + " is outside the lattice span");
    return VectorXq(0);
  }
  // basis has full column rank; least-squares normal equations are exact here.
  Eigen::FullPivLU<MatrixXq> lu(basis.transpose() * basis);
  VectorXq c = lu.inverse() * (basis.transpose() * v);
  VectorXq residual = basis * c - v;
  for (int i = 0; i < residual.rows(); ++i)
    if (residual(i) != 0) throw std::invalid_argument(std::string(what) + " is outside the lattice span");
  return c;
}

void validate_weights(int n, const std::vector<DominantWeight>& weights) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (weights.empty()) throw std::invalid_argument("spec needs at least one weight");
  for (const auto& w : weights) {
    if (w.group != Group::SP) throw std::invalid_argument("spec weights must be SP weights");
    if (w.rank() != n) throw std::invalid_argument("spec weight has wrong rank");
    if (!w.is_integral()) throw std::invalid_argument("spec weights must be integral");
  }
}

VectorXq weight_vector(const DominantWeight& w) {
  VectorXq v(w.rank());
  for (int i = 0; i < w.rank(); ++i) v(i) = w.lambda[static_cast<size_t>(i)];
  return v;
}

}  // namespace

HoroVarietySpec HoroVarietySpec::from_weights(int n, std::vector<DominantWeight> weights) {
  validate_weights(n, weights);
  // The zero weight lies in every lattice and contributes no basis column.
  std::vector<const DominantWeight*> nonzero;
  for (const auto& w : weights)
    if (!w.is_zero()) nonzero.push_back(&w);
  const int s = static_cast<int>(nonzero.size());
  MatrixXq basis(n, s);
  for (int i = 0; i < s; ++i) basis.col(i) = weight_vector(*nonzero[static_cast<size_t>(i)]);
  if (s > 0) {
    Eigen::FullPivLU<MatrixXq> lu(basis);
    if (lu.rank() != s)
      throw std::invalid_argument(
          "built-in lattice mode requires linearly independent weights; pass an explicit lattice");
  }
  std::vector<VectorXq> vertices;
  vertices.reserve(weights.size());
  for (const auto& w : weights) vertices.push_back(weight_vector(w));
  return make(n, std::move(weights), std::move(basis), std::move(vertices));
}

HoroVarietySpec HoroVarietySpec::make(int n, std::vector<DominantWeight> weights,
                                      MatrixXq lattice_basis, std::vector<VectorXq> moment_vertices) {
  validate_weights(n, weights);
  if (lattice_basis.rows() != n) throw std::invalid_argument("lattice basis has wrong row count");
  const int r = static_cast<int>(lattice_basis.cols());
  for (int i = 0; i < lattice_basis.rows(); ++i)
    for (int j = 0; j < r; ++j)
      if (!is_integer(lattice_basis(i, j)))
        throw std::invalid_argument("lattice basis must be integral");
  if (r > 0) {
    Eigen::FullPivLU<MatrixXq> lu(lattice_basis);
    if (lu.rank() != r) throw std::invalid_argument("lattice basis columns are dependent");
  }
  if (moment_vertices.empty())
    for (const auto& w : weights) moment_vertices.push_back(weight_vector(w));
  HoroVarietySpec spec;
  spec.n = n;
  spec.weights = std::move(weights);
  spec.lattice_basis = std::move(lattice_basis);
  spec.moment_vertices = std::move(moment_vertices);
  for (const auto& w : spec.weights) {
    VectorXq c = solve_in_basis(spec.lattice_basis, weight_vector(w), "weight");
    for (int i = 0; i < c.rows(); ++i)
      if (!is_integer(c(i))) throw std::invalid_argument("weight is not a lattice point");
    spec.weight_coords.push_back(std::move(c));
  }
  for (const auto& v : spec.moment_vertices) {
    if (v.rows() != n) throw std::invalid_argument("moment vertex has wrong dimension");
    spec.moment_coords.push_back(solve_in_basis(spec.lattice_basis, v, "moment vertex"));
  }
  return spec;
}

HPolytope moment_hull(const HoroVarietySpec& spec) {
  return hull_of_points(spec.moment_coords, spec.r());
}

Int hilbert_function(const HoroVarietySpec& spec, int k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  LatticePointSet coords = lattice_points(dilate(moment_hull(spec), k));
  Int total = 0;
  for (const auto& c : coords) {
    std::vector<Rational> lam(static_cast<size_t>(spec.n), 0);
    for (int i = 0; i < spec.n; ++i) {
      Rational acc = 0;
      for (int j = 0; j < spec.r(); ++j) acc += spec.lattice_basis(i, j) * Rational(c[static_cast<size_t>(j)]);
      lam[static_cast<size_t>(i)] = acc;
    }
    total += weyl_dim(DominantWeight::sp(std::move(lam)));
  }
  return total;
}

HPolytope newton_base(const HoroVarietySpec& spec, NewtonVariant variant) {
  const int n = spec.n;
  const int d = n * n;
  const int r = spec.r();
  GCShape shape = gc_shape(Group::SP, n);
  HPolytope out(d + r);

  MatrixXq xblock, yblock;
  if (variant == NewtonVariant::Prime) {
    ChangeOfVariables cv = change_of_vars_matrices(n);
    // Pattern coords = A x + B L y; interlacing rows become
    // (Gp A) x + (Gl L + Gp B L) y >= 0.
    xblock = shape.pattern_block * cv.a;
    yblock = (shape.lambda_block + shape.pattern_block * cv.b) * spec.lattice_basis;
  } else {
    xblock = shape.pattern_block;
    yblock = shape.lambda_block * spec.lattice_basis;
  }
  for (int i = 0; i < xblock.rows(); ++i) {
    RowVectorXq row = RowVectorXq::Zero(d + r);
    row.head(d) = xblock.row(i);
    row.tail(r) = yblock.row(i);
    out.add_inequality(row, Rational(0));
  }
  HPolytope hull = moment_hull(spec);
  for (int i = 0; i < hull.row_count(); ++i) {
    RowVectorXq row = RowVectorXq::Zero(d + r);
    row.tail(r) = hull.lhs().row(i);
    out.add_inequality(row, hull.rhs()(i));
  }
  return out;
}

EmbeddedAlgebra psi_embed(const HoroVarietySpec& spec, int check_level) {
  EmbeddedAlgebra e;
  e.spec = spec;
  e.universe = VariableUniverse::make(spec.n, spec.r());
  e.order = std::make_shared<const TermOrder>(TermOrder::standard(e.universe));
  for (int wi = 0; wi < spec.s(); ++wi) {
    RepSpace rep = spec.weights[static_cast<size_t>(wi)].is_zero()
                       ? trivial_rep(spec.n)
                       : rep_space(spec.weights[static_cast<size_t>(wi)]);
    std::vector<std::int64_t> shift(static_cast<size_t>(e.universe->var_count()), 0);
    for (int j = 0; j < spec.r(); ++j)
      shift[static_cast<size_t>(e.universe->y_index(j + 1))] =
          to_int64(numer(spec.weight_coords[static_cast<size_t>(wi)](j)));
    shift[static_cast<size_t>(e.universe->t_index())] = 1;
    const auto mono = LaurentPolynomial::monomial(e.universe, ExponentVector(e.universe, shift), 1);
    for (const auto& f : rep.basis) {
      LaurentPolynomial g = f.extended_to(e.universe) * mono;
      for (const auto& [ex, c] : g.terms()) {
        if (ex.t_exponent() != 1) throw std::logic_error("generator is not homogeneous of degree 1");
        for (int j = 0; j < spec.r(); ++j)
          if (Rational(ex[e.universe->y_index(j + 1)]) !=
              spec.weight_coords[static_cast<size_t>(wi)](j))
            throw std::logic_error("generator torus exponent does not match its weight");
      }
      e.generators.push_back(std::move(g));
      e.generator_weight.push_back(wi);
    }
  }
  e.cone_base = newton_base(spec, NewtonVariant::Prime);
  e.check_level = check_level;
  for (int k = 0; k <= check_level; ++k) {
    const Int dim(static_cast<long>(initial_algebra_level(e, k).size()));
    const Int expected = hilbert_function(spec, k);
    if (dim != expected) {
      std::ostringstream os;
      os << "embedded algebra fails the dimension check at degree " << k << ": got " << dim
         << ", expected " << expected;
      throw std::logic_error(os.str());
    }
  }
  return e;
}

namespace {

void multisets_rec(int count, int k, std::vector<int>& cur, int start,
                   const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == k) {
    emit(cur);
    return;
  }
  for (int i = start; i < count; ++i) {
    cur.push_back(i);
    multisets_rec(count, k, cur, i, emit);
    cur.pop_back();
  }
}

void for_each_multiset(int count, int k, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur;
  if (k == 0) {
    emit(cur);
    return;
  }
  multisets_rec(count, k, cur, 0, emit);
}

LaurentPolynomial product_of(const EmbeddedAlgebra& e, const std::vector<int>& indices) {
  LaurentPolynomial acc = LaurentPolynomial::constant(e.universe, 1);
  for (int i : indices) acc = acc * e.generators[static_cast<size_t>(i)];
  return acc;
}

std::vector<LaurentPolynomial> degree_products(const EmbeddedAlgebra& e, int k) {
  std::vector<LaurentPolynomial> out;
  for_each_multiset(static_cast<int>(e.generators.size()), k,
                    [&](const std::vector<int>& ms) { out.push_back(product_of(e, ms)); });
  return out;
}

}  // namespace

LatticePointSet initial_algebra_level(const EmbeddedAlgebra& e, int k) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (k == 0) return {LatticePoint(static_cast<size_t>(e.universe->var_count()), 0)};
  auto echelon = row_echelon(degree_products(e, k), *e.order);
  LatticePointSet out;
  out.reserve(echelon.size());
  for (const auto& f : echelon) out.push_back(initial_term(f, *e.order).second.full());
  sort_unique(out);
  return out;
}

long default_subduction_budget(const LaurentPolynomial& f, const EmbeddedAlgebra& e,
                               int level_bound) {
  return 10 * (static_cast<long>(f.term_count()) +
               static_cast<long>(level_bound) * static_cast<long>(e.generators.size()));
}

namespace {

// All nonnegative integer combinations d of the generators' leading
// exponents with sum equal to `target`. Enumerated in lexicographic order of
// d, so the first solution found is the lexicographically lowest.
void match_rec(const std::vector<LatticePoint>& lead, const LatticePoint& target,
               LatticePoint& partial, size_t idx, std::int64_t level_left,
               std::vector<LatticePoint>& solutions, bool first_only) {
  if (first_only && !solutions.empty()) return;
  const size_t nvars = target.size();
  if (idx == lead.size()) {
    if (level_left != 0) return;
    LatticePoint acc(nvars, 0);
    for (size_t g = 0; g < lead.size(); ++g)
      for (size_t v = 0; v < nvars; ++v) acc[v] += partial[g] * lead[g][v];
    if (acc == target) solutions.push_back(partial);
    return;
  }
  for (std::int64_t d = 0; d <= level_left; ++d) {
    partial[idx] = d;
    match_rec(lead, target, partial, idx + 1, level_left - d, solutions, first_only);
    if (first_only && !solutions.empty()) {
      partial[idx] = 0;
      return;
    }
  }
  partial[idx] = 0;
}

std::vector<LatticePoint> match_initial(const EmbeddedAlgebra& e,
                                        const std::vector<LatticePoint>& lead,
                                        const ExponentVector& target, bool first_only) {
  const std::int64_t level = target.t_exponent();
  std::vector<LatticePoint> solutions;
  LatticePoint partial(lead.size(), 0);
  match_rec(lead, target.full(), partial, 0, level, solutions, first_only);
  (void)e;
  return solutions;
}

}  // namespace

SubductionTrace subduct(const LaurentPolynomial& f, const EmbeddedAlgebra& e, long max_steps,
                        SubductionChoice choice, std::uint64_t seed) {
  require_same_universe(*f.universe(), *e.universe);
  SubductionTrace trace(e.universe);
  std::vector<LatticePoint> lead;
  lead.reserve(e.generators.size());
  for (const auto& g : e.generators) lead.push_back(initial_term(g, *e.order).second.full());
  std::mt19937_64 rng(seed);

  LaurentPolynomial g = f;
  while (!g.is_zero()) {
    if (static_cast<long>(trace.steps.size()) >= max_steps) {
      trace.status = SubductionStatus::BudgetExhausted;
      trace.remainder = g;
      return trace;
    }
    auto [c, ex] = initial_term(g, *e.order);
    auto solutions = match_initial(e, lead, ex, choice == SubductionChoice::LowestLex);
    if (solutions.empty()) {
      trace.status = SubductionStatus::Stuck;
      trace.remainder = g;
      return trace;
    }
    const LatticePoint& d = (choice == SubductionChoice::LowestLex)
                                ? solutions.front()
                                : solutions[std::uniform_int_distribution<size_t>(
                                      0, solutions.size() - 1)(rng)];
    LaurentPolynomial prod = LaurentPolynomial::constant(e.universe, 1);
    for (size_t i = 0; i < d.size(); ++i)
      for (std::int64_t c2 = 0; c2 < d[i]; ++c2) prod = prod * e.generators[i];
    auto [pc, pe] = initial_term(prod, *e.order);
    if (!(pe == ex)) throw std::logic_error("matched product has unexpected leading exponent");
    const Rational coeff = c / pc;
    LaurentPolynomial next = g - prod * coeff;
    if (!next.is_zero()) {
      auto [nc, ne] = initial_term(next, *e.order);
      if (e.order->compare(ne, ex) >= 0) trace.strictly_decreasing = false;
    }
    trace.steps.push_back({d, coeff, next});
    g = std::move(next);
  }
  trace.status = SubductionStatus::ZeroRemainder;
  trace.remainder = g;
  return trace;
}

bool SagbiReport::levels_match() const {
  for (const auto& l : levels)
    if (!l.match) return false;
  return true;
}

bool SagbiReport::trials_passed() const {
  for (const auto& t : trials)
    if (!t.remainder_zero || !t.strictly_decreasing) return false;
  return true;
}

LaurentPolynomial random_ring_element(const EmbeddedAlgebra& e, int level_bound,
                                      std::mt19937_64& rng) {
  const int gcount = static_cast<int>(e.generators.size());
  std::uniform_int_distribution<int> deg_dist(1, level_bound);
  std::uniform_int_distribution<int> terms_dist(1, 4);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 4);
  std::uniform_int_distribution<int> gen_dist(0, gcount - 1);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const int k = deg_dist(rng);
    const int nterms = terms_dist(rng);
    LaurentPolynomial f(e.universe);
    for (int t = 0; t < nterms; ++t) {
      int num = num_dist(rng);
      if (num == 0) num = 1;
      const Rational c(num, den_dist(rng));
      std::vector<int> ms(static_cast<size_t>(k));
      for (auto& v : ms) v = gen_dist(rng);
      f = f + product_of(e, ms) * c;
    }
    if (!f.is_zero()) return f;
  }
  throw std::logic_error("random element generation kept cancelling to zero");
}

SagbiReport verify_sagbi(const EmbeddedAlgebra& e, int level_bound, int trials,
                         std::uint64_t seed, SubductionChoice choice) {
  if (level_bound < 1) throw std::invalid_argument("level bound must be >= 1");
  SagbiReport report;
  report.level_bound = level_bound;
  ConeOverPolytope cone = e.cone();
  std::vector<LatticePointSet> cone_levels(static_cast<size_t>(level_bound) + 1);
  for (int k = 0; k <= level_bound; ++k) {
    cone_levels[static_cast<size_t>(k)] = cone_lattice_points(cone, k);
    LatticePointSet alg = initial_algebra_level(e, k);
    SagbiLevelReport lr;
    lr.k = k;
    lr.dim = Int(static_cast<long>(alg.size()));
    lr.lattice_count = Int(static_cast<long>(cone_levels[static_cast<size_t>(k)].size()));
    lr.match = (alg == cone_levels[static_cast<size_t>(k)]);
    report.levels.push_back(lr);
  }

  // Generation by the degree-1 leading exponents.
  LatticePointSet gen_exps;
  for (const auto& g : e.generators) gen_exps.push_back(initial_term(g, *e.order).second.full());
  sort_unique(gen_exps);
  report.generation_certified = true;
  LatticePointSet reach = gen_exps;
  if (cone_levels[1] != gen_exps) report.generation_certified = false;
  for (int k = 2; k <= level_bound; ++k) {
    LatticePointSet next;
    for (const auto& a : reach)
      for (const auto& g : gen_exps) {
        LatticePoint sum(a.size());
        for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + g[i];
        next.push_back(std::move(sum));
      }
    sort_unique(next);
    if (next != cone_levels[static_cast<size_t>(k)]) report.generation_certified = false;
    reach = std::move(next);
  }

  std::mt19937_64 seeder(seed);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seeder();
    std::mt19937_64 rng(trial_seed);
    LaurentPolynomial f = random_ring_element(e, level_bound, rng);
    SubductionTrace trace =
        subduct(f, e, default_subduction_budget(f, e, level_bound), choice, trial_seed);
    SubductionTrialReport tr;
    tr.seed = trial_seed;
    tr.steps = static_cast<int>(trace.steps.size());
    tr.remainder_zero = (trace.status == SubductionStatus::ZeroRemainder);
    tr.strictly_decreasing = trace.strictly_decreasing;
    report.trials.push_back(tr);
  }
  return report;
}

Int finiteness_check(const EmbeddedAlgebra& e, const ExponentVector& p, int level_bound) {
  require_same_universe(*e.universe, *p.universe());
  const std::int64_t level = p.t_exponent();
  if (level > level_bound)
    throw std::invalid_argument("point is above the requested level bound");
  LatticePointSet slice = cone_lattice_points(e.cone(), static_cast<int>(level));
  const LatticePoint target = p.full();
  if (!std::binary_search(slice.begin(), slice.end(), target))
    throw std::invalid_argument("point is not in the initial-term semigroup at its level");
  Int count = 0;
  for (const auto& q : slice)
    if (e.order->compare_raw(q, target) < 0) ++count;
  return count;
}

ToricDegenerationData degenerate(const EmbeddedAlgebra& e, int level_bound, int deg_bound,
                                 const SagbiReport& report) {
  if (report.level_bound < level_bound || !report.all_passed())
    throw std::invalid_argument("degeneration requires a passed verification at the level bound");
  ToricDegenerationData out;
  SemigroupGenerators sg = semigroup_generators(e.cone(), level_bound);
  if (!sg.certified) throw std::logic_error("semigroup generation lost its certificate");
  out.generators = sg.generators;
  out.certified_level = level_bound;

  // Binomials: multisets of generators with equal exponent sums. Two
  // multisets with the same image give a kernel vector; vectors are deduped.
  const int gcount = static_cast<int>(out.generators.size());
  std::map<LatticePoint, std::vector<int>> first_image;
  std::vector<std::vector<std::int64_t>> kernel_vectors;
  auto record = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<std::int64_t> u(static_cast<size_t>(gcount), 0);
    for (int i : a) u[static_cast<size_t>(i)] += 1;
    for (int i : b) u[static_cast<size_t>(i)] -= 1;
    bool zero = true;
    for (auto v : u)
      if (v != 0) zero = false;
    if (zero) return;
    // Canonical sign: first nonzero positive.
    for (auto v : u) {
      if (v == 0) continue;
      if (v < 0)
        for (auto& w : u) w = -w;
      break;
    }
    kernel_vectors.push_back(std::move(u));
  };
  for (int deg = 1; deg <= deg_bound; ++deg) {
    for_each_multiset(gcount, deg, [&](const std::vector<int>& ms) {
      LatticePoint image(out.generators.front().size(), 0);
      for (int i : ms)
        for (size_t v = 0; v < image.size(); ++v) image[v] += out.generators[static_cast<size_t>(i)][v];
      auto [it, inserted] = first_image.emplace(image, ms);
      if (!inserted) record(ms, it->second);
    });
  }
  std::sort(kernel_vectors.begin(), kernel_vectors.end());
  kernel_vectors.erase(std::unique(kernel_vectors.begin(), kernel_vectors.end()),
                       kernel_vectors.end());
  for (const auto& u : kernel_vectors) {
    // Exact kernel identity on the generator exponents.
    LatticePoint acc(out.generators.front().size(), 0);
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t v = 0; v < acc.size(); ++v) acc[v] += u[i] * out.generators[i][v];
    for (auto v : acc)
      if (v != 0) throw std::logic_error("binomial fails the kernel identity");
    Binomial b;
    b.plus.resize(u.size());
    b.minus.resize(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
      b.plus[i] = std::max<std::int64_t>(u[i], 0);
      b.minus[i] = std::max<std::int64_t>(-u[i], 0);
    }
    out.binomials.push_back(std::move(b));
  }

  for (int k = 0; k <= level_bound; ++k) {
    HilbertSlice hs;
    hs.k = k;
    hs.slice_count = Int(static_cast<long>(cone_lattice_points(e.cone(), k).size()));
    hs.hilbert = hilbert_function(e.spec, k);
    hs.match = (hs.slice_count == hs.hilbert);
    out.hilbert_certificate.push_back(hs);
    if (!hs.match) throw std::logic_error("level slice does not match the Hilbert function");
  }
  return out;
}

ToricDegenerationData degenerate(const EmbeddedAlgebra& e, int level_bound, int deg_bound) {
  SagbiReport report = verify_sagbi(e, level_bound, 8, 0x5eed);
  return degenerate(e, level_bound, deg_bound, report);
}

std::vector<std::int64_t> order_weight_vector(const EmbeddedAlgebra& e, int level_bound,
                                              const std::vector<ExponentVector>& extra) {
  std::vector<LatticePoint> exps;
  for (int k = 0; k <= level_bound; ++k)
    for (const auto& f : degree_products(e, k))
      for (const auto& [ex, c] : f.terms()) exps.push_back(ex.full());
  for (const auto& ex : extra) exps.push_back(ex.full());
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

  const int nvars = e.universe->var_count();
  std::vector<std::int64_t> w(static_cast<size_t>(nvars), 0);
  // Per-slot magnitudes from exponent spreads, lowest priority first. The
  // sign makes order-larger exponents w-smaller.
  const auto& schedule = e.order->schedule();
  std::vector<std::int64_t> spread(static_cast<size_t>(nvars), 0);
  for (int v = 0; v < nvars; ++v) {
    std::int64_t mn = 0, mx = 0;
    bool first = true;
    for (const auto& ex : exps) {
      const std::int64_t val = ex[static_cast<size_t>(v)];
      if (first || val < mn) mn = val;
      if (first || val > mx) mx = val;
      first = false;
    }
    spread[static_cast<size_t>(v)] = mx - mn;
  }
  std::int64_t scale = 1;
  for (auto it = schedule.rbegin(); it != schedule.rend(); ++it) {
    w[static_cast<size_t>(it->var)] = it->larger_wins ? -scale : scale;
    scale = scale + scale * spread[static_cast<size_t>(it->var)];
    if (scale > (std::int64_t{1} << 56))
      throw std::overflow_error("order weight vector exceeds the integer range");
  }
  // Pairwise verification on the sorted exponent chain.
  std::vector<LatticePoint> chain = exps;
  std::sort(chain.begin(), chain.end(), [&](const LatticePoint& a, const LatticePoint& b) {
    return e.order->compare_raw(a, b) > 0;
  });
  auto value = [&](const LatticePoint& p) {
    std::int64_t acc = 0;
    for (int v = 0; v < nvars; ++v) acc += w[static_cast<size_t>(v)] * p[static_cast<size_t>(v)];
    return acc;
  };
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!(value(chain[i]) < value(chain[i + 1]))) {
      std::ostringstream os;
      os << "weight vector fails to separate exponents " << i << " and " << i + 1;
      throw std::logic_error(os.str());
    }
  return w;
}

LaurentPolynomial flat_family_member(const LaurentPolynomial& f, const EmbeddedAlgebra& e,
                                     const Rational& tau, int level_bound) {
  require_same_universe(*f.universe(), *e.universe);
  if (f.is_zero()) return f;
  std::vector<ExponentVector> extra;
  for (const auto& [ex, c] : f.terms()) extra.push_back(ex);
  const auto w = order_weight_vector(e, level_bound, extra);
  auto value = [&](const ExponentVector& p) {
    std::int64_t acc = 0;
    for (int v = 0; v < e.universe->var_count(); ++v)
      acc += w[static_cast<size_t>(v)] * p[v];
    return acc;
  };
  const auto [lc, le] = initial_term(f, *e.order);
  const std::int64_t base = value(le);
  LaurentPolynomial out(e.universe);
  for (const auto& [ex, c] : f.terms()) {
    const std::int64_t k = value(ex) - base;
    if (k < 0) throw std::logic_error("leading term is not w-minimal");
    if (tau == 0) {
      if (k == 0) out.add_term(ex, c);
      continue;
    }
    Rational scale = 1;
    for (std::int64_t i = 0; i < k; ++i) scale *= tau;
    out.add_term(ex, c * scale);
  }
  return out;
}

}  // namespace horotoric
