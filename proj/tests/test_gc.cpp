#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horotoric/gc.hpp"
#include "horotoric/universe.hpp"

using namespace horotoric;

namespace {

LatticePointSet brute_points(const HPolytope& p, std::int64_t lo, std::int64_t hi) {
  LatticePointSet out;
  LatticePoint z(static_cast<size_t>(p.dim()), lo);
  while (true) {
    if (p.contains(z)) out.push_back(z);
    int i = 0;
    while (i < p.dim() && z[static_cast<size_t>(i)] == hi) z[static_cast<size_t>(i++)] = lo;
    if (i == p.dim()) break;
    ++z[static_cast<size_t>(i)];
  }
  sort_unique(out);
  return out;
}

}  // namespace

TEST_CASE("dominant weight validation") {
  CHECK_THROWS_AS(DominantWeight::sp({0, 1}), std::invalid_argument);   // not decreasing
  CHECK_THROWS_AS(DominantWeight::sp({1, -1}), std::invalid_argument);  // negative for SP
  CHECK_NOTHROW(DominantWeight::gl({1, -1}));                           // fine for GL
  CHECK_NOTHROW(DominantWeight::sp({Rational(1, 2), 0}));               // rational, for polytopes
}

TEST_CASE("module dimensions by the product formula") {
  CHECK(weyl_dim(DominantWeight::sp({0, 0})) == 1);
  CHECK(weyl_dim(DominantWeight::sp({1, 0})) == 4);
  CHECK(weyl_dim(DominantWeight::sp({1, 1})) == 5);
  CHECK(weyl_dim(DominantWeight::sp({2, 0})) == 10);
  CHECK(weyl_dim(DominantWeight::sp({2, 1})) == 16);
  CHECK(weyl_dim(DominantWeight::sp({2, 2})) == 14);
  for (int k = 0; k <= 5; ++k)
    CHECK(weyl_dim(DominantWeight::gl({Rational(k), 0})) == k + 1);
  CHECK(weyl_dim(DominantWeight::gl({2, 1, 0})) == 8);
  CHECK(weyl_dim(DominantWeight::gl({0, -2})) == 3);
  CHECK_THROWS_AS(weyl_dim(DominantWeight::sp({Rational(1, 2), 0})), std::invalid_argument);
}

TEST_CASE("interlacing polytopes: frozen counts") {
  CHECK(lattice_points(gc_polytope(DominantWeight::sp({0, 0}))) ==
        LatticePointSet{LatticePoint(4, 0)});
  CHECK(lattice_points(gc_polytope(DominantWeight::sp({1, 0}))).size() == 4);
  auto gl = gc_polytope(DominantWeight::gl({2, 1, 0}));
  CHECK(gl.dim() == 3);
  CHECK(lattice_points(gl).size() == 8);
  CHECK(lattice_points(gl) == brute_points(gl, 0, 2));
  CHECK_THROWS_AS(gc_polytope(DominantWeight::sp({0, 1})), std::invalid_argument);
}

TEST_CASE("counts equal dimensions on a sweep") {
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2) {
      {
        auto w = DominantWeight::sp({Rational(l1), Rational(l2)});
        CHECK(Int(static_cast<long>(lattice_points(gc_polytope(w)).size())) == weyl_dim(w));
      }
      for (int l3 = 0; l3 <= l2; ++l3) {
        auto w = DominantWeight::sp({Rational(l1), Rational(l2), Rational(l3)});
        CHECK(Int(static_cast<long>(lattice_points(gc_polytope(w)).size())) == weyl_dim(w));
      }
    }
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2) {
      auto w = DominantWeight::gl({Rational(l1), Rational(l2)});
      CHECK(Int(static_cast<long>(lattice_points(gc_polytope(w)).size())) == weyl_dim(w));
    }
}

TEST_CASE("change of variables: rank one and rank two, explicitly") {
  auto cv1 = change_of_vars_matrices(1);
  CHECK(cv1.a(0, 0) == -1);
  CHECK(cv1.b(0, 0) == 1);

  auto cv2 = change_of_vars_matrices(2);
  // Column order x[1,2], x[1,3], x[1,4], x[2,3]; row order by pattern rows.
  MatrixXq a_expected(4, 4);
  a_expected << 0, 0, -1, 0,  //
      0, -1, 0, 0,            //
      1, -1, 0, 0,            //
      1, -1, 0, -1;
  MatrixXq b_expected(4, 2);
  b_expected << 1, 0, 0, 1, 0, 1, 0, 1;
  CHECK(exact_equal(cv2.a, a_expected));
  CHECK(exact_equal(cv2.b, b_expected));
  CHECK(cv2.p_labels[0] == "x[1,2]");
  CHECK(cv2.q_labels[0] == "row1[1]");
}

TEST_CASE("change of variables: weight block pattern and unimodularity") {
  for (int n = 1; n <= 5; ++n) {
    auto cv = change_of_vars_matrices(n);
    Eigen::FullPivLU<MatrixXq> lu(cv.a);
    const Rational det = lu.determinant();
    CHECK((det == 1 || det == -1));
    for (int i = 0; i < cv.a_inv.rows(); ++i)
      for (int j = 0; j < cv.a_inv.cols(); ++j) CHECK(is_integer(cv.a_inv(i, j)));
    // Every row of B is a unit vector; blocks follow (l_1..l_n, l_2..l_n, ...).
    int row = 0;
    for (int m = 1; m <= n; ++m) {
      for (int i = 1; i <= n - m + 1; ++i, ++row)  // first block of level m: l_{m-1+i}
        CHECK(cv.b(row, m - 2 + i) == 1);
      for (int i = 1; i <= n - m; ++i, ++row)  // second block: l_{m+i}
        CHECK(cv.b(row, m - 1 + i) == 1);
    }
    for (int i = 0; i < cv.b.rows(); ++i) {
      Rational sum = 0;
      for (int j = 0; j < n; ++j) sum += cv.b(i, j);
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("exponent-coordinate polytope") {
  CHECK(lattice_points(gc_prime_polytope(DominantWeight::sp({0, 0}))) ==
        LatticePointSet{LatticePoint(4, 0)});

  // Independent oracle: push the four known pattern points through the map.
  auto cv = change_of_vars_matrices(2);
  VectorXq lam(2);
  lam << 1, 0;
  LatticePointSet expected;
  for (const auto& q : lattice_points(gc_polytope(DominantWeight::sp({1, 0})))) {
    VectorXq qv(4);
    for (int i = 0; i < 4; ++i) qv(i) = q[static_cast<size_t>(i)];
    VectorXq p = cv.a_inv * (qv - cv.b * lam);
    LatticePoint pt(4);
    for (int i = 0; i < 4; ++i) {
      REQUIRE(is_integer(p(i)));
      pt[static_cast<size_t>(i)] = to_int64(numer(p(i)));
    }
    expected.push_back(pt);
  }
  sort_unique(expected);
  auto got = lattice_points(gc_prime_polytope(DominantWeight::sp({1, 0})));
  CHECK(got == expected);
  CHECK(std::binary_search(got.begin(), got.end(), LatticePoint(4, 0)));

  for (int k = 1; k <= 5; ++k) {
    auto w = DominantWeight::sp({2, 1});
    CHECK(lattice_points(dilate(gc_polytope(w), k)).size() ==
          lattice_points(dilate(gc_prime_polytope(w), k)).size());
  }
  CHECK_THROWS_AS(gc_prime_polytope(DominantWeight::gl({1, 0})), std::invalid_argument);
}

TEST_CASE("fibered polytopes over weight hulls") {
  {
    auto p = newton_polytope({DominantWeight::sp({0, 0})}, NewtonVariant::Plain);
    CHECK(lattice_points(p) == LatticePointSet{LatticePoint(6, 0)});
  }
  {
    auto p = newton_polytope({DominantWeight::sp({1, 0})}, NewtonVariant::Plain);
    CHECK(lattice_points(p).size() == 4);
  }
  {
    auto p = newton_polytope({DominantWeight::sp({1, 0}), DominantWeight::sp({1, 1})},
                             NewtonVariant::Plain);
    CHECK(lattice_points(p).size() == 9);  // 4 + 5 over the two integral weights
  }
  CHECK_THROWS_AS(newton_polytope({}, NewtonVariant::Plain), std::invalid_argument);
  CHECK_THROWS_AS(newton_polytope({DominantWeight::sp({1, 0}), DominantWeight::sp({1, 1, 0})},
                                  NewtonVariant::Plain),
                  std::invalid_argument);
}

TEST_CASE("joint transform: inverse identity and preserved counts") {
  auto plain = newton_polytope({DominantWeight::sp({1, 0})}, NewtonVariant::Plain);
  auto prime = newton_transform(plain, 2);
  CHECK(newton_transform_inverse(prime, 2) == plain);
  for (int k = 1; k <= 4; ++k)
    CHECK(lattice_points(dilate(plain, k)).size() == lattice_points(dilate(prime, k)).size());

  // A fixed-weight fiber maps onto the exponent-coordinate fiber.
  auto fiber = lattice_points(prime);
  LatticePointSet xparts;
  for (const auto& p : fiber) xparts.push_back(LatticePoint(p.begin() + 2, p.end()));
  sort_unique(xparts);
  CHECK(xparts == lattice_points(gc_prime_polytope(DominantWeight::sp({1, 0}))));

  CHECK_THROWS_AS(newton_transform(HPolytope(5), 2), std::invalid_argument);
}

TEST_CASE("linearity of the weight-to-polytope assignment") {
  for (int l1 = 0; l1 <= 2; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2)
      for (int c = 1; c <= 3; ++c) {
        auto w = DominantWeight::sp({Rational(l1), Rational(l2)});
        CHECK(dilate(gc_polytope(w), c) == gc_polytope(w * Rational(c)));
      }
  auto sum = minkowski_sum(gc_polytope(DominantWeight::sp({2, 0})),
                           gc_polytope(DominantWeight::sp({1, 1})));
  auto direct = gc_polytope(DominantWeight::sp({3, 1}));
  auto vs = vertices(sum);
  auto vd = vertices(direct);
  REQUIRE(vs.size() == vd.size());
  for (size_t i = 0; i < vs.size(); ++i) CHECK(vs[i] == vd[i]);
}

TEST_CASE("rational weights build polytopes") {
  auto w = DominantWeight::sp({Rational(1, 2), 0});
  auto p = gc_polytope(w);
  CHECK(lattice_points(p).size() == 1);  // only the origin fits under 1/2
  CHECK(lattice_points(dilate(p, 2)).size() == 4);
}
