#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "horotoric/laurent.hpp"
#include "horotoric/symplectic.hpp"

using namespace horotoric;

namespace {

ExponentVector random_exponent(const UniversePtr& u, std::mt19937_64& rng, int box) {
  std::uniform_int_distribution<int> nonneg(0, box);
  std::uniform_int_distribution<int> any(-box, box);
  std::vector<std::int64_t> e(static_cast<size_t>(u->var_count()), 0);
  for (int i = 0; i < u->x_count(); ++i) e[static_cast<size_t>(i)] = nonneg(rng);
  for (int k = 1; k <= u->r(); ++k) e[static_cast<size_t>(u->y_index(k))] = any(rng);
  e[static_cast<size_t>(u->t_index())] = nonneg(rng);
  return ExponentVector(u, std::move(e));
}

LaurentPolynomial random_poly(const UniversePtr& u, std::mt19937_64& rng, int terms, int box) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  LaurentPolynomial f(u);
  for (int t = 0; t < terms; ++t) {
    int c = num(rng);
    if (c == 0) c = 1;
    f.add_term(random_exponent(u, rng, box), Rational(c, den(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("universe indexing") {
  auto u = VariableUniverse::make(2, 1);
  CHECK(u->x_count() == 4);
  CHECK(u->var_count() == 6);
  CHECK(u->var_name(u->x_index(1, 4)) == "x[1,4]");
  CHECK(u->var_name(u->y_index(1)) == "y[1]");
  CHECK(u->var_name(u->t_index()) == "t");
  CHECK_THROWS_AS(u->x_index(2, 4), std::invalid_argument);  // 2+4 > 5
  CHECK_THROWS_AS(u->x_index(1, 1), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) CHECK(VariableUniverse::make(n, 0)->x_count() == n * n);
}

TEST_CASE("exponent vectors enforce sign constraints") {
  auto u = VariableUniverse::make(2, 1);
  std::vector<std::int64_t> neg_x = {-1, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(ExponentVector(u, neg_x), std::invalid_argument);
  std::vector<std::int64_t> neg_t = {0, 0, 0, 0, 0, -1};
  CHECK_THROWS_AS(ExponentVector(u, neg_t), std::invalid_argument);
  std::vector<std::int64_t> neg_y = {0, 0, 0, 0, -3, 0};
  CHECK_NOTHROW(ExponentVector(u, neg_y));
}

TEST_CASE("order: identity and frozen comparisons") {
  auto u = VariableUniverse::make(2, 1);
  auto o = TermOrder::standard(u);
  auto zero = ExponentVector::zero(u);
  CHECK(compare(zero, zero, o) == 0);

  // A pure x[1,4] monomial is below the constant monomial.
  auto e14 = ExponentVector::unit(u, u->x_index(1, 4));
  CHECK(compare(e14, zero, o) < 0);

  // Any t-carrying monomial beats any t-free one.
  std::mt19937_64 rng(7);
  auto et = ExponentVector::unit(u, u->t_index());
  for (int i = 0; i < 50; ++i) {
    auto v = random_exponent(u, rng, 3);
    auto w = random_exponent(u, rng, 3);
    if (w.t_exponent() != 0 || v.t_exponent() != 0) continue;
    CHECK(compare(et + v, w, o) > 0);
  }
}

TEST_CASE("order: mismatched universes rejected") {
  auto u1 = VariableUniverse::make(2, 0);
  auto u2 = VariableUniverse::make(2, 1);
  auto o = TermOrder::standard(u1);
  CHECK_THROWS_AS(compare(ExponentVector::zero(u1), ExponentVector::zero(u2), o),
                  std::invalid_argument);
}

TEST_CASE("order: variable chain matches the comparison schedule") {
  // Consecutive variables of the x-chain compare upward.
  for (int n : {2, 3}) {
    auto u = VariableUniverse::make(n, 0);
    auto o = TermOrder::standard(u);
    std::vector<int> chain;
    for (int i = 1; i <= n; ++i)
      for (int j = 2 * n + 1 - i; j > i; --j) chain.push_back(u->x_index(i, j));
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      auto a = ExponentVector::unit(u, chain[i]);
      auto b = ExponentVector::unit(u, chain[i + 1]);
      CHECK(compare(a, b, o) < 0);
    }
  }
}

TEST_CASE("order: the constant monomial tops the nonnegative x-monomials") {
  auto u = VariableUniverse::make(3, 0);
  auto o = TermOrder::standard(u);
  auto zero = ExponentVector::zero(u);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> exp(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::int64_t> e(static_cast<size_t>(u->var_count()), 0);
    bool nonzero = false;
    for (int i = 0; i < u->x_count(); ++i) {
      e[static_cast<size_t>(i)] = exp(rng);
      nonzero = nonzero || e[static_cast<size_t>(i)] != 0;
    }
    if (!nonzero) continue;
    CHECK(compare(ExponentVector(u, e), zero, o) < 0);
  }
}

TEST_CASE("order: compatibility with addition (random)") {
  auto u = VariableUniverse::make(2, 2);
  auto o = TermOrder::standard(u);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = random_exponent(u, rng, 4);
    auto b = random_exponent(u, rng, 4);
    auto c = random_exponent(u, rng, 4);
    CHECK(compare(a, b, o) == compare(a + c, b + c, o));
  }
}

TEST_CASE("multiplication: units, squares, difference of squares") {
  auto u = VariableUniverse::make(2, 0);
  auto one = LaurentPolynomial::constant(u, 1);
  auto x12 = LaurentPolynomial::variable(u, u->x_index(1, 2));
  std::mt19937_64 rng(3);
  auto f = random_poly(u, rng, 5, 2);
  CHECK(f * one == f);
  auto sq = x12 * x12;
  CHECK(sq.term_count() == 1);
  CHECK(initial_term(sq, TermOrder::standard(u)).second ==
        ExponentVector::unit(u, u->x_index(1, 2), 2));
  auto prod = (one - x12) * (one + x12);
  CHECK(prod == one - sq);
}

TEST_CASE("initial term: frozen examples and the zero error") {
  auto u = VariableUniverse::make(2, 1);
  auto o = TermOrder::standard(u);
  auto one = LaurentPolynomial::constant(u, 1);
  auto x12 = LaurentPolynomial::variable(u, u->x_index(1, 2));
  auto f = one + x12;
  auto [c, e] = initial_term(f, o);
  CHECK(c == 1);
  CHECK(e.is_zero());

  auto t = LaurentPolynomial::variable(u, u->t_index());
  auto y1 = LaurentPolynomial::variable(u, u->y_index(1));
  auto g = t * Rational(3) + y1;
  auto [cg, eg] = initial_term(g, o);
  CHECK(cg == 3);
  CHECK(eg == ExponentVector::unit(u, u->t_index()));

  auto m = LaurentPolynomial::monomial(u, ExponentVector::unit(u, u->x_index(2, 3), 2),
                                       Rational(-7, 2));
  auto [cm, em] = initial_term(m, o);
  CHECK(cm == Rational(-7, 2));
  CHECK(em == ExponentVector::unit(u, u->x_index(2, 3), 2));

  CHECK_THROWS_AS(initial_term(LaurentPolynomial(u), o), std::invalid_argument);
}

TEST_CASE("initial term of products is additive (random)") {
  auto u = VariableUniverse::make(2, 1);
  auto o = TermOrder::standard(u);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(u, rng, 4, 3);
    auto g = random_poly(u, rng, 4, 3);
    if (f.is_zero() || g.is_zero()) continue;
    auto fg = f * g;
    REQUIRE(!fg.is_zero());  // leading coefficients cannot cancel
    CHECK(initial_term(fg, o).second == initial_term(f, o).second + initial_term(g, o).second);
  }
}

TEST_CASE("row echelon: duplicates, pivots, span preservation") {
  auto u = VariableUniverse::make(2, 0);
  auto o = TermOrder::standard(u);
  auto one = LaurentPolynomial::constant(u, 1);
  auto x12 = LaurentPolynomial::variable(u, u->x_index(1, 2));

  auto dup = row_echelon({one + x12, one + x12}, o);
  CHECK(dup.size() == 1);
  CHECK(dup[0] == one + x12);

  auto two = row_echelon({one + x12, x12}, o);
  REQUIRE(two.size() == 2);
  CHECK(initial_term(two[0], o).second.is_zero());
  CHECK(initial_term(two[1], o).second == ExponentVector::unit(u, u->x_index(1, 2)));
  // Reduced form: the zero-pivot element is exactly the constant 1.
  CHECK(two[0] == one);

  // Random spans: distinct pivots, membership both ways.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LaurentPolynomial> fs;
    for (int i = 0; i < 5; ++i) fs.push_back(random_poly(u, rng, 3, 2));
    auto basis = row_echelon(fs, o);
    std::set<std::vector<std::int64_t>> pivots;
    for (const auto& b : basis) pivots.insert(initial_term(b, o).second.full());
    CHECK(pivots.size() == basis.size());
    for (const auto& f : fs) CHECK(reduce_against(f, basis, o).is_zero());
    for (const auto& b : basis) {
      auto r = reduce_against(b, row_echelon(fs, o), o);
      CHECK(r.is_zero());
    }
  }
}

TEST_CASE("row echelon of the first-row minor functions has distinct pivots") {
  // Four functions spanning the smallest nontrivial module, echeloned.
  auto rep = fundamental_rep(2, 1);
  auto o = TermOrder::standard(rep.universe);
  auto basis = row_echelon(rep.basis, o);
  CHECK(basis.size() == 4);
  std::set<std::vector<std::int64_t>> pivots;
  for (const auto& b : basis) pivots.insert(initial_term(b, o).second.full());
  CHECK(pivots.size() == 4);
}

TEST_CASE("polynomial text round trip") {
  auto u = VariableUniverse::make(2, 2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(u, rng, 6, 3);
    CHECK(parse_polynomial(u, to_string(f)) == f);
  }
  CHECK(parse_polynomial(u, "0").is_zero());
  CHECK(parse_polynomial(u, "x[1,2]^2 * y[1]^-3 - 5/2 * t") ==
        parse_polynomial(u, "1 * x[1,2]^2 * y[1]^-3 + -5/2 * t"));
  CHECK_THROWS_AS(parse_polynomial(u, "x[9,9]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial(u, "1 +"), std::invalid_argument);
}

TEST_CASE("mismatched universes rejected in arithmetic") {
  auto u1 = VariableUniverse::make(2, 0);
  auto u2 = VariableUniverse::make(3, 0);
  auto f = LaurentPolynomial::constant(u1, 1);
  auto g = LaurentPolynomial::constant(u2, 1);
  CHECK_THROWS_AS(f * g, std::invalid_argument);
  CHECK_THROWS_AS(f + g, std::invalid_argument);
}
