#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horotoric/sagbi.hpp"

using namespace horotoric;

namespace {

HoroVarietySpec spec_p3() { return HoroVarietySpec::from_weights(2, {DominantWeight::sp({1, 0})}); }
HoroVarietySpec spec_lg() { return HoroVarietySpec::from_weights(2, {DominantWeight::sp({1, 1})}); }
HoroVarietySpec spec_flag() {
  return HoroVarietySpec::from_weights(2, {DominantWeight::sp({1, 0}), DominantWeight::sp({1, 1})});
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational acc = 1;
  for (int i = 1; i <= k; ++i) acc *= Rational(n - k + i) / Rational(i);
  return numer(acc);
}

}  // namespace

TEST_CASE("spec construction and validation") {
  auto p3 = spec_p3();
  CHECK(p3.r() == 1);
  CHECK(p3.weight_coords[0](0) == 1);

  // Dependent weights need an explicit lattice.
  CHECK_THROWS_AS(HoroVarietySpec::from_weights(
                      2, {DominantWeight::sp({1, 0}), DominantWeight::sp({2, 0})}),
                  std::invalid_argument);

  // A weight outside the lattice span is rejected.
  MatrixXq basis(2, 1);
  basis << 2, 0;
  CHECK_THROWS_AS(
      HoroVarietySpec::make(2, {DominantWeight::sp({1, 0})}, basis, {}),
      std::invalid_argument);

  // Same weights, explicit lattice: the scaled lattice halves the counts.
  MatrixXq basis2(2, 1);
  basis2 << 1, 0;
  auto explicit_spec = HoroVarietySpec::make(2, {DominantWeight::sp({1, 0})}, basis2, {});
  CHECK(hilbert_function(explicit_spec, 2) == hilbert_function(spec_p3(), 2));
}

TEST_CASE("graded dimensions") {
  CHECK(hilbert_function(spec_p3(), 0) == 1);
  CHECK(hilbert_function(spec_p3(), 2) == 10);
  CHECK(hilbert_function(spec_lg(), 2) == 14);
  CHECK(hilbert_function(spec_lg(), 2) == binom(6, 4) - binom(4, 4));
  CHECK(hilbert_function(spec_flag(), 1) == 9);
  for (int k = 0; k <= 4; ++k) CHECK(hilbert_function(spec_p3(), k) == binom(k + 3, 3));
}

TEST_CASE("embedding: generator inventory") {
  {
    auto trivial = HoroVarietySpec::from_weights(2, {DominantWeight::sp({0, 0})});
    auto e = psi_embed(trivial);
    REQUIRE(e.generators.size() == 1);
    CHECK(to_string(e.generators[0]) == "1 * t");
  }
  {
    auto e = psi_embed(spec_p3());
    CHECK(e.generators.size() == 4);
    for (const auto& g : e.generators) {
      auto [c, ex] = initial_term(g, *e.order);
      CHECK(ex.t_exponent() == 1);
      CHECK(ex[e.universe->y_index(1)] == 1);
    }
  }
  CHECK(psi_embed(spec_lg()).generators.size() == 5);
  CHECK(psi_embed(spec_flag()).generators.size() == 9);
}

TEST_CASE("rewriting over the generators") {
  auto e = psi_embed(spec_p3());
  {
    auto trace = subduct(e.generators[1], e, 100);
    CHECK(trace.status == SubductionStatus::ZeroRemainder);
    CHECK(trace.steps.size() == 1);
    CHECK(trace.strictly_decreasing);
  }
  {
    auto f = e.generators[1] * e.generators[2];
    auto trace = subduct(f, e, 100);
    CHECK(trace.status == SubductionStatus::ZeroRemainder);
  }
  {
    // Wrong torus exponent: the leading term has no match.
    std::vector<std::int64_t> exps(static_cast<size_t>(e.universe->var_count()), 0);
    exps[static_cast<size_t>(e.universe->y_index(1))] = 2;
    exps[static_cast<size_t>(e.universe->t_index())] = 1;
    auto f = LaurentPolynomial::monomial(e.universe, ExponentVector(e.universe, exps), 1);
    auto trace = subduct(f, e, 100);
    CHECK(trace.status == SubductionStatus::Stuck);
    CHECK(!trace.remainder.is_zero());
  }
  {
    auto trace = subduct(e.generators[0], e, 0);
    CHECK(trace.status == SubductionStatus::BudgetExhausted);
  }
  {
    // Seeded random span elements rewrite to zero, with strict decrease.
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; ++t) {
      auto f = random_ring_element(e, 3, rng);
      auto trace = subduct(f, e, default_subduction_budget(f, e, 3));
      CHECK(trace.status == SubductionStatus::ZeroRemainder);
      CHECK(trace.strictly_decreasing);
    }
  }
  {
    // Degree-2 combinations finish within the 10 points of the level.
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> gen(0, 3), num(-5, 5);
    for (int t = 0; t < 10; ++t) {
      LaurentPolynomial f(e.universe);
      for (int term = 0; term < 3; ++term) {
        int c = num(rng);
        if (c == 0) c = 2;
        f = f + e.generators[static_cast<size_t>(gen(rng))] *
                    e.generators[static_cast<size_t>(gen(rng))] * Rational(c);
      }
      if (f.is_zero()) continue;
      auto trace = subduct(f, e, 100);
      CHECK(trace.status == SubductionStatus::ZeroRemainder);
      CHECK(trace.steps.size() <= 10);
    }
  }
}

TEST_CASE("level sets of the graded image") {
  auto e = psi_embed(spec_p3());
  CHECK(initial_algebra_level(e, 0) ==
        LatticePointSet{LatticePoint(static_cast<size_t>(e.universe->var_count()), 0)});
  auto cone = e.cone();
  CHECK(initial_algebra_level(e, 1) == cone_lattice_points(cone, 1));
  auto level2 = initial_algebra_level(e, 2);
  CHECK(level2.size() == 10);
  CHECK(level2 == cone_lattice_points(cone, 2));
}

TEST_CASE("verification report") {
  {
    auto rep = verify_sagbi(psi_embed(spec_p3()), 3, 10, 1);
    CHECK(rep.all_passed());
  }
  {
    auto rep = verify_sagbi(psi_embed(spec_lg()), 3, 10, 2);
    CHECK(rep.all_passed());
    REQUIRE(rep.levels.size() == 4);
    CHECK(rep.levels[1].dim == 5);
    CHECK(rep.levels[2].dim == 14);
    CHECK(rep.levels[3].dim == 30);
  }
  {
    auto rep = verify_sagbi(psi_embed(spec_flag()), 2, 10, 3);
    CHECK(rep.all_passed());
    CHECK(rep.levels[1].dim == 9);
    CHECK(rep.levels[2].dim == 40);
  }
}

TEST_CASE("verification at rank three") {
  {
    auto lg36 = HoroVarietySpec::from_weights(3, {DominantWeight::sp({1, 1, 1})});
    auto rep = verify_sagbi(psi_embed(lg36), 2, 5, 4);
    CHECK(rep.all_passed());
    CHECK(rep.levels[1].dim == 14);
    CHECK(rep.levels[2].dim == 84);
  }
  {
    auto flag6 = HoroVarietySpec::from_weights(
        3, {DominantWeight::sp({1, 0, 0}), DominantWeight::sp({1, 1, 0}),
            DominantWeight::sp({1, 1, 1})});
    CHECK(hilbert_function(flag6, 1) == 34);
    auto rep = verify_sagbi(psi_embed(flag6, 1), 2, 5, 5);
    CHECK(rep.all_passed());
    CHECK(rep.levels[2].dim == 455);
  }
}

TEST_CASE("per-level predecessor counts") {
  auto e = psi_embed(spec_p3());
  {
    auto origin = ExponentVector::zero(e.universe);
    CHECK(finiteness_check(e, origin, 3) == 0);
  }
  auto cone = e.cone();
  {
    auto level1 = cone_lattice_points(cone, 1);
    // Order-smallest level-1 exponent: nothing below it at its level.
    LatticePoint smallest = level1.front();
    for (const auto& p : level1)
      if (e.order->compare_raw(p, smallest) < 0) smallest = p;
    CHECK(finiteness_check(e, ExponentVector(e.universe, smallest), 3) == 0);
  }
  {
    auto level2 = cone_lattice_points(cone, 2);
    LatticePoint largest = level2.front();
    for (const auto& p : level2)
      if (e.order->compare_raw(p, largest) > 0) largest = p;
    CHECK(finiteness_check(e, ExponentVector(e.universe, largest), 3) == 9);
  }
  {
    // Not a semigroup point.
    std::vector<std::int64_t> exps(static_cast<size_t>(e.universe->var_count()), 0);
    exps[static_cast<size_t>(e.universe->t_index())] = 1;  // t alone: y-exponent 0 is wrong
    CHECK_THROWS_AS(finiteness_check(e, ExponentVector(e.universe, exps), 3),
                    std::invalid_argument);
  }
}

TEST_CASE("degeneration data") {
  {
    auto trivial = HoroVarietySpec::from_weights(2, {DominantWeight::sp({0, 0})});
    auto d = degenerate(psi_embed(trivial), 3, 3);
    CHECK(d.generators.size() == 1);
    CHECK(d.binomials.empty());
  }
  {
    auto d = degenerate(psi_embed(spec_p3()), 3, 3);
    CHECK(d.generators.size() == 4);
    CHECK(d.binomials.empty());
    for (const auto& hs : d.hilbert_certificate) CHECK(hs.match);
  }
  {
    auto e = psi_embed(spec_lg());
    auto d = degenerate(e, 3, 3);
    CHECK(d.generators.size() == 5);
    REQUIRE(d.binomials.size() == 1);
    std::int64_t plus_deg = 0, minus_deg = 0;
    LatticePoint balance(d.generators.front().size(), 0);
    for (size_t i = 0; i < d.generators.size(); ++i) {
      plus_deg += d.binomials[0].plus[i];
      minus_deg += d.binomials[0].minus[i];
      for (size_t v = 0; v < balance.size(); ++v)
        balance[v] += (d.binomials[0].plus[i] - d.binomials[0].minus[i]) * d.generators[i][v];
    }
    CHECK(plus_deg == 2);
    CHECK(minus_deg == 2);
    for (auto v : balance) CHECK(v == 0);
  }
  {
    // A failed or missing verification is rejected.
    auto e = psi_embed(spec_p3());
    SagbiReport empty;
    CHECK_THROWS_AS(degenerate(e, 3, 3, empty), std::invalid_argument);
  }
}

TEST_CASE("one-parameter family members") {
  auto e = psi_embed(spec_p3());
  auto f = e.generators[1] * e.generators[2] - e.generators[0] * e.generators[3];
  REQUIRE(!f.is_zero());

  CHECK(flat_family_member(f, e, 1, 2) == f);

  auto at_zero = flat_family_member(f, e, 0, 2);
  CHECK(at_zero.term_count() == 1);
  auto [c0, e0] = initial_term(at_zero, *e.order);
  auto [cf, ef] = initial_term(f, *e.order);
  CHECK(e0 == ef);
  CHECK(c0 == cf);

  auto mid = flat_family_member(f, e, Rational(1, 2), 2);
  CHECK(mid.term_count() == f.term_count());
  auto [cm, em] = initial_term(mid, *e.order);
  CHECK(em == ef);
  CHECK(cm == cf);

  // Non-leading coefficients carry positive parameter powers: doubling tau
  // back rescales every term into f only when the powers are as claimed.
  for (const auto& [ex, c] : mid.terms()) {
    const Rational orig = f.coefficient(ex);
    REQUIRE(orig != 0);
    // c = orig * (1/2)^k for some k >= 0
    Rational ratio = c / orig;
    while (ratio != 1) {
      ratio *= 2;
      REQUIRE(ratio <= 1);
    }
  }
}

TEST_CASE("family members preserve graded dimensions at generic parameter") {
  auto e = psi_embed(spec_lg());
  for (int k = 1; k <= 2; ++k) {
    std::vector<LaurentPolynomial> images;
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& ms, int start) {
      if (static_cast<int>(ms.size()) == k) {
        LaurentPolynomial prod = LaurentPolynomial::constant(e.universe, 1);
        for (int i : ms) prod = prod * e.generators[static_cast<size_t>(i)];
        images.push_back(flat_family_member(prod, e, Rational(1, 2), 2));
        return;
      }
      for (int i = start; i < static_cast<int>(e.generators.size()); ++i) {
        ms.push_back(i);
        rec(ms, i);
        ms.pop_back();
      }
    };
    std::vector<int> ms;
    rec(ms, 0);
    CHECK(Int(static_cast<long>(row_echelon(images, *e.order).size())) ==
          hilbert_function(e.spec, k));
  }
}

TEST_CASE("order-realizing weight vectors separate the exponent chain") {
  auto e = psi_embed(spec_p3());
  auto w = order_weight_vector(e, 2, {});
  CHECK(w.size() == static_cast<size_t>(e.universe->var_count()));
  // t must carry the dominant negative weight: leading terms minimize <w, .>.
  CHECK(w[static_cast<size_t>(e.universe->t_index())] < 0);
}
