#include "horotoric/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "horotoric/sagbi.hpp"

namespace horotoric {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<DominantWeight> dominant_weights(Group g, int n, int max_first) {
  std::vector<DominantWeight> out;
  std::vector<Rational> lam(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int idx, int bound) {
    if (idx == n) {
      out.push_back(DominantWeight(g, lam));
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      lam[static_cast<size_t>(idx)] = v;
      rec(idx + 1, v);
    }
  };
  rec(0, max_first);
  return out;
}

bool same_vertex_set(const HPolytope& a, const HPolytope& b) {
  auto va = vertices(a);
  auto vb = vertices(b);
  if (va.size() != vb.size()) return false;
  for (size_t i = 0; i < va.size(); ++i)
    for (int j = 0; j < va[i].rows(); ++j)
      if (va[i](j) != vb[i](j)) return false;
  return true;
}

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational acc = 1;
  for (int i = 1; i <= k; ++i) acc *= Rational(n - k + i) / Rational(i);
  return numer(acc);
}

struct Checklist {
  std::ostream& os;
  int index = 0;
  int total = 0;
  bool all_ok = true;

  bool run(const std::string& name, const std::function<void()>& body) {
    ++index;
    const auto t0 = Clock::now();
    std::string failure;
    try {
      body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream line;
    line << "[" << index << "/" << total << "] " << (failure.empty() ? "PASS" : "FAIL") << "  ("
         << dt << "s)  " << name;
    if (!failure.empty()) line << "\n        " << failure;
    os << line.str() << std::endl;
    if (!failure.empty()) all_ok = false;
    return failure.empty();
  }
};

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

HoroVarietySpec spec_p3() { return HoroVarietySpec::from_weights(2, {DominantWeight::sp({1, 0})}); }
HoroVarietySpec spec_lg() { return HoroVarietySpec::from_weights(2, {DominantWeight::sp({1, 1})}); }
HoroVarietySpec spec_flag() {
  return HoroVarietySpec::from_weights(2, {DominantWeight::sp({1, 0}), DominantWeight::sp({1, 1})});
}

}  // namespace

bool run_acceptance(std::ostream& os) {
  Checklist list{os};
  list.total = 8;

  list.run("lattice count equals module dimension (SP(4) l1<=4, SP(6) l1<=2, GL(2)/GL(3) l1<=4)",
           [&] {
             auto check = [&](Group g, int n, int bound) {
               for (const auto& w : dominant_weights(g, n, bound)) {
                 const Int count(static_cast<long>(lattice_points(gc_polytope(w)).size()));
                 const Int dim = weyl_dim(w);
                 expect(count == dim, "count mismatch at a weight of rank " + std::to_string(n));
               }
             };
             check(Group::SP, 2, 4);
             check(Group::SP, 3, 2);
             check(Group::GL, 2, 4);
             check(Group::GL, 3, 4);
           });

  list.run("interlacing polytopes add linearly (SP(4), entries <= 2, vertex-set equality)", [&] {
    const auto weights = dominant_weights(Group::SP, 2, 2);
    for (const auto& a : weights)
      for (const auto& b : weights) {
        HPolytope sum = minkowski_sum(gc_polytope(a), gc_polytope(b));
        expect(same_vertex_set(sum, gc_polytope(a + b)), "vertex sets differ");
      }
  });

  list.run("change of variables is unimodular (n=1..5) and preserves counts (k<=5)", [&] {
    for (int n = 1; n <= 5; ++n) change_of_vars_matrices(n);  // throws unless |det A| = 1
    for (const auto& lam :
         {std::vector<Rational>{1, 0}, std::vector<Rational>{1, 1}, std::vector<Rational>{2, 1}}) {
      const auto w = DominantWeight::sp(lam);
      const HPolytope plain = gc_polytope(w);
      const HPolytope prime = gc_prime_polytope(w);
      for (int k = 1; k <= 5; ++k)
        expect(lattice_points(dilate(plain, k)).size() == lattice_points(dilate(prime, k)).size(),
               "dilation count mismatch at k=" + std::to_string(k));
    }
  });

  list.run("leading exponents of modules fill the transformed polytopes (n=2 five weights, n=3 "
           "fundamentals)",
           [&] {
             auto check = [&](const DominantWeight& w) {
               RepSpace rs = rep_space(w);
               const auto got = initial_exponent_set(rs, TermOrder::standard(rs.universe));
               const auto want = lattice_points(gc_prime_polytope(w));
               expect(got == want, "exponent set differs from the polytope");
               expect(Int(static_cast<long>(got.size())) == weyl_dim(w), "dimension mismatch");
             };
             for (const auto& lam :
                  {std::vector<Rational>{1, 0}, std::vector<Rational>{1, 1},
                   std::vector<Rational>{2, 0}, std::vector<Rational>{2, 1},
                   std::vector<Rational>{2, 2}})
               check(DominantWeight::sp(lam));
             for (int k = 1; k <= 3; ++k) check(DominantWeight::sp_fundamental(3, k));
           });

  list.run("graded verification passes at K=3 with 50 trials (projective space, Lagrangian "
           "Grassmannian, full flag)",
           [&] {
             int which = 0;
             for (const auto& spec : {spec_p3(), spec_lg(), spec_flag()}) {
               EmbeddedAlgebra e = psi_embed(spec);
               SagbiReport report = verify_sagbi(e, 3, 50, 1000 + which);
               expect(report.levels_match(), "level equality failed");
               expect(report.generation_certified, "degree-1 generation failed");
               expect(report.trials_passed(), "a subduction trial failed");
               ++which;
             }
           });

  list.run("graded dimensions equal dilation counts for both fibered polytopes (k<=4)", [&] {
    for (const auto& spec : {spec_p3(), spec_lg(), spec_flag()}) {
      ConeOverPolytope plain(newton_base(spec, NewtonVariant::Plain));
      ConeOverPolytope prime(newton_base(spec, NewtonVariant::Prime));
      for (int k = 0; k <= 4; ++k) {
        const Int h = hilbert_function(spec, k);
        expect(Int(static_cast<long>(cone_lattice_points(plain, k).size())) == h,
               "plain count mismatch at k=" + std::to_string(k));
        expect(Int(static_cast<long>(cone_lattice_points(prime, k).size())) == h,
               "transformed count mismatch at k=" + std::to_string(k));
      }
    }
    // Independent binomial-coefficient oracles.
    for (int k = 0; k <= 4; ++k) {
      expect(hilbert_function(spec_p3(), k) == binom(k + 3, 3), "projective-space oracle");
      expect(hilbert_function(spec_lg(), k) == binom(k + 4, 4) - binom(k + 2, 4),
             "quadric oracle");
    }
  });

  list.run("degeneration data: free for projective space, one quadric binomial for the "
           "Grassmannian, slice sizes match (k<=3)",
           [&] {
             {
               EmbeddedAlgebra e = psi_embed(spec_p3());
               ToricDegenerationData d = degenerate(e, 3, 3);
               expect(d.generators.size() == 4, "expected 4 generators");
               expect(d.binomials.empty(), "expected no binomials");
             }
             {
               EmbeddedAlgebra e = psi_embed(spec_lg());
               ToricDegenerationData d = degenerate(e, 3, 3);
               expect(d.generators.size() == 5, "expected 5 generators");
               expect(d.binomials.size() == 1, "expected exactly one binomial");
               std::int64_t deg = 0;
               for (auto v : d.binomials[0].plus) deg += v;
               expect(deg == 2, "binomial degree is not 2");
             }
             for (const auto& spec : {spec_p3(), spec_lg(), spec_flag()}) {
               EmbeddedAlgebra e = psi_embed(spec);
               ToricDegenerationData d = degenerate(e, 3, 3);
               for (const auto& hs : d.hilbert_certificate)
                 expect(hs.match, "slice size differs from graded dimension");
             }
           });

  list.run("randomized-choice subduction terminates with zero remainder (50 trials per spec)", [&] {
    int which = 0;
    for (const auto& spec : {spec_p3(), spec_lg(), spec_flag()}) {
      EmbeddedAlgebra e = psi_embed(spec);
      std::mt19937_64 seeder(7000 + which);
      for (int t = 0; t < 50; ++t) {
        const std::uint64_t seed = seeder();
        std::mt19937_64 rng(seed);
        LaurentPolynomial f = random_ring_element(e, 3, rng);
        SubductionTrace trace =
            subduct(f, e, default_subduction_budget(f, e, 3), SubductionChoice::Random, seed);
        expect(trace.status == SubductionStatus::ZeroRemainder, "nonzero remainder");
        expect(trace.strictly_decreasing, "leading exponent failed to decrease");
      }
      ++which;
    }
  });

  os << (list.all_ok ? "all criteria passed" : "SOME CRITERIA FAILED") << std::endl;
  return list.all_ok;
}

}  // namespace horotoric
