// Command-line front end: every library operation behind a subcommand with
// JSON file I/O. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "horotoric/acceptance.hpp"
#include "horotoric/json_io.hpp"

namespace {

using namespace horotoric;

std::vector<Rational> parse_components(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
  if (out.empty()) throw DocumentError("empty component list: '" + csv + "'");
  return out;
}

DominantWeight parse_weight(const std::string& group, int n, const std::string& lambda_csv) {
  Group g;
  if (group == "SP")
    g = Group::SP;
  else if (group == "GL")
    g = Group::GL;
  else
    throw DocumentError("--group must be SP or GL");
  auto lam = parse_components(lambda_csv);
  if (static_cast<int>(lam.size()) != n)
    throw DocumentError("--lambda must have exactly n components");
  try {
    return DominantWeight(g, std::move(lam));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("--lambda: ") + e.what());
  }
}

std::vector<DominantWeight> parse_weight_list(int n, const std::string& semicolon_list) {
  std::vector<DominantWeight> out;
  std::stringstream ss(semicolon_list);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto lam = parse_components(item);
    if (static_cast<int>(lam.size()) != n)
      throw DocumentError("each weight in --weights must have exactly n components");
    out.push_back(DominantWeight::sp(std::move(lam)));
  }
  if (out.empty()) throw DocumentError("--weights is empty");
  return out;
}

HoroVarietySpec load_spec(const std::string& path) {
  return spec_from_json(load_json_file(path), path);
}

std::string read_poly_arg(const std::string& poly, const std::string& poly_file) {
  if (!poly.empty() && !poly_file.empty())
    throw DocumentError("give either --poly or --poly-file, not both");
  if (!poly.empty()) return poly;
  if (poly_file.empty()) throw DocumentError("a polynomial is required (--poly or --poly-file)");
  std::ifstream in(poly_file);
  if (!in) throw DocumentError(poly_file + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

void print_scalar(const Int& v, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << v << "\n";
  } else {
    write_output(Json(v.str()), out_path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "horotoric: exact toolkit for interlacing polytopes, function-space models of SP(2n) "
      "modules, subduction, and toric degeneration data"};
  app.require_subcommand(1);

  std::string group = "SP", lambda_csv, weights_list, variant = "plain";
  std::string in_path, a_path, b_path, out_path, spec_path, poly_text, poly_file, tau_text,
      mode = "lex", points_path;
  int n = 2, karg = 0, level_bound = 3, deg_bound = 3, trials = 50, check_level = 2;
  long max_steps = 0;
  std::uint64_t seed = 0;

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--out", out_path, "output file (default: stdout)"); };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed (required; no wall-clock defaults)")->required();
  };

  auto* cmd_gc = app.add_subcommand("gc", "interlacing polytope of a weight, as JSON {dim, inequalities}");
  cmd_gc->add_option("--group", group, "SP or GL")->default_str("SP");
  cmd_gc->add_option("--n", n, "rank")->required();
  cmd_gc->add_option("--lambda", lambda_csv, "weight components, comma-separated")->required();
  add_out(cmd_gc);

  auto* cmd_gcp = app.add_subcommand("gcprime", "exponent-coordinate polytope of an SP weight");
  cmd_gcp->add_option("--n", n, "rank")->required();
  cmd_gcp->add_option("--lambda", lambda_csv, "weight components")->required();
  add_out(cmd_gcp);

  auto* cmd_newton = app.add_subcommand("newton", "fibered polytope over the hull of SP weights");
  cmd_newton->add_option("--n", n, "rank")->required();
  cmd_newton->add_option("--weights", weights_list, "semicolon-separated weights, e.g. '1,0;1,1'")
      ->required();
  cmd_newton->add_option("--variant", variant, "plain | prime")->default_str("plain");
  add_out(cmd_newton);

  auto* cmd_count = app.add_subcommand("count", "count lattice points of a polytope document");
  cmd_count->add_option("--in", in_path, "polytope JSON file")->required();
  cmd_count->add_option("--points", points_path, "also write the sorted point list to this file");
  add_out(cmd_count);

  auto* cmd_vertices = app.add_subcommand("vertices", "exact vertex enumeration (dim <= 12)");
  cmd_vertices->add_option("--in", in_path, "polytope JSON file")->required();
  add_out(cmd_vertices);

  auto* cmd_mink = app.add_subcommand("minkowski", "Minkowski sum of two polytope documents");
  cmd_mink->add_option("--a", a_path, "first polytope JSON file")->required();
  cmd_mink->add_option("--b", b_path, "second polytope JSON file")->required();
  add_out(cmd_mink);

  auto* cmd_weyl = app.add_subcommand("weyldim", "module dimension by the product formula");
  cmd_weyl->add_option("--group", group, "SP or GL")->default_str("SP");
  cmd_weyl->add_option("--n", n, "rank")->required();
  cmd_weyl->add_option("--lambda", lambda_csv, "integral weight components")->required();
  add_out(cmd_weyl);

  auto* cmd_cv = app.add_subcommand("changevars", "exponent/pattern change-of-variables matrices");
  cmd_cv->add_option("--n", n, "rank")->required();
  add_out(cmd_cv);

  auto* cmd_uni = app.add_subcommand("unipotent", "generic unipotent group element and its inverse");
  cmd_uni->add_option("--n", n, "rank")->required();
  add_out(cmd_uni);

  auto* cmd_rep = app.add_subcommand("repspace", "echelon function-space basis of an SP module");
  cmd_rep->add_option("--n", n, "rank")->required();
  cmd_rep->add_option("--lambda", lambda_csv, "integral dominant components")->required();
  add_out(cmd_rep);

  auto* cmd_init = app.add_subcommand("initials", "leading-exponent set of an SP module");
  cmd_init->add_option("--n", n, "rank")->required();
  cmd_init->add_option("--lambda", lambda_csv, "integral dominant components")->required();
  add_out(cmd_init);

  auto* cmd_ok = app.add_subcommand(
      "okounkov-check", "leading exponents vs transformed polytope points, {match, count}");
  cmd_ok->add_option("--n", n, "rank")->required();
  cmd_ok->add_option("--lambda", lambda_csv, "integral dominant components")->required();
  add_out(cmd_ok);

  auto* cmd_hilb = app.add_subcommand("hilbert", "graded dimension of a spec document at degree k");
  cmd_hilb->add_option("--spec", spec_path, "spec JSON: {n, weights, [lattice], [moment_vertices]}")
      ->required();
  cmd_hilb->add_option("--k", karg, "degree")->required();
  add_out(cmd_hilb);

  auto* cmd_embed = app.add_subcommand("embed", "generators of the graded image in the Laurent algebra");
  cmd_embed->add_option("--spec", spec_path, "spec JSON file")->required();
  cmd_embed->add_option("--check-level", check_level, "dimension-check degree bound")
      ->default_val(2);
  add_out(cmd_embed);

  auto* cmd_sub = app.add_subcommand("subduct", "rewrite a polynomial over the generators");
  cmd_sub->add_option("--spec", spec_path, "spec JSON file")->required();
  cmd_sub->add_option("--poly", poly_text, "polynomial text");
  cmd_sub->add_option("--poly-file", poly_file, "polynomial text file");
  cmd_sub->add_option("--mode", mode, "lex | random")->default_str("lex");
  cmd_sub->add_option("--max-steps", max_steps, "step budget (default: derived)");
  cmd_sub->add_option("--K", level_bound, "level bound used for the default budget")->default_val(3);
  add_seed(cmd_sub);
  add_out(cmd_sub);

  auto* cmd_verify = app.add_subcommand("sagbi-verify", "level equality, generation, and subduction trials");
  cmd_verify->add_option("--spec", spec_path, "spec JSON file")->required();
  cmd_verify->add_option("--K", level_bound, "level bound")->default_val(3);
  cmd_verify->add_option("--trials", trials, "number of random subduction trials")->default_val(50);
  cmd_verify->add_option("--mode", mode, "lex | random")->default_str("lex");
  add_seed(cmd_verify);
  add_out(cmd_verify);

  auto* cmd_degen = app.add_subcommand("degenerate", "semigroup generators and binomial relations");
  cmd_degen->add_option("--spec", spec_path, "spec JSON file")->required();
  cmd_degen->add_option("--K", level_bound, "certification level")->default_val(3);
  cmd_degen->add_option("--deg-bound", deg_bound, "binomial degree bound")->default_val(3);
  cmd_degen->add_option("--trials", trials, "verification trials")->default_val(8);
  add_seed(cmd_degen);
  add_out(cmd_degen);

  auto* cmd_family = app.add_subcommand("family", "one-parameter family member of a ring element");
  cmd_family->add_option("--spec", spec_path, "spec JSON file")->required();
  cmd_family->add_option("--poly", poly_text, "polynomial text");
  cmd_family->add_option("--poly-file", poly_file, "polynomial text file");
  cmd_family->add_option("--tau", tau_text, "parameter value, exact rational")->required();
  cmd_family->add_option("--K", level_bound, "level bound for the weight search")->default_val(3);
  add_out(cmd_family);

  auto* cmd_suite = app.add_subcommand("suite", "run the full verification checklist");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2; --help exits 0
  }

  try {
    if (app.got_subcommand(cmd_gc)) {
      write_output(to_json(gc_polytope(parse_weight(group, n, lambda_csv))), out_path);
    } else if (app.got_subcommand(cmd_gcp)) {
      write_output(to_json(gc_prime_polytope(parse_weight("SP", n, lambda_csv))), out_path);
    } else if (app.got_subcommand(cmd_newton)) {
      NewtonVariant v;
      if (variant == "plain")
        v = NewtonVariant::Plain;
      else if (variant == "prime")
        v = NewtonVariant::Prime;
      else
        throw DocumentError("--variant must be plain or prime");
      write_output(to_json(newton_polytope(parse_weight_list(n, weights_list), v)), out_path);
    } else if (app.got_subcommand(cmd_count)) {
      HPolytope p = polytope_from_json(load_json_file(in_path), in_path);
      LatticePointSet pts = lattice_points(p);
      if (!points_path.empty()) write_output(to_json(pts), points_path);
      print_scalar(Int(static_cast<long>(pts.size())), out_path);
    } else if (app.got_subcommand(cmd_vertices)) {
      HPolytope p = polytope_from_json(load_json_file(in_path), in_path);
      write_output(to_json(vertices(p)), out_path);
    } else if (app.got_subcommand(cmd_mink)) {
      HPolytope pa = polytope_from_json(load_json_file(a_path), a_path);
      HPolytope pb = polytope_from_json(load_json_file(b_path), b_path);
      write_output(to_json(minkowski_sum(pa, pb)), out_path);
    } else if (app.got_subcommand(cmd_weyl)) {
      print_scalar(weyl_dim(parse_weight(group, n, lambda_csv)), out_path);
    } else if (app.got_subcommand(cmd_cv)) {
      write_output(to_json(change_of_vars_matrices(n)), out_path);
    } else if (app.got_subcommand(cmd_uni)) {
      write_output(unipotent_to_json(generic_unipotent(n)), out_path);
    } else if (app.got_subcommand(cmd_rep)) {
      write_output(to_json(rep_space(parse_weight("SP", n, lambda_csv))), out_path);
    } else if (app.got_subcommand(cmd_init)) {
      RepSpace rs = rep_space(parse_weight("SP", n, lambda_csv));
      write_output(to_json(initial_exponent_set(rs, TermOrder::standard(rs.universe))), out_path);
    } else if (app.got_subcommand(cmd_ok)) {
      DominantWeight w = parse_weight("SP", n, lambda_csv);
      RepSpace rs = rep_space(w);
      auto got = initial_exponent_set(rs, TermOrder::standard(rs.universe));
      auto want = lattice_points(gc_prime_polytope(w));
      Json out;
      out["match"] = (got == want);
      out["count"] = got.size();
      write_output(out, out_path);
    } else if (app.got_subcommand(cmd_hilb)) {
      print_scalar(hilbert_function(load_spec(spec_path), karg), out_path);
    } else if (app.got_subcommand(cmd_embed)) {
      write_output(to_json(psi_embed(load_spec(spec_path), check_level)), out_path);
    } else if (app.got_subcommand(cmd_sub)) {
      EmbeddedAlgebra e = psi_embed(load_spec(spec_path));
      LaurentPolynomial f = parse_polynomial(e.universe, read_poly_arg(poly_text, poly_file));
      SubductionChoice choice;
      if (mode == "lex")
        choice = SubductionChoice::LowestLex;
      else if (mode == "random")
        choice = SubductionChoice::Random;
      else
        throw DocumentError("--mode must be lex or random");
      const long budget = (max_steps > 0) ? max_steps : default_subduction_budget(f, e, level_bound);
      write_output(to_json(subduct(f, e, budget, choice, seed), e), out_path);
    } else if (app.got_subcommand(cmd_verify)) {
      EmbeddedAlgebra e = psi_embed(load_spec(spec_path));
      SubductionChoice choice;
      if (mode == "lex")
        choice = SubductionChoice::LowestLex;
      else if (mode == "random")
        choice = SubductionChoice::Random;
      else
        throw DocumentError("--mode must be lex or random");
      write_output(to_json(verify_sagbi(e, level_bound, trials, seed, choice)), out_path);
    } else if (app.got_subcommand(cmd_degen)) {
      EmbeddedAlgebra e = psi_embed(load_spec(spec_path));
      SagbiReport report = verify_sagbi(e, level_bound, trials, seed);
      write_output(to_json(degenerate(e, level_bound, deg_bound, report)), out_path);
    } else if (app.got_subcommand(cmd_family)) {
      EmbeddedAlgebra e = psi_embed(load_spec(spec_path));
      LaurentPolynomial f = parse_polynomial(e.universe, read_poly_arg(poly_text, poly_file));
      const Rational tau = rational_from_string(tau_text);
      LaurentPolynomial member = flat_family_member(f, e, tau, level_bound);
      Json out;
      out["tau"] = to_json(tau);
      Json wv = Json::array();
      for (auto v : order_weight_vector(e, level_bound, {initial_term(f, *e.order).second}))
        wv.push_back(v);
      out["weights"] = std::move(wv);
      out["poly"] = to_string(member);
      write_output(out, out_path);
    } else if (app.got_subcommand(cmd_suite)) {
      return run_acceptance(std::cout) ? 0 : 1;
    }
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
