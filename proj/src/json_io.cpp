#include "horotoric/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace horotoric {

const Json& require_field(const Json& j, const std::string& field, const std::string& where) {
  if (!j.is_object() || !j.contains(field))
    throw DocumentError(where + ": missing field '" + field + "'");
  return j.at(field);
}

Json to_json(const Rational& q) {
  if (is_integer(q) && numer(q) >= std::numeric_limits<std::int64_t>::min() &&
      numer(q) <= std::numeric_limits<std::int64_t>::max())
    return Json(to_int64(numer(q)));
  return Json(to_string(q));
}

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) return rational_from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    throw DocumentError(where + ": " + e.what());
  }
  throw DocumentError(where + ": expected an integer or a 'p/q' string");
}

Json to_json(const HPolytope& p) {
  Json out;
  out["dim"] = p.dim();
  Json rows = Json::array();
  for (int i = 0; i < p.row_count(); ++i) {
    Json row;
    Json coeffs = Json::array();
    for (int jx = 0; jx < p.dim(); ++jx) coeffs.push_back(to_json(p.lhs()(i, jx)));
    row["a"] = std::move(coeffs);
    row["b"] = to_json(p.rhs()(i));
    rows.push_back(std::move(row));
  }
  out["inequalities"] = std::move(rows);
  return out;
}

HPolytope polytope_from_json(const Json& j, const std::string& where) {
  const int dim = require_field(j, "dim", where).get<int>();
  if (dim < 0) throw DocumentError(where + ": field 'dim' must be nonnegative");
  const Json& rows = require_field(j, "inequalities", where);
  if (!rows.is_array()) throw DocumentError(where + ": field 'inequalities' must be an array");
  HPolytope p(dim);
  int idx = 0;
  for (const auto& row : rows) {
    const std::string ctx = where + ": inequalities[" + std::to_string(idx) + "]";
    const Json& a = require_field(row, "a", ctx);
    if (!a.is_array() || static_cast<int>(a.size()) != dim)
      throw DocumentError(ctx + ": field 'a' must be an array of length dim");
    RowVectorXq lhs(dim);
    for (int k = 0; k < dim; ++k)
      lhs(k) = rational_from_json(a.at(static_cast<size_t>(k)), ctx + ".a");
    p.add_inequality(lhs, rational_from_json(require_field(row, "b", ctx), ctx + ".b"));
    ++idx;
  }
  return p;
}

Json to_json(const LatticePointSet& pts) {
  Json out = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (auto v : p) row.push_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const std::vector<VectorXq>& vectors) {
  Json out = Json::array();
  for (const auto& v : vectors) {
    Json row = Json::array();
    for (int i = 0; i < v.rows(); ++i) row.push_back(to_json(v(i)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const DominantWeight& w) {
  Json out;
  out["group"] = (w.group == Group::SP) ? "SP" : "GL";
  out["n"] = w.rank();
  Json lam = Json::array();
  for (const auto& c : w.lambda) lam.push_back(to_json(c));
  out["lambda"] = std::move(lam);
  return out;
}

DominantWeight weight_from_json(const Json& j, const std::string& where) {
  const std::string g = require_field(j, "group", where).get<std::string>();
  Group group;
  if (g == "SP")
    group = Group::SP;
  else if (g == "GL")
    group = Group::GL;
  else
    throw DocumentError(where + ": field 'group' must be \"SP\" or \"GL\"");
  const Json& lam = require_field(j, "lambda", where);
  if (!lam.is_array()) throw DocumentError(where + ": field 'lambda' must be an array");
  std::vector<Rational> l;
  for (const auto& c : lam) l.push_back(rational_from_json(c, where + ".lambda"));
  try {
    return DominantWeight(group, std::move(l));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

namespace {

Json matrix_to_json(const MatrixXq& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json to_json(const ChangeOfVariables& cv) {
  Json out;
  out["n"] = cv.n;
  out["A"] = matrix_to_json(cv.a);
  out["A_inv"] = matrix_to_json(cv.a_inv);
  out["B"] = matrix_to_json(cv.b);
  out["p_order"] = cv.p_labels;
  out["q_order"] = cv.q_labels;
  return out;
}

Json to_json(const RepSpace& s) {
  Json out;
  out["group"] = "SP";
  out["n"] = s.weight.rank();
  Json lam = Json::array();
  for (const auto& c : s.weight.lambda) lam.push_back(to_json(c));
  out["lambda"] = std::move(lam);
  out["dim"] = s.dim();
  Json basis = Json::array();
  for (const auto& f : s.basis) basis.push_back(to_string(f));
  out["basis"] = std::move(basis);
  return out;
}

Json to_json(const HoroVarietySpec& spec) {
  Json out;
  out["n"] = spec.n;
  Json ws = Json::array();
  for (const auto& w : spec.weights) {
    Json lam = Json::array();
    for (const auto& c : w.lambda) lam.push_back(to_json(c));
    ws.push_back(std::move(lam));
  }
  out["weights"] = std::move(ws);
  Json basis = Json::array();
  for (int j = 0; j < spec.lattice_basis.cols(); ++j) {
    Json col = Json::array();
    for (int i = 0; i < spec.lattice_basis.rows(); ++i) col.push_back(to_json(spec.lattice_basis(i, j)));
    basis.push_back(std::move(col));
  }
  out["lattice"] = std::move(basis);
  Json verts = Json::array();
  for (const auto& v : spec.moment_vertices) {
    Json row = Json::array();
    for (int i = 0; i < v.rows(); ++i) row.push_back(to_json(v(i)));
    verts.push_back(std::move(row));
  }
  out["moment_vertices"] = std::move(verts);
  return out;
}

HoroVarietySpec spec_from_json(const Json& j, const std::string& where) {
  const int n = require_field(j, "n", where).get<int>();
  const Json& ws = require_field(j, "weights", where);
  if (!ws.is_array() || ws.empty())
    throw DocumentError(where + ": field 'weights' must be a nonempty array");
  std::vector<DominantWeight> weights;
  int idx = 0;
  for (const auto& lam : ws) {
    const std::string ctx = where + ".weights[" + std::to_string(idx++) + "]";
    if (!lam.is_array()) throw DocumentError(ctx + ": expected an array of components");
    std::vector<Rational> l;
    for (const auto& c : lam) l.push_back(rational_from_json(c, ctx));
    try {
      weights.push_back(DominantWeight::sp(std::move(l)));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(ctx + ": " + e.what());
    }
  }
  try {
    if (!j.contains("lattice")) {
      if (j.contains("moment_vertices"))
        throw DocumentError(where +
                            ": explicit 'moment_vertices' require an explicit 'lattice' field");
      return HoroVarietySpec::from_weights(n, std::move(weights));
    }
    const Json& basis_j = j.at("lattice");
    if (!basis_j.is_array()) throw DocumentError(where + ": field 'lattice' must be an array");
    const int r = static_cast<int>(basis_j.size());
    MatrixXq basis(n, r);
    for (int c = 0; c < r; ++c) {
      const Json& col = basis_j.at(static_cast<size_t>(c));
      if (!col.is_array() || static_cast<int>(col.size()) != n)
        throw DocumentError(where + ".lattice: each basis vector must have length n");
      for (int i = 0; i < n; ++i)
        basis(i, c) = rational_from_json(col.at(static_cast<size_t>(i)), where + ".lattice");
    }
    std::vector<VectorXq> vertices;
    if (j.contains("moment_vertices")) {
      for (const auto& row : j.at("moment_vertices")) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
          throw DocumentError(where + ".moment_vertices: each vertex must have length n");
        VectorXq v(n);
        for (int i = 0; i < n; ++i)
          v(i) = rational_from_json(row.at(static_cast<size_t>(i)), where + ".moment_vertices");
        vertices.push_back(std::move(v));
      }
    }
    return HoroVarietySpec::make(n, std::move(weights), std::move(basis), std::move(vertices));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

Json to_json(const EmbeddedAlgebra& e) {
  Json out;
  out["n"] = e.spec.n;
  out["r"] = e.spec.r();
  out["spec"] = to_json(e.spec);
  Json gens = Json::array();
  for (size_t i = 0; i < e.generators.size(); ++i) {
    Json g;
    g["weight_index"] = e.generator_weight[i];
    g["poly"] = to_string(e.generators[i]);
    gens.push_back(std::move(g));
  }
  out["generators"] = std::move(gens);
  out["check_level"] = e.check_level;
  return out;
}

Json to_json(const SagbiReport& r) {
  Json out;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json lj;
    lj["k"] = l.k;
    lj["dim"] = l.dim.str();
    lj["lattice_count"] = l.lattice_count.str();
    lj["match"] = l.match;
    levels.push_back(std::move(lj));
  }
  out["levels"] = std::move(levels);
  out["generation_certified"] = r.generation_certified;
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    Json tj;
    tj["seed"] = t.seed;
    tj["steps"] = t.steps;
    tj["remainder_zero"] = t.remainder_zero;
    trials.push_back(std::move(tj));
  }
  out["subduction_trials"] = std::move(trials);
  return out;
}

Json to_json(const ToricDegenerationData& d) {
  Json out;
  out["generators"] = to_json(d.generators);
  Json bs = Json::array();
  for (const auto& b : d.binomials) {
    Json bj;
    Json plus = Json::array(), minus = Json::array();
    for (auto v : b.plus) plus.push_back(v);
    for (auto v : b.minus) minus.push_back(v);
    bj["plus"] = std::move(plus);
    bj["minus"] = std::move(minus);
    bs.push_back(std::move(bj));
  }
  out["binomials"] = std::move(bs);
  out["certified_level"] = d.certified_level;
  return out;
}

Json to_json(const SubductionTrace& t, const EmbeddedAlgebra& e) {
  (void)e;
  Json out;
  switch (t.status) {
    case SubductionStatus::ZeroRemainder:
      out["status"] = "zero_remainder";
      break;
    case SubductionStatus::Stuck:
      out["status"] = "nonzero_remainder";
      break;
    case SubductionStatus::BudgetExhausted:
      out["status"] = "budget_exhausted";
      break;
  }
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json sj;
    Json d = Json::array();
    for (auto v : s.powers) d.push_back(v);
    sj["d"] = std::move(d);
    sj["coeff"] = to_string(s.coeff);
    sj["remainder"] = to_string(s.remainder);
    steps.push_back(std::move(sj));
  }
  out["steps"] = std::move(steps);
  out["step_count"] = t.steps.size();
  out["remainder"] = to_string(t.remainder);
  out["strictly_decreasing"] = t.strictly_decreasing;
  return out;
}

Json unipotent_to_json(const SymbolicUnipotentMatrix& u) {
  Json out;
  out["n"] = u.n;
  Json frees = Json::array();
  for (const auto& [i, j] : u.m.universe->x_pairs()) {
    std::ostringstream os;
    os << "x[" << i << "," << j << "]";
    frees.push_back(os.str());
  }
  out["free"] = std::move(frees);
  Json rows = Json::array();
  for (int i = 1; i <= 2 * u.n; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= 2 * u.n; ++j) row.push_back(to_string(u.m.at(i, j)));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  PolyMatrix inv = symbolic_inverse(u);
  Json irows = Json::array();
  for (int i = 1; i <= 2 * u.n; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= 2 * u.n; ++j) row.push_back(to_string(inv.at(i, j)));
    irows.push_back(std::move(row));
  }
  out["inverse"] = std::move(irows);
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(path + ": " + e.what());
  }
}

void write_output(const Json& j, const std::string& path_or_empty) {
  const std::string text = j.dump(2);
  if (path_or_empty.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path_or_empty);
  if (!out) throw DocumentError(path_or_empty + ": cannot open for writing");
  out << text << "\n";
}

}  // namespace horotoric
