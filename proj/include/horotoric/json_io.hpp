#pragma once

#include <json.hpp>

#include "horotoric/sagbi.hpp"

namespace horotoric {

using Json = nlohmann::ordered_json;

/// Raised for malformed input documents; the CLI maps it to a usage error
/// (exit code 2) and reports the offending path and field.
struct DocumentError : std::runtime_error {
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

/// Field access that names the document and field on failure.
const Json& require_field(const Json& j, const std::string& field, const std::string& where);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

Json to_json(const HPolytope& p);
HPolytope polytope_from_json(const Json& j, const std::string& where);

Json to_json(const LatticePointSet& pts);
Json to_json(const std::vector<VectorXq>& vectors);

Json to_json(const DominantWeight& w);
DominantWeight weight_from_json(const Json& j, const std::string& where);

Json to_json(const ChangeOfVariables& cv);

Json to_json(const RepSpace& s);

Json to_json(const HoroVarietySpec& spec);
HoroVarietySpec spec_from_json(const Json& j, const std::string& where);

Json to_json(const EmbeddedAlgebra& e);

Json to_json(const SagbiReport& r);

Json to_json(const ToricDegenerationData& d);

Json to_json(const SubductionTrace& t, const EmbeddedAlgebra& e);

Json unipotent_to_json(const SymbolicUnipotentMatrix& u);

/// Reads and parses a JSON file; parse failures carry the file name.
Json load_json_file(const std::string& path);
void write_output(const Json& j, const std::string& path_or_empty);

}  // namespace horotoric
