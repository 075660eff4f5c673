#pragma once

// JSON encodings of the library's inputs and results. Numbers are written as
// strings; integer inputs may be given either way.

#include <optional>
#include <string>

#include <json.hpp>

#include "exotic/constructions.hpp"
#include "exotic/derivations.hpp"
#include "exotic/dualgraph.hpp"
#include "exotic/fpgroups.hpp"
#include "exotic/smithhom.hpp"

namespace exotic {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);  // "-" reads stdin
Json parse_json_text(const std::string& text);

long json_long(const Json& j);
Json num(long v);
Json num(const BigInt& v);
Json num(const Rational& v);
Json to_json(const Degree& d);
Json to_json(const ZMatrix& m);
ZMatrix zmatrix_from_json(const Json& j);

// {"vars": [...], "terms": [{"c": "3/2", "e": ["2","1"]}], "text": "..."}
Json to_json(const Polynomial& p);
// Object form, or a string in human syntax parsed over `vars` (inferred when null).
Polynomial polynomial_from_json(const Json& j, const VarSet* vars = nullptr);

Json to_json(const WeightFunction& w);
WeightFunction weight_from_json(const Json& j);

// "A0" (Russell cubic), "C<n>" (x,y,z,t for n <= 4, else x1..xn), or
// {"vars": [...], "relation": "...", "order": "grlex" | "lex" | {"weights": [...]}}.
Ring ring_from_json(const Json& j, std::uint64_t step_budget = kDefaultStepBudget);
Json to_json(const Ring& r);
// {"ring": ..., "images": {...}} or a bare images object over `ring`.
Derivation derivation_from_json(const Json& j, const std::optional<Ring>& ring, std::uint64_t step_budget);
Json to_json(const Derivation& d);
Json to_json(const NilpotencyCertificate& c, const VarSet& vars);

Json to_json(const Provenance& p);
Json to_json(const Hypersurface& h);
Json to_json(const VarietySystem& s);

Json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);
Json to_json(const AbelianGroup& g);

Json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const CyclicAction& g, const SimplicialComplex& k);
CyclicAction action_from_json(const Json& j, const SimplicialComplex& k);
Json to_json(const OrbitComplex& x, const SimplicialComplex& k);
Json to_json(const TransferReport& r);
Json to_json(const SmithSequencesReport& r);

}  // namespace exotic
