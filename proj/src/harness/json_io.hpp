#pragma once

#include <json.hpp>

#include "mutation/gsp.hpp"
#include "reps/decorated_rep.hpp"
#include "seed/exchange_matrix.hpp"
#include "seed/fg.hpp"
#include "seed/int_polynomial.hpp"
#include "seed/sfrational.hpp"
#include "species/species.hpp"

namespace gsp::harness {

using nlohmann::json;

// Malformed input throws gsp::Error("BadInput").

json to_json(const seed::ExchangeMatrix& m);
seed::ExchangeMatrix matrix_from_json(const json& j);

// Integer coefficients become JSON numbers when they fit in 64 bits, strings otherwise.
json to_json(const seed::IntPolynomial& p);
seed::IntPolynomial polynomial_from_json(const json& j, std::size_t nvars);

json to_json(const seed::SFRational& r);
json to_json(const seed::FGPair& p);

// {"labels": [...], "groups": [[factors], ...], "bimodules": [{"from", "to", "mult"}]}, labels in bimodules.
json to_json(const species::GroupSpecies& s);
species::GroupSpecies species_from_json(const json& j);

// {"N", "exact_through" (null when exact), "terms": [{"coeff": "p/q", "cycle": [arrow ids]}]}
json to_json(const potential::Quiver& q, const potential::Potential& p);
potential::Potential potential_from_json(const potential::Quiver& q, const json& j);

json to_json(const mutation::GSP& g);
// Accepts {"species", "potential"?}, {"matrix", "d"?} or a bare species object.
mutation::GSP gsp_from_json(const json& j, int N = 6);

// {"dims": {"i:rho": n}, "arrows": [{"id", "matrix": [["p/q"]]}], "decoration": {"i:rho": n}}
// Zero dimensions and empty matrices are left out; missing entries read as zero.
json to_json(const reps::DecoratedRep& r);
reps::DecoratedRep rep_from_json(const mutation::GSP& g, const json& j);

json to_json(const mutation::MutationReport& r);

json error_json(const std::string& code, const std::string& message, const json& witness);

}  // namespace gsp::harness
