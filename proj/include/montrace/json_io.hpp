#pragma once

#include <string>

#include "json.hpp"
#include "montrace/families.hpp"
#include "montrace/hom.hpp"
#include "montrace/oracle.hpp"
#include "montrace/parse.hpp"
#include "montrace/poset.hpp"
#include "montrace/simplicial.hpp"

namespace montrace {

using Json = nlohmann::ordered_json;

/// {"vars": ["x","y"], "generators": [[3,0],[0,3],[1,1]]}
Json ideal_to_json(const MonomialIdeal& I, const std::vector<std::string>& vars);
NamedIdeal ideal_from_json(const Json& j);

/// {"elements": [[0,0],[1,0],...], "upper_covers": [[...],...]}
Json poset_to_json(const DivisorPoset& P);

/// TraceReport with verdicts; degree_images lists the nonzero degrees only.
Json trace_report_to_json(const TraceReport& rep);

/// {"sense":"graded","verdict":"yes","witness_total_degree":3,...}
Json randomized_report_to_json(const RandomizedReport& rep);

/// {"n":4, "facets":[[1,2,3],[3,4]]}
Json complex_to_json(const SimplicialComplex& D);
SimplicialComplex complex_from_json(const Json& j);

/// {"elements":["a1",...], "relations":[["a1","a3"],...]}
Json finite_poset_to_json(const FinitePoset& P);
FinitePoset finite_poset_from_json(const Json& j);

Json monomial_to_json(const Monomial& m);
Json monomials_to_json(const std::vector<Monomial>& ms);

std::string verdict_name(TeterVerdict v);
std::string verdict_name(RandomVerdict v);

}  // namespace montrace
