#include "montrace/json_io.hpp"

#include <stdexcept>

namespace montrace {

Json monomial_to_json(const Monomial& m) { return Json(m.e); }

Json monomials_to_json(const std::vector<Monomial>& ms) {
  Json arr = Json::array();
  for (const Monomial& m : ms) arr.push_back(monomial_to_json(m));
  return arr;
}

Json ideal_to_json(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  Json j;
  j["vars"] = vars.empty() ? default_var_names(I.nvars) : vars;
  j["generators"] = monomials_to_json(I.gens);
  return j;
}

NamedIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("generators"))
    throw ParseError("ideal JSON needs \"vars\" and \"generators\"");
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  std::vector<std::vector<int>> rows =
      j.at("generators").get<std::vector<std::vector<int>>>();
  return parse_ideal_rows(vars, rows);
}

Json poset_to_json(const DivisorPoset& P) {
  Json j;
  j["elements"] = monomials_to_json(P.basis.monomials);
  Json covers = Json::array();
  for (int id = 0; id < P.size(); ++id)
    covers.push_back(P.upper_covers[static_cast<std::size_t>(id)]);
  j["upper_covers"] = covers;
  return j;
}

std::string verdict_name(TeterVerdict v) {
  switch (v) {
    case TeterVerdict::Yes: return "yes";
    case TeterVerdict::No: return "no";
    case TeterVerdict::Gorenstein: return "gorenstein";
  }
  return "?";
}

std::string verdict_name(RandomVerdict v) {
  switch (v) {
    case RandomVerdict::Yes: return "yes";
    case RandomVerdict::ProbablyNo: return "probably_no";
    case RandomVerdict::Gorenstein: return "gorenstein";
  }
  return "?";
}

Json trace_report_to_json(const TraceReport& rep) {
  Json j;
  j["trace_generators"] = monomials_to_json(rep.trace.gens);
  Json images = Json::array();
  for (const auto& [deg, img] : rep.degree_images) {
    Json entry;
    entry["degree"] = monomial_to_json(deg);
    entry["generators"] = monomials_to_json(img.gens);
    images.push_back(std::move(entry));
  }
  j["degree_images"] = std::move(images);
  j["gorenstein"] = rep.gorenstein;
  j["nearly_gorenstein"] = rep.nearly_gorenstein;
  j["teter_type_multigraded"] = verdict_name(rep.teter_type);
  j["witness_degree"] =
      rep.witness_degree ? monomial_to_json(*rep.witness_degree) : Json(nullptr);
  if (rep.gorenstein || !rep.teter_number_computed)
    j["teter_number_multigraded"] = nullptr;
  else
    j["teter_number_multigraded"] = *rep.teter_number;
  return j;
}

Json randomized_report_to_json(const RandomizedReport& rep) {
  Json j;
  j["sense"] = rep.sense;
  j["verdict"] = verdict_name(rep.verdict);
  j["witness_total_degree"] = rep.witness_total_degree
                                  ? Json(*rep.witness_total_degree)
                                  : Json(nullptr);
  j["prime"] = rep.prime;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  return j;
}

Json complex_to_json(const SimplicialComplex& D) {
  Json j;
  j["n"] = D.n;
  Json facets = Json::array();
  for (std::uint64_t f : D.facets) {
    Json verts = Json::array();
    for (int v = 1; v <= D.n; ++v)
      if (f & (1ull << (v - 1))) verts.push_back(v);
    facets.push_back(std::move(verts));
  }
  j["facets"] = std::move(facets);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
    throw ParseError("complex JSON needs \"n\" and \"facets\"");
  return complex_from_facets(j.at("n").get<int>(),
                             j.at("facets").get<std::vector<std::vector<int>>>());
}

Json finite_poset_to_json(const FinitePoset& P) {
  Json j;
  j["elements"] = P.labels;
  Json rels = Json::array();
  for (int i = 0; i < P.size(); ++i)
    for (int k = 0; k < P.size(); ++k)
      if (P.is_less(i, k))
        rels.push_back(Json::array({P.labels[static_cast<std::size_t>(i)],
                                    P.labels[static_cast<std::size_t>(k)]}));
  j["relations"] = std::move(rels);
  return j;
}

FinitePoset finite_poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("relations"))
    throw ParseError("poset JSON needs \"elements\" and \"relations\"");
  std::vector<std::string> labels =
      j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> relations;
  for (const Json& r : j.at("relations")) {
    if (!r.is_array() || r.size() != 2)
      throw ParseError("each relation must be a pair of element labels");
    relations.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
  }
  return poset_from_relations(std::move(labels), relations);
}

}  // namespace montrace
