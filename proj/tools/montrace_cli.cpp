// Command-line front end: canonical traces, Teter-type decisions in the
// multigraded/graded/local senses, poset exports, the closed-form families,
// the conjecture probe and the differential selfcheck.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "montrace/json_io.hpp"
#include "montrace/selfcheck.hpp"

using namespace montrace;

namespace {

struct Common {
  std::string format = "json";
  std::string out_path;
};

void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(c.out_path);
    if (!out) throw std::runtime_error("cannot write " + c.out_path);
    out << text << "\n";
  }
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2)); }

std::string slurp(const std::string& spec) {
  std::ifstream in(spec);
  if (in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return spec;  // treat the argument itself as inline input
}

NamedIdeal load_ideal(const std::string& spec, const std::string& vars_csv) {
  std::string text = slurp(spec);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return ideal_from_json(Json::parse(text));
  std::vector<std::string> vars;
  std::stringstream ss(vars_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) vars.push_back(item);
  if (vars.empty())
    throw ParseError("expression input needs --vars (e.g. --vars x,y)");
  return parse_ideal(text, vars);
}

SimplicialComplex load_complex(const std::string& spec) {
  return complex_from_json(Json::parse(slurp(spec)));
}

FinitePoset load_poset(const std::string& spec) {
  return finite_poset_from_json(Json::parse(slurp(spec)));
}

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

Json vertex_lists_json(const std::vector<std::vector<int>>& lists) {
  Json arr = Json::array();
  for (const auto& l : lists) arr.push_back(l);
  return arr;
}

std::string trace_report_text(const TraceReport& rep,
                              const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << "trace = (" << to_string(rep.trace, vars) << ")\n";
  os << "gorenstein: " << (rep.gorenstein ? "yes" : "no") << "\n";
  os << "nearly gorenstein: " << (rep.nearly_gorenstein ? "yes" : "no") << "\n";
  os << "teter type (multigraded): " << verdict_name(rep.teter_type);
  if (rep.witness_degree)
    os << ", witness degree " << to_string(*rep.witness_degree, vars);
  os << "\n";
  if (!rep.gorenstein) {
    if (rep.teter_number_computed) {
      os << "teter number (multigraded): " << *rep.teter_number << " via";
      for (const auto& w : rep.teter_witnesses) os << " " << to_string(w, vars);
    } else {
      os << "teter number (multigraded): not computed (cover cap exceeded)";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact canonical-trace computations for 0-dimensional monomial "
               "K-algebras"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "output format: json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("-o,--out", common.out_path, "write output to a file");

  std::string ideal_arg, vars_csv, gens_arg, i_arg, j_arg, highlight_arg;
  std::string sense = "multi";
  std::uint64_t prime = 2147483647ull, seed = 0;
  int trials = 8;
  bool want_dot = false;

  auto* trace_cmd = app.add_subcommand("trace", "canonical trace report");
  trace_cmd->add_option("ideal", ideal_arg, "ideal file, JSON or expression")
      ->required();
  trace_cmd->add_option("--vars", vars_csv, "variable names for expressions");

  auto* type_cmd = app.add_subcommand("teter-type", "Teter-type verdict");
  type_cmd->add_option("ideal", ideal_arg)->required();
  type_cmd->add_option("--vars", vars_csv);
  type_cmd->add_option("--sense", sense, "multi, graded or local")
      ->check(CLI::IsMember({"multi", "graded", "local"}));
  type_cmd->add_option("--prime", prime);
  type_cmd->add_option("--trials", trials);
  type_cmd->add_option("--seed", seed);

  auto* number_cmd = app.add_subcommand("teter-number", "multigraded Teter number");
  number_cmd->add_option("ideal", ideal_arg)->required();
  number_cmd->add_option("--vars", vars_csv);

  auto* poset_cmd = app.add_subcommand("poset", "divisor poset export");
  poset_cmd->add_option("ideal", ideal_arg)->required();
  poset_cmd->add_option("--vars", vars_csv);
  poset_cmd->add_flag("--dot", want_dot, "emit a DOT digraph");
  poset_cmd->add_option("--highlight", highlight_arg,
                        "poset ideal generators to highlight (monomial list)");

  auto* sym_cmd = app.add_subcommand("symmetric", "symmetric poset ideal test");
  sym_cmd->add_option("ideal", ideal_arg)->required();
  sym_cmd->add_option("--vars", vars_csv);
  sym_cmd->add_option("--gens", gens_arg, "generators of the poset ideal")
      ->required();

  auto* comp_cmd = app.add_subcommand("companion", "companion test for two ideals");
  comp_cmd->add_option("ideal", ideal_arg)->required();
  comp_cmd->add_option("--vars", vars_csv);
  comp_cmd->add_option("--i", i_arg, "generators of the first poset ideal")
      ->required();
  comp_cmd->add_option("--j", j_arg, "generators of the second poset ideal")
      ->required();

  auto* family_cmd = app.add_subcommand("family", "closed-form family formulas");
  family_cmd->require_subcommand(1);
  std::string a_csv, b_csv, w0_csv, complex_arg, poset_arg;
  int fam_n = 0, fam_k = 0, fam_a = 0, fam_b = 0;
  bool verify = false;

  auto* aci_cmd = family_cmd->add_subcommand("aci", "almost complete intersection");
  aci_cmd->add_option("--a", a_csv, "pure-power exponents")->required();
  aci_cmd->add_option("--b", b_csv, "exponents of the extra generator")->required();
  aci_cmd->add_flag("--verify", verify);

  auto* pq_cmd = family_cmd->add_subcommand("power-quotient",
                                            "defining ideal of R/(0:n^k)");
  pq_cmd->add_option("--a", a_csv)->required();
  pq_cmd->add_option("--k", fam_k)->required();

  auto* chopin_cmd = family_cmd->add_subcommand("chopin", "trace of R/(0:n^k)");
  chopin_cmd->add_option("--a", a_csv)->required();
  chopin_cmd->add_option("--k", fam_k)->required();
  chopin_cmd->add_flag("--verify", verify);

  auto* mozart_cmd = family_cmd->add_subcommand("mozart", "squarefree case");
  mozart_cmd->add_option("--n", fam_n)->required();
  mozart_cmd->add_option("--k", fam_k)->required();
  mozart_cmd->add_flag("--verify", verify);

  auto* ci2_cmd = family_cmd->add_subcommand(
      "ci2", "codimension-2 monomial complete intersection quotient");
  ci2_cmd->add_option("--a", fam_a)->required();
  ci2_cmd->add_option("--b", fam_b)->required();
  ci2_cmd->add_option("--k", fam_k)->required();
  ci2_cmd->add_flag("--verify", verify);

  auto* beet_cmd = family_cmd->add_subcommand(
      "beethoven", "squares plus one squarefree monomial");
  beet_cmd->add_option("--n", fam_n)->required();
  beet_cmd->add_option("--w0", w0_csv, "vertices of the squarefree monomial")
      ->required();
  beet_cmd->add_flag("--verify", verify);

  auto* flag_cmd = family_cmd->add_subcommand("flag", "free-face trace");
  flag_cmd->add_option("--complex", complex_arg, "complex JSON or file")
      ->required();
  flag_cmd->add_flag("--verify", verify);

  auto* path_cmd = family_cmd->add_subcommand("path", "path independence complex");
  path_cmd->add_option("--n", fam_n)->required();
  path_cmd->add_flag("--verify", verify);

  auto* cycle_cmd = family_cmd->add_subcommand("cycle", "cycle independence complex");
  cycle_cmd->add_option("--n", fam_n)->required();
  cycle_cmd->add_flag("--verify", verify);

  auto* lattice_cmd =
      family_cmd->add_subcommand("lattice", "distributive lattice order complex");
  lattice_cmd->add_option("--poset", poset_arg, "poset JSON or file")->required();
  lattice_cmd->add_flag("--verify", verify);

  auto* probe_cmd = app.add_subcommand("probe-conjecture",
                                       "evidence probe, never an assertion");
  probe_cmd->add_option("--a", a_csv)->required();
  probe_cmd->add_option("--k", fam_k)->required();

  auto* self_cmd = app.add_subcommand("selfcheck", "differential oracle battery");
  SelfcheckOptions sopts;
  self_cmd->add_option("--samples", sopts.samples);
  self_cmd->add_option("--max-vars", sopts.max_vars);
  self_cmd->add_option("--max-exp", sopts.max_exp);
  self_cmd->add_option("--seed", sopts.seed);
  self_cmd->add_option("--prime", sopts.prime);

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
    sc->fallthrough();
    for (CLI::App* inner : sc->get_subcommands([](const CLI::App*) { return true; }))
      inner->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(trace_cmd)) {
      NamedIdeal named = load_ideal(ideal_arg, vars_csv);
      TraceReport rep = trace_multigraded(build_divisor_poset(named.ideal));
      if (common.format == "text")
        emit(common, trace_report_text(rep, named.vars));
      else
        emit_json(common, trace_report_to_json(rep));
    } else if (app.got_subcommand(type_cmd)) {
      NamedIdeal named = load_ideal(ideal_arg, vars_csv);
      DivisorPoset P = build_divisor_poset(named.ideal);
      if (sense == "multi") {
        auto [verdict, witness] = teter_type_multigraded(P);
        Json j;
        j["sense"] = "multigraded";
        j["verdict"] = verdict_name(verdict);
        j["witness_degree"] =
            witness ? monomial_to_json(*witness) : Json(nullptr);
        if (common.format == "text")
          emit(common, "multigraded: " + j["verdict"].get<std::string>() +
                           (witness ? " at degree " + to_string(*witness, named.vars)
                                    : std::string{}));
        else
          emit_json(common, j);
      } else {
        RandomizedReport rep =
            teter_type_randomized(P, sense == "graded", prime, trials, seed);
        if (common.format == "text")
          emit(common, rep.sense + ": " + verdict_name(rep.verdict) +
                           (rep.witness_total_degree
                                ? " at total degree " +
                                      std::to_string(*rep.witness_total_degree)
                                : std::string{}));
        else
          emit_json(common, randomized_report_to_json(rep));
      }
    } else if (app.got_subcommand(number_cmd)) {
      NamedIdeal named = load_ideal(ideal_arg, vars_csv);
      TeterNumberResult r =
          teter_number_multigraded(build_divisor_poset(named.ideal));
      Json j;
      j["computed"] = r.computed;
      j["teter_number_multigraded"] = r.computed ? Json(r.number) : Json(nullptr);
      j["witness_degrees"] = monomials_to_json(r.witnesses);
      if (common.format == "text")
        emit(common, r.computed ? "teter number " + std::to_string(r.number)
                                : "not computed (cover cap exceeded)");
      else
        emit_json(common, j);
    } else if (app.got_subcommand(poset_cmd)) {
      NamedIdeal named = load_ideal(ideal_arg, vars_csv);
      DivisorPoset P = build_divisor_poset(named.ideal);
      if (want_dot || common.format == "dot") {
        if (highlight_arg.empty()) {
          emit(common, to_dot(P, nullptr, named.vars));
        } else {
          PosetIdealView V =
              ideal_view(P, parse_monomial_list(highlight_arg, named.vars));
          emit(common, to_dot(P, &V, named.vars));
        }
      } else {
        emit_json(common, poset_to_json(P));
      }
    } else if (app.got_subcommand(sym_cmd)) {
      NamedIdeal named = load_ideal(ideal_arg, vars_csv);
      DivisorPoset P = build_divisor_poset(named.ideal);
      PosetIdealView V = ideal_view(P, parse_monomial_list(gens_arg, named.vars));
      auto m = is_symmetric(P, V);
      Json j;
      j["symmetric"] = m.has_value();
      j["degree"] = m ? monomial_to_json(*m) : Json(nullptr);
      std::vector<Monomial> gens, soc;
      for (int id : V.gen) gens.push_back(P.mono(id));
      for (int id : V.soc) soc.push_back(P.mono(id));
      j["gen"] = monomials_to_json(gens);
      j["soc"] = monomials_to_json(soc);
      if (common.format == "text")
        emit(common, m ? "symmetric with degree " + to_string(*m, named.vars)
                       : "not symmetric");
      else
        emit_json(common, j);
    } else if (app.got_subcommand(comp_cmd)) {
      NamedIdeal named = load_ideal(ideal_arg, vars_csv);
      DivisorPoset P = build_divisor_poset(named.ideal);
      PosetIdealView V1 = ideal_view(P, parse_monomial_list(i_arg, named.vars));
      PosetIdealView V2 = ideal_view(P, parse_monomial_list(j_arg, named.vars));
      auto m = are_companions(P, V1, V2);
      Json j;
      j["companions"] = m.has_value();
      j["degree"] = m ? monomial_to_json(*m) : Json(nullptr);
      if (common.format == "text")
        emit(common, m ? "companions with degree " + to_string(*m, named.vars)
                       : "not companions");
      else
        emit_json(common, j);
    } else if (app.got_subcommand(family_cmd)) {
      Json j;
      if (family_cmd->got_subcommand(aci_cmd)) {
        AciSpec spec = make_aci_spec(parse_csv_ints(a_csv), parse_csv_ints(b_csv));
        auto [trace, teter] = aci_trace_and_type(spec);
        j["family"] = "aci";
        j["trace_generators"] = monomials_to_json(trace.gens);
        j["teter_type"] = teter;
        j["verified"] = verify ? Json(verify_aci(spec)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(pq_cmd)) {
        PowerQuotientSpec spec =
            make_power_quotient_spec(parse_csv_ints(a_csv), fam_k);
        MonomialIdeal I = power_quotient_ideal(spec);
        j["family"] = "power-quotient";
        j["ideal"] = ideal_to_json(I, default_var_names(I.nvars));
      } else if (family_cmd->got_subcommand(chopin_cmd)) {
        PowerQuotientSpec spec =
            make_power_quotient_spec(parse_csv_ints(a_csv), fam_k);
        j["family"] = "chopin";
        j["trace_generators"] = monomials_to_json(chopin_trace(spec));
        j["teter_type"] = true;
        j["verified"] = verify ? Json(verify_chopin(spec)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(mozart_cmd)) {
        auto [gens, teter] = mozart(fam_n, fam_k);
        j["family"] = "mozart";
        j["trace_generators"] = monomials_to_json(gens);
        j["teter_type"] = teter;
        j["verified"] = verify ? Json(verify_mozart(fam_n, fam_k)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(ci2_cmd)) {
        int e = ci2_trace(fam_a, fam_b, fam_k);
        j["family"] = "ci2";
        j["trace_power_of_max_ideal"] = e;
        j["teter_type"] = true;
        j["verified"] =
            verify ? Json(verify_ci2(fam_a, fam_b, fam_k)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(beet_cmd)) {
        Monomial w0 = Monomial::unit(fam_n);
        for (int v : parse_csv_ints(w0_csv)) {
          if (v < 1 || v > fam_n)
            throw std::invalid_argument("w0 vertex out of range");
          w0.e[static_cast<std::size_t>(v - 1)] += 1;
        }
        std::vector<int> support = beethoven_trace(fam_n, w0);
        for (int& v : support) ++v;  // 1-based in the report
        j["family"] = "beethoven";
        j["trace_variables"] = support;
        j["teter_type"] = true;
        j["verified"] =
            verify ? Json(verify_beethoven(fam_n, w0)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(flag_cmd)) {
        SimplicialComplex D = load_complex(complex_arg);
        j["family"] = "flag";
        j["flag"] = is_flag(D);
        j["trace_generators"] = monomials_to_json(flag_trace_gens(D));
        j["verified"] = verify ? Json(verify_flag_trace(D)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(path_cmd)) {
        PathSequences s = path_sequences(fam_n);
        j["family"] = "path";
        j["permissible"] = vertex_lists_json(s.permissible);
        j["tau_permissible"] = vertex_lists_json(s.tau_permissible);
        j["verified"] = verify ? Json(verify_path_sequences(fam_n)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(cycle_cmd)) {
        CycleSequences s = cycle_sequences(fam_n);
        j["family"] = "cycle";
        j["socle_sets"] = vertex_lists_json(s.socle_sets);
        j["trace_gen_sets"] = vertex_lists_json(s.trace_gen_sets);
        j["verified"] = verify ? Json(verify_cycle_sequences(fam_n)) : Json(nullptr);
      } else if (family_cmd->got_subcommand(lattice_cmd)) {
        FinitePoset P0 = load_poset(poset_arg);
        DistributiveReport rep = distributive_trace_gens(P0);
        j["family"] = "lattice";
        j["lattice_elements"] = rep.lattice.labels;
        Json exts = Json::array();
        for (const auto& pi : rep.extensions) {
          Json one = Json::array();
          for (int v : pi) one.push_back(P0.labels[static_cast<std::size_t>(v)]);
          exts.push_back(std::move(one));
        }
        j["linear_extensions"] = std::move(exts);
        j["trace_generators"] = monomials_to_json(rep.trace_gens);
        Json intervals = Json::array();
        for (const auto& [sharp, full] : rep.intervals) {
          Json one;
          one["gen"] = monomial_to_json(sharp);
          one["soc"] = monomial_to_json(full);
          intervals.push_back(std::move(one));
        }
        j["intervals"] = std::move(intervals);
        j["verified"] = verify ? Json(verify_distributive(P0)) : Json(nullptr);
      }
      emit_json(common, j);
    } else if (app.got_subcommand(probe_cmd)) {
      ConjectureProbe probe =
          conjecture_probe(make_power_quotient_spec(parse_csv_ints(a_csv), fam_k));
      Json j;
      j["a"] = probe.spec.a;
      j["k"] = probe.spec.k;
      j["gen_counts"] = probe.gen_counts;
      j["strictly_increasing"] = probe.strictly_increasing;
      j["engine_trace"] = monomials_to_json(probe.engine_trace.gens);
      j["ik_generators"] = monomials_to_json(probe.ik_ideal.gens);
      j["agree"] = probe.agree;
      emit_json(common, j);
    } else if (app.got_subcommand(self_cmd)) {
      SelfcheckResult r = run_selfcheck(sopts);
      Json j;
      j["samples"] = r.samples;
      j["small_poset_instances"] = r.small_poset_instances;
      j["companion_pairs"] = r.companion_pairs;
      j["failures"] = r.failures;
      j["ok"] = r.ok();
      emit_json(common, j);
      return r.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "domain";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
