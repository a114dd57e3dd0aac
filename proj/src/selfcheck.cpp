#include "montrace/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include "montrace/hom.hpp"
#include "montrace/oracle.hpp"
#include "montrace/parse.hpp"

namespace montrace {

MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, int max_vars,
                                    int max_exp) {
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vars));
  // half the draws keep every variable alive, so larger posets stay frequent
  int min_exp = (max_exp >= 2 && rng() % 2 == 0) ? 2 : 1;
  std::vector<Monomial> gens;
  std::vector<int> pure(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pure[static_cast<std::size_t>(i)] =
        min_exp + static_cast<int>(
                      rng() % static_cast<std::uint64_t>(max_exp - min_exp + 1));
    gens.push_back(Monomial::var(n, i, pure[static_cast<std::size_t>(i)]));
  }
  int extra = static_cast<int>(rng() % 4);
  for (int k = 0; k < extra; ++k) {
    Monomial g = Monomial::unit(n);
    for (int i = 0; i < n; ++i)
      g.e[static_cast<std::size_t>(i)] = static_cast<int>(
          rng() % static_cast<std::uint64_t>(pure[static_cast<std::size_t>(i)]));
    if (!g.is_unit()) gens.push_back(std::move(g));
  }
  return make_ideal(n, std::move(gens));
}

namespace {

std::string describe(const MonomialIdeal& I) {
  return to_string(I, default_var_names(I.nvars));
}

// All nonempty downward closed subsets of P, by filtering the subset lattice.
// Used only on posets with at most 12 elements.
std::vector<std::vector<int>> all_poset_ideals(const DivisorPoset& P) {
  const int N = P.size();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 1; mask < (1ull << N); ++mask) {
    bool closed = true;
    for (int u = 0; closed && u < N; ++u) {
      if (!(mask & (1ull << u))) continue;
      for (int i = 0; i < P.nvars(); ++i) {
        int down = P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)];
        if (down >= 0 && !(mask & (1ull << down))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int u = 0; u < N; ++u)
      if (mask & (1ull << u)) members.push_back(u);
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

SelfcheckResult run_selfcheck(const SelfcheckOptions& opts) {
  SelfcheckResult result;
  std::mt19937_64 rng(opts.seed);
  auto fail = [&](const MonomialIdeal& I, const std::string& what) {
    std::ostringstream os;
    os << "sample " << result.samples << " [" << describe(I) << "]: " << what;
    result.failures.push_back(os.str());
  };

  for (int s = 0; s < opts.samples; ++s) {
    MonomialIdeal I = random_artinian_ideal(rng, opts.max_vars, opts.max_exp);
    ++result.samples;
    DivisorPoset P = build_divisor_poset(I);
    TraceReport rep = trace_multigraded(P);

    MonomialIdeal oracle = trace_oracle(P, opts.prime);
    if (!(oracle == rep.trace))
      fail(I, "[trace] engine " + describe(rep.trace) +
                  " != oracle " + describe(oracle));

    HomSolutionSpace full = hom_basis(P, HomSenseSpec::full(), opts.prime);
    if (!verify_relations(P, full)) fail(I, "[relations] full basis violates a relation");
    std::size_t slice_total = 0;
    for (const Monomial& m : candidate_degrees(P)) {
      HomComponentSet H = hom_components(P, m);
      HomSolutionSpace slice =
          hom_basis(P, HomSenseSpec::multigraded(m), opts.prime);
      slice_total += slice.dimension();
      if (slice.dimension() !=
          static_cast<std::size_t>(H.nonzero_dimension()))
        fail(I, "[slice] dimension mismatch at degree " +
                    to_string(m, default_var_names(P.nvars())));
    }
    if (slice_total != full.dimension())
      fail(I, "[slice] dimensions do not sum to the full dimension");

    if (!rep.gorenstein && rep.teter_number_computed &&
        *rep.teter_number > static_cast<int>(rep.trace.gens.size()))
      fail(I, "[bound] teter number exceeds the trace generator count");

    if (P.size() <= 12) {
      ++result.small_poset_instances;
      // union of all symmetric poset ideals == trace members
      std::vector<char> symmetric_union(static_cast<std::size_t>(P.size()), 0);
      bool trace_view_symmetric = false;
      std::vector<int> trace_members;
      for (int id = 0; id < P.size(); ++id)
        if (rep.trace.contains(P.mono(id))) trace_members.push_back(id);
      for (const auto& members : all_poset_ideals(P)) {
        PosetIdealView V = view_from_members(P, members);
        auto msym = is_symmetric(P, V);
        if (!msym) continue;
        if (V.gen.size() != V.soc.size())
          fail(I, "[union] symmetric view with |gen| != |soc|");
        for (int id : members) symmetric_union[static_cast<std::size_t>(id)] = 1;
        if (members == trace_members) trace_view_symmetric = true;
      }
      for (int id = 0; id < P.size(); ++id) {
        bool in_trace = rep.trace.contains(P.mono(id));
        if (in_trace != (symmetric_union[static_cast<std::size_t>(id)] != 0)) {
          fail(I, "[union] union of symmetric ideals differs from the trace");
          break;
        }
      }
      if (!rep.gorenstein) {
        bool yes = rep.teter_type == TeterVerdict::Yes;
        if (yes != trace_view_symmetric)
          fail(I, "[consistency] teter verdict does not match trace-view symmetry");
        if (rep.teter_number_computed && yes != (*rep.teter_number == 1))
          fail(I, "[consistency] teter verdict does not match teter number 1");
      }
    }

    // companion fuzz: random views, union symmetry with the same degree
    for (int t = 0; t < 3; ++t) {
      auto random_view = [&]() {
        std::vector<Monomial> gens;
        int cnt = 1 + static_cast<int>(rng() % 2);
        for (int c = 0; c < cnt; ++c)
          gens.push_back(
              P.mono(static_cast<int>(rng() % static_cast<std::uint64_t>(P.size()))));
        return ideal_view(P, gens);
      };
      PosetIdealView V1 = random_view(), V2 = random_view();
      auto m = are_companions(P, V1, V2);
      if (!m) continue;
      ++result.companion_pairs;
      std::vector<int> members = V1.members;
      members.insert(members.end(), V2.members.begin(), V2.members.end());
      auto msym = is_symmetric(P, view_from_members(P, members));
      if (!msym || !(*msym == *m))
        fail(I, "[companion] pair without a symmetric union of equal degree");
    }
  }
  return result;
}

}  // namespace montrace
