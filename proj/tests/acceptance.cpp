// Acceptance suite: runs every acceptance criterion and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "montrace/families.hpp"
#include "montrace/hom.hpp"
#include "montrace/oracle.hpp"
#include "montrace/parse.hpp"
#include "montrace/selfcheck.hpp"
#include "montrace/simplicial.hpp"

using namespace montrace;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = {}) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": "
            << what;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

MonomialIdeal ideal2(const std::string& expr) {
  return parse_ideal(expr, {"x", "y"}).ideal;
}

Monomial mon(std::vector<int> e) { return Monomial(std::move(e)); }

constexpr std::uint64_t kPrime = 2147483647ull;

// ---------------------------------------------------------------- criterion 1
void criterion1() {
  bool ok = true;
  std::string detail;
  {
    TraceReport r = trace_multigraded(build_divisor_poset(ideal2("x^4, y^4, x^2*y^2")));
    if (!(r.trace == ideal2("x^2, y^2"))) ok = false, detail += "trace(x4,y4,x2y2);";
    if (r.teter_type != TeterVerdict::Yes) ok = false, detail += "verdict yes;";
    if (!r.witness_degree || !(*r.witness_degree == mon({3, 3})))
      ok = false, detail += "witness (3,3);";
  }
  {
    TraceReport r = trace_multigraded(build_divisor_poset(ideal2("x^3, y^3, x*y")));
    if (!(r.trace == ideal2("x, y"))) ok = false, detail += "trace(x3,y3,xy);";
    if (r.teter_type != TeterVerdict::No) ok = false, detail += "verdict no;";
  }
  report(1, "paper example traces and multigraded verdicts", ok, detail);
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
  bool ok = true;
  std::string detail;
  DivisorPoset A = build_divisor_poset(ideal2("x^3, y^3, x*y"));
  DivisorPoset B = build_divisor_poset(ideal2("x^3, y^4, x*y"));
  if (trace_multigraded(A).teter_type != TeterVerdict::No)
    ok = false, detail += "A multigraded no;";
  for (std::uint64_t seed = 0; seed <= 4; ++seed) {
    RandomizedReport ga = teter_type_randomized(A, true, kPrime, 8, seed);
    if (ga.verdict != RandomVerdict::Yes || !ga.witness_total_degree ||
        *ga.witness_total_degree != 3) {
      ok = false;
      detail += "A graded yes@3 seed " + std::to_string(seed) + ";";
    }
    RandomizedReport gb = teter_type_randomized(B, true, kPrime, 8, seed);
    if (gb.verdict != RandomVerdict::ProbablyNo) {
      ok = false;
      detail += "B graded probably_no seed " + std::to_string(seed) + ";";
    }
    RandomizedReport lb = teter_type_randomized(B, false, kPrime, 8, seed);
    if (lb.verdict != RandomVerdict::Yes) {
      ok = false;
      detail += "B local yes seed " + std::to_string(seed) + ";";
    }
  }
  report(2, "sense separation (graded vs local), stable across seeds 0-4", ok,
         detail);
}

// ------------------------------------------------------- criteria 3, 4 and 10
SelfcheckResult run_corpus() {
  SelfcheckOptions opts;
  opts.samples = 200;
  opts.max_vars = 3;
  opts.max_exp = 4;
  opts.seed = 0;
  opts.prime = kPrime;
  return run_selfcheck(opts);
}

bool has_category(const SelfcheckResult& r, const std::string& tag) {
  for (const auto& f : r.failures)
    if (f.find(tag) != std::string::npos) return true;
  return false;
}

void criterion3(const SelfcheckResult& r) {
  bool ok = r.samples >= 200 && !has_category(r, "[trace]") &&
            !has_category(r, "[slice]") && !has_category(r, "[relations]");
  std::string detail;
  for (const auto& f : r.failures)
    if (f.find("[trace]") != std::string::npos ||
        f.find("[slice]") != std::string::npos)
      detail += f + ";";
  report(3, "oracle agreement on " + std::to_string(r.samples) +
                " random ideals (trace + slice dimensions)",
         ok, detail);
}

void criterion4(const SelfcheckResult& r) {
  bool ok = r.small_poset_instances > 0 && !has_category(r, "[union]") &&
            !has_category(r, "[consistency]");
  report(4, "symmetric-union law and teter consistency on " +
                std::to_string(r.small_poset_instances) +
                " instances with |P| <= 12",
         ok);
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
  int checked = 0, bad = 0;
  auto next_vec = [](std::vector<int>& v, const std::vector<int>& lo,
                     const std::vector<int>& hi) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] + 1 <= hi[i]) {
        ++v[i];
        return true;
      }
      v[i] = lo[i];
    }
    return false;
  };
  for (int n : {2, 3}) {
    std::vector<int> a(static_cast<std::size_t>(n), 2);
    std::vector<int> alo(static_cast<std::size_t>(n), 2),
        ahi(static_cast<std::size_t>(n), 4);
    do {
      std::vector<int> b(static_cast<std::size_t>(n), 0);
      std::vector<int> blo(static_cast<std::size_t>(n), 0), bhi;
      for (int x : a) bhi.push_back(x - 1);
      do {
        int positive = 0;
        for (int x : b) positive += x > 0;
        if (positive < 2) continue;
        ++checked;
        if (!verify_aci(make_aci_spec(a, b))) ++bad;
      } while (next_vec(b, blo, bhi));
    } while (next_vec(a, alo, ahi));
  }
  report(5, "ACI theorem sweep (" + std::to_string(checked) + " specs)", bad == 0,
         std::to_string(bad) + " mismatches");
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
  int bad = 0, checked = 0;
  for (int n : {2, 3}) {  // one variable gives Gorenstein quotients
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    auto bump = [&]() {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] + 1 <= 3) {
          ++a[i];
          return true;
        }
        a[i] = 1;
      }
      return false;
    };
    do {
      int amin = *std::min_element(a.begin(), a.end());
      for (int k = 1; k <= amin; ++k) {
        ++checked;
        if (!verify_chopin(make_power_quotient_spec(a, k))) ++bad;
      }
    } while (bump());
  }
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      ++checked;
      auto [gens, teter] = mozart(n, k);
      if (teter != (k <= n - k) || !verify_mozart(n, k)) ++bad;
    }
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int k = 1; k <= a + b - 2; ++k) {
        ++checked;
        if (!verify_ci2(a, b, k)) ++bad;
      }
  report(6, "family formulas: chopin, mozart, ci2 (" + std::to_string(checked) +
                " cases)",
         bad == 0, std::to_string(bad) + " mismatches");
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
  bool ok = true;
  std::string detail;
  auto expect_gens = [&](const SimplicialComplex& D,
                         std::vector<Monomial> expected, const char* name) {
    std::sort(expected.begin(), expected.end());
    if (flag_trace_gens(D) != expected || !verify_flag_trace(D)) {
      ok = false;
      detail += std::string(name) + ";";
    }
  };
  SimplicialComplex a = complex_from_facets(4, {{1, 2, 3}, {3, 4}});
  expect_gens(a, {mon({1, 0, 0, 0}), mon({0, 1, 0, 0}), mon({0, 0, 0, 1})}, "(a)");
  SimplicialComplex b = complex_from_facets(4, {{1, 2, 3}, {1, 2, 4}});
  expect_gens(b, {mon({0, 0, 1, 0}), mon({0, 0, 0, 1})}, "(b)");
  SimplicialComplex f = complex_from_facets(4, {{1, 2}, {3, 4}});
  expect_gens(f,
              {mon({1, 0, 0, 0}), mon({0, 1, 0, 0}), mon({0, 0, 1, 0}),
               mon({0, 0, 0, 1})},
              "(f)");
  {
    DivisorPoset Pf = build_divisor_poset(kdelta_ideal(f));
    TraceReport rf = trace_multigraded(Pf);
    if (!rf.nearly_gorenstein || rf.teter_type != TeterVerdict::No) {
      ok = false;
      detail += "(f) nearly-Gorenstein/non-Teter;";
    }
  }
  for (int n : {4, 5}) {  // (g)
    std::vector<std::vector<int>> facets;
    for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
    facets.push_back({1, n});
    SimplicialComplex g = complex_from_facets(n, facets);
    std::vector<Monomial> expected;
    for (int i = 1; i <= n; ++i) {
      Monomial m = Monomial::unit(n);
      m.e[static_cast<std::size_t>(i - 1)] = 1;
      m.e[static_cast<std::size_t>(i % n)] = 1;
      expected.push_back(m);
    }
    expect_gens(g, expected, "(g)");
  }
  {  // Delta_3 is not flag; its trace is the variables
    SimplicialComplex d3 = complex_from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
    if (is_flag(d3)) ok = false, detail += "Delta3 flagness;";
    TraceReport r = trace_multigraded(build_divisor_poset(kdelta_ideal(d3)));
    if (!(r.trace == make_ideal(3, {mon({1, 0, 0}), mon({0, 1, 0}), mon({0, 0, 1})})))
      ok = false, detail += "Delta3 trace;";
  }
  {  // the projective-plane triangulation: trace = all quadratics x_i x_j
    SimplicialComplex rp2 = complex_from_facets(
        6, {{1, 2, 4}, {1, 3, 4}, {2, 4, 5}, {2, 3, 5}, {1, 3, 5},
            {1, 5, 6}, {1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}});
    if (is_flag(rp2)) ok = false, detail += "RP2 flagness;";
    TraceReport r = trace_multigraded(build_divisor_poset(kdelta_ideal(rp2)));
    std::vector<Monomial> quadrics;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        Monomial m = Monomial::unit(6);
        m.e[static_cast<std::size_t>(i)] = 1;
        m.e[static_cast<std::size_t>(j)] = 1;
        quadrics.push_back(m);
      }
    std::sort(quadrics.begin(), quadrics.end());
    if (r.trace.gens != quadrics) ok = false, detail += "RP2 trace;";
  }
  {  // random flag corpus: independence complexes of random graphs, n <= 6
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 40; ++t) {
      int n = 2 + static_cast<int>(rng() % 5);
      std::vector<std::pair<int, int>> edges;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (rng() % 2) edges.emplace_back(i, j);
      SimplicialComplex D = independence_complex(edges, n);
      if (!is_flag(D)) {
        ok = false;
        detail += "independence complex not flag;";
        continue;
      }
      if (!verify_flag_trace(D)) {
        ok = false;
        detail += "random flag mismatch;";
      }
    }
  }
  report(7, "simplicial golden vectors and the flag theorem", ok, detail);
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
  bool ok = true;
  std::string detail;
  PathSequences s7 = path_sequences(7);
  std::vector<std::vector<int>> perm = {{1, 3, 5, 7}, {1, 3, 6}, {1, 4, 6},
                                        {1, 4, 7},    {2, 4, 6}, {2, 4, 7},
                                        {2, 5, 7}};
  std::sort(perm.begin(), perm.end());
  std::vector<std::vector<int>> tau = {{1, 5},    {3, 5},    {3, 7},
                                       {3, 6},    {1, 4, 6}, {1, 4, 7},
                                       {2, 6},    {2, 4, 7}, {2, 5}};
  std::sort(tau.begin(), tau.end());
  if (s7.permissible != perm || s7.permissible.size() != 7)
    ok = false, detail += "n=7 permissible;";
  if (s7.tau_permissible != tau || s7.tau_permissible.size() != 9)
    ok = false, detail += "n=7 tau-permissible;";
  for (int n = 2; n <= 9; ++n)
    if (!verify_path_sequences(n)) {
      ok = false;
      detail += "path n=" + std::to_string(n) + ";";
    }
  for (int n = 3; n <= 9; ++n)
    if (!verify_cycle_sequences(n)) {
      ok = false;
      detail += "cycle n=" + std::to_string(n) + ";";
    }
  report(8, "path/cycle sequence enumerations vs engine (n <= 9)", ok, detail);
}

// ---------------------------------------------------------------- criterion 9
// All posets on <= 5 elements up to isomorphism: every poset is isomorphic to
// a naturally labeled one (order relation inside the natural order on
// {0..m-1}), so enumerate transitive strict upper-triangular relations and
// dedupe by the minimum relation bitmask over all permutations.
std::vector<FinitePoset> all_posets_up_to(int max_elems) {
  std::vector<FinitePoset> out;
  for (int m = 1; m <= max_elems; ++m) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::map<std::uint64_t, bool> seen;
    for (std::uint64_t bits = 0; bits < (1ull << slots.size()); ++bits) {
      std::vector<std::vector<char>> less(
          static_cast<std::size_t>(m),
          std::vector<char>(static_cast<std::size_t>(m), 0));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (bits & (1ull << s))
          less[static_cast<std::size_t>(slots[s].first)]
              [static_cast<std::size_t>(slots[s].second)] = 1;
      bool transitive = true;
      for (int i = 0; transitive && i < m; ++i)
        for (int k = 0; transitive && k < m; ++k)
          for (int j = 0; j < m; ++j)
            if (less[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                less[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] &&
                !less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
              transitive = false;
              break;
            }
      if (!transitive) continue;
      for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
      std::uint64_t canon = ~0ull;
      do {
        std::uint64_t enc = 0;
        int bit = 0;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            if (i != j &&
                less[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                    [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])])
              enc |= 1ull << bit;
            ++bit;
          }
        canon = std::min(canon, enc);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.emplace(canon, true).second) {
        FinitePoset P;
        for (int i = 0; i < m; ++i) P.labels.push_back("a" + std::to_string(i + 1));
        P.less = std::move(less);
        out.push_back(std::move(P));
      }
    }
  }
  return out;
}

void criterion9() {
  bool ok = true;
  std::string detail;
  FinitePoset P = poset_from_relations(
      {"a1", "a2", "a3", "a4"}, {{"a1", "a3"}, {"a2", "a3"}, {"a2", "a4"}});
  DistributiveReport rep = distributive_trace_gens(P);
  if (rep.extensions.size() != 5) ok = false, detail += "posetll extensions;";
  std::vector<std::vector<std::uint64_t>> expected_sharps = {
      {0b0001, 0b0111}, {0b0001, 0b1011}, {0b0010, 0b0111},
      {0b0010, 0b0011, 0b1011}, {0b1010}};
  for (std::size_t i = 0; i < rep.extensions.size() && i < 5; ++i)
    if (c_sharp(P, rep.extensions[i]) != expected_sharps[i]) {
      ok = false;
      detail += "posetll C# " + std::to_string(i + 1) + ";";
    }
  int checked = 0;
  for (const FinitePoset& Q : all_posets_up_to(5)) {
    ++checked;
    if (!verify_distributive(Q)) {
      ok = false;
      detail += "poset #" + std::to_string(checked) + ";";
    }
  }
  report(9, "distributive lattices: posetll goldens + " + std::to_string(checked) +
                " posets up to 5 elements",
         ok, detail);
}

// --------------------------------------------------------------- criterion 10
void criterion10(const SelfcheckResult& corpus) {
  bool ok = true;
  std::string detail;
  {
    DivisorPoset P = build_divisor_poset(ideal2("x^3, y^4, x*y^2"));
    auto mi = is_symmetric(P, ideal_view(P, {mon({1, 0})}));
    auto mj = is_symmetric(P, ideal_view(P, {mon({0, 2})}));
    auto mu = is_symmetric(P, ideal_view(P, {mon({1, 0}), mon({0, 2})}));
    if (!mi || !(*mi == mon({3, 1}))) ok = false, detail += "homomorphism I;";
    if (!mj || !(*mj == mon({0, 5}))) ok = false, detail += "homomorphism J;";
    if (mu) ok = false, detail += "homomorphism union must fail;";
    if (is_tau_ideal(P, ideal_view(P, {mon({1, 0}), mon({0, 2})})))
      ok = false, detail += "homomorphism union tau;";
  }
  {
    DivisorPoset Z = build_divisor_poset(ideal2("x^5, y^4, x^2*y^2, x^4*y"));
    PosetIdealView I = ideal_view(Z, {mon({3, 0})});
    PosetIdealView J = ideal_view(Z, {mon({1, 2}), mon({0, 3})});
    auto m = are_companions(Z, I, J);
    if (!m || !(*m == mon({4, 3}))) ok = false, detail += "EXAMPLE_Z degree;";
    if (I.gen.size() == I.soc.size()) ok = false, detail += "EXAMPLE_Z mu!=sigma;";
    if (is_symmetric(Z, I)) ok = false, detail += "EXAMPLE_Z not symmetric;";
  }
  {
    DivisorPoset W =
        build_divisor_poset(ideal2("x^6, x^4*y^2, x^2*y^4, x*y^5, y^6"));
    PosetIdealView I = ideal_view(W, {mon({5, 0}), mon({4, 1}), mon({2, 2})});
    PosetIdealView J = ideal_view(W, {mon({2, 2}), mon({0, 4})});
    auto m = are_companions(W, I, J);
    if (!m || !(*m == mon({5, 5}))) ok = false, detail += "intersection degree;";
  }
  if (corpus.companion_pairs < 1 || has_category(corpus, "[companion]")) {
    ok = false;
    detail += "companion fuzz (" + std::to_string(corpus.companion_pairs) +
              " pairs);";
  }
  report(10, "companion algebra goldens + fuzzed companion unions (" +
                 std::to_string(corpus.companion_pairs) + " pairs)",
         ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  SelfcheckResult corpus = run_corpus();
  criterion3(corpus);
  criterion4(corpus);
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10(corpus);
  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " criterion(s) failed" << std::endl;
  return 1;
}
