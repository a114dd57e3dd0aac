#include "doctest.h"

#include <random>

#include "montrace/simplicial.hpp"
#include "test_helpers.hpp"

using namespace montrace;
using namespace montrace::testing;

namespace {

std::uint64_t mk(std::initializer_list<int> verts) {
  std::uint64_t m = 0;
  for (int v : verts) m |= 1ull << (v - 1);
  return m;
}

const std::vector<std::vector<int>> kRp2Facets = {
    {1, 2, 4}, {1, 3, 4}, {2, 4, 5}, {2, 3, 5}, {1, 3, 5},
    {1, 5, 6}, {1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}};

SimplicialComplex cycle_one_complex(int n) {
  std::vector<std::vector<int>> facets;
  for (int i = 1; i < n; ++i) facets.push_back({i, i + 1});
  facets.push_back({1, n});
  return complex_from_facets(n, facets);
}

}  // namespace

TEST_CASE("complex_from_facets drops non-maximal faces and validates") {
  SimplicialComplex a = complex_from_facets(4, {{1, 2, 3}, {3, 4}});
  CHECK(a.facets.size() == 2);
  SimplicialComplex b = complex_from_facets(4, {{1, 2, 3}, {1, 2}, {3, 4}});
  CHECK(b.facets == a.facets);
  SimplicialComplex d3 = complex_from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(d3.facets.size() == 3);
  CHECK_THROWS_AS(complex_from_facets(3, {{1, 2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_facets(4, {{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("minimal nonfaces and flagness") {
  SimplicialComplex d3 = complex_from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(minimal_nonfaces(d3) == std::vector<std::uint64_t>{mk({1, 2, 3})});
  CHECK_FALSE(is_flag(d3));

  SimplicialComplex d5 = cycle_one_complex(5);
  auto nf = minimal_nonfaces(d5);
  CHECK(nf.size() == 5);  // the five non-edges of the 5-cycle
  CHECK(is_flag(d5));

  SimplicialComplex b = complex_from_facets(4, {{1, 2, 3}, {1, 2, 4}});
  CHECK(minimal_nonfaces(b) == std::vector<std::uint64_t>{mk({3, 4})});
  CHECK(is_flag(b));

  // a simplex has no non-faces and is vacuously flag
  SimplicialComplex simplex = complex_from_facets(3, {{1, 2, 3}});
  CHECK(minimal_nonfaces(simplex).empty());
  CHECK(is_flag(simplex));
}

TEST_CASE("kdelta_ideal") {
  SimplicialComplex b = complex_from_facets(4, {{1, 2, 3}, {1, 2, 4}});
  MonomialIdeal I = kdelta_ideal(b);
  MonomialIdeal expect = make_ideal(
      4, {mon({2, 0, 0, 0}), mon({0, 2, 0, 0}), mon({0, 0, 2, 0}),
          mon({0, 0, 0, 2}), mon({0, 0, 1, 1})});
  CHECK(I == expect);

  SimplicialComplex simplex = complex_from_facets(3, {{1, 2, 3}});
  CHECK(kdelta_ideal(simplex) ==
        make_ideal(3, {mon({2, 0, 0}), mon({0, 2, 0}), mon({0, 0, 2})}));

  SimplicialComplex d3 = complex_from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(kdelta_ideal(d3) ==
        make_ideal(3, {mon({2, 0, 0}), mon({0, 2, 0}), mon({0, 0, 2}),
                       mon({1, 1, 1})}));
}

TEST_CASE("free faces of the worked examples") {
  SimplicialComplex d3 = complex_from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
  auto ff = free_faces(d3);
  std::sort(ff.begin(), ff.end());
  CHECK(ff == std::vector<std::uint64_t>{mk({1, 2}), mk({1, 3}), mk({2, 3})});

  // the empty face is free exactly for the simplex
  SimplicialComplex simplex = complex_from_facets(3, {{1, 2, 3}});
  auto sf = free_faces(simplex);
  CHECK(std::find(sf.begin(), sf.end(), 0ull) != sf.end());
  CHECK(minimal_free_faces(simplex) == std::vector<std::uint64_t>{0});

  SimplicialComplex b = complex_from_facets(4, {{1, 2, 3}, {1, 2, 4}});
  CHECK(minimal_free_faces(b) == std::vector<std::uint64_t>{mk({3}), mk({4})});
}

TEST_CASE("flag_trace_gens on Examples (a)-(g)") {
  auto gens_of = [](const SimplicialComplex& D) { return flag_trace_gens(D); };

  SimplicialComplex a = complex_from_facets(4, {{1, 2, 3}, {3, 4}});
  std::vector<Monomial> ea = {mon({1, 0, 0, 0}), mon({0, 1, 0, 0}),
                              mon({0, 0, 0, 1})};
  std::sort(ea.begin(), ea.end());
  CHECK(gens_of(a) == ea);
  CHECK(verify_flag_trace(a));

  SimplicialComplex b = complex_from_facets(4, {{1, 2, 3}, {1, 2, 4}});
  CHECK(gens_of(b) ==
        std::vector<Monomial>{mon({0, 0, 0, 1}), mon({0, 0, 1, 0})});
  CHECK(verify_flag_trace(b));

  SimplicialComplex c = complex_from_facets(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  CHECK(gens_of(c).size() == 3);
  CHECK(verify_flag_trace(c));

  SimplicialComplex d =
      complex_from_facets(6, {{1, 4, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
  std::vector<Monomial> ed = {mon({1, 0, 0, 0, 0, 0}), mon({0, 1, 0, 0, 0, 0}),
                              mon({0, 0, 1, 0, 0, 0}), mon({0, 0, 0, 1, 1, 1})};
  std::sort(ed.begin(), ed.end());
  CHECK(gens_of(d) == ed);
  CHECK(verify_flag_trace(d));

  SimplicialComplex e =
      complex_from_facets(6, {{1, 4}, {2, 5}, {3, 6}, {4, 5, 6}});
  CHECK(gens_of(e).size() == 6);  // x1, x2, x3, x4x5, x5x6, x4x6
  CHECK(verify_flag_trace(e));

  SimplicialComplex f = complex_from_facets(4, {{1, 2}, {3, 4}});
  std::vector<Monomial> ef = {mon({1, 0, 0, 0}), mon({0, 1, 0, 0}),
                              mon({0, 0, 1, 0}), mon({0, 0, 0, 1})};
  std::sort(ef.begin(), ef.end());
  CHECK(gens_of(f) == ef);
  CHECK(verify_flag_trace(f));
  // nearly Gorenstein but not of Teter type
  DivisorPoset Pf = build_divisor_poset(kdelta_ideal(f));
  TraceReport rf = trace_multigraded(Pf);
  CHECK(rf.nearly_gorenstein);
  CHECK(rf.teter_type == TeterVerdict::No);

  for (int n = 4; n <= 6; ++n) {  // (g): cycle one-complexes, flag for n > 3
    SimplicialComplex g = cycle_one_complex(n);
    REQUIRE(is_flag(g));
    std::vector<Monomial> expect;
    for (int i = 1; i <= n; ++i) {
      Monomial m = Monomial::unit(n);
      m.e[static_cast<std::size_t>(i - 1)] = 1;
      m.e[static_cast<std::size_t>(i % n)] = 1;
      expect.push_back(m);
    }
    std::sort(expect.begin(), expect.end());
    CHECK(gens_of(g) == expect);
    CHECK(verify_flag_trace(g));
  }

  SimplicialComplex d3 = complex_from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_THROWS_AS(flag_trace_gens(d3), std::invalid_argument);
}

TEST_CASE("non-flag necessity: Delta_3 and the projective plane") {
  // Delta_3: engine trace is (x1,x2,x3), not the free-face monomials
  SimplicialComplex d3 = complex_from_facets(3, {{1, 2}, {2, 3}, {1, 3}});
  DivisorPoset P3 = build_divisor_poset(kdelta_ideal(d3));
  CHECK(trace_multigraded(P3).trace ==
        make_ideal(3, {mon({1, 0, 0}), mon({0, 1, 0}), mon({0, 0, 1})}));

  SimplicialComplex rp2 = complex_from_facets(6, kRp2Facets);
  CHECK_FALSE(is_flag(rp2));
  DivisorPoset P = build_divisor_poset(kdelta_ideal(rp2));
  std::vector<Monomial> quadrics;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Monomial m = Monomial::unit(6);
      m.e[static_cast<std::size_t>(i)] = 1;
      m.e[static_cast<std::size_t>(j)] = 1;
      quadrics.push_back(m);
    }
  std::sort(quadrics.begin(), quadrics.end());
  CHECK(trace_multigraded(P).trace.gens == quadrics);
}

TEST_CASE("independence complexes of paths and cycles") {
  SimplicialComplex p2 = independence_complex(path_graph(2), 2);
  CHECK(p2.facets == std::vector<std::uint64_t>{mk({1}), mk({2})});

  SimplicialComplex c4 = independence_complex(cycle_graph(4), 4);
  CHECK(c4.facets == std::vector<std::uint64_t>{mk({1, 3}), mk({2, 4})});

  CHECK_THROWS_AS(independence_complex({{1, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(independence_complex({{1, 2}, {2, 1}}, 2), std::invalid_argument);
}

TEST_CASE("path sequences reproduce the n = 7 lists") {
  PathSequences s = path_sequences(7);
  std::vector<std::vector<int>> perm = {{1, 3, 5, 7}, {1, 3, 6}, {1, 4, 6},
                                        {1, 4, 7},    {2, 4, 6}, {2, 4, 7},
                                        {2, 5, 7}};
  std::sort(perm.begin(), perm.end());
  CHECK(s.permissible == perm);

  std::vector<std::vector<int>> tau = {{1, 5},    {3, 5},    {3, 7},
                                       {3, 6},    {1, 4, 6}, {1, 4, 7},
                                       {2, 6},    {2, 4, 7}, {2, 5}};
  std::sort(tau.begin(), tau.end());
  CHECK(s.tau_permissible == tau);

  PathSequences s2 = path_sequences(2);
  CHECK(s2.permissible == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(s2.tau_permissible == std::vector<std::vector<int>>{{1}, {2}});
  CHECK_THROWS_AS(path_sequences(1), std::invalid_argument);
}

TEST_CASE("path sequences match facets and engine trace for 2 <= n <= 9") {
  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    PathSequences s = path_sequences(n);
    SimplicialComplex D = independence_complex(path_graph(n), n);
    std::vector<std::vector<int>> facets;
    for (std::uint64_t f : D.facets) {
      std::vector<int> verts;
      for (int v = 1; v <= n; ++v)
        if (f & (1ull << (v - 1))) verts.push_back(v);
      facets.push_back(verts);
    }
    std::sort(facets.begin(), facets.end());
    CHECK(s.permissible == facets);

    std::vector<std::vector<int>> mff;
    for (std::uint64_t f : minimal_free_faces(D)) {
      std::vector<int> verts;
      for (int v = 1; v <= n; ++v)
        if (f & (1ull << (v - 1))) verts.push_back(v);
      mff.push_back(verts);
    }
    std::sort(mff.begin(), mff.end());
    CHECK(s.tau_permissible == mff);
    CHECK(verify_flag_trace(D));
  }
}

TEST_CASE("cycle sequences on the worked examples") {
  CycleSequences c5 = cycle_sequences(5);
  CHECK(std::find(c5.socle_sets.begin(), c5.socle_sets.end(),
                  std::vector<int>{1, 3}) != c5.socle_sets.end());
  CHECK(std::find(c5.trace_gen_sets.begin(), c5.trace_gen_sets.end(),
                  std::vector<int>{1, 3}) != c5.trace_gen_sets.end());

  CycleSequences c4 = cycle_sequences(4);
  CHECK(c4.trace_gen_sets ==
        std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  CHECK(c4.socle_sets == std::vector<std::vector<int>>{{1, 3}, {2, 4}});

  CycleSequences c9 = cycle_sequences(9);
  CHECK(std::find(c9.trace_gen_sets.begin(), c9.trace_gen_sets.end(),
                  std::vector<int>{1, 5, 7}) != c9.trace_gen_sets.end());
  CHECK(std::find(c9.socle_sets.begin(), c9.socle_sets.end(),
                  std::vector<int>{1, 3, 5, 7}) != c9.socle_sets.end());
  CHECK(std::find(c9.trace_gen_sets.begin(), c9.trace_gen_sets.end(),
                  std::vector<int>{1, 3, 5, 7}) == c9.trace_gen_sets.end());

  CycleSequences c8 = cycle_sequences(8);
  CHECK(std::find(c8.socle_sets.begin(), c8.socle_sets.end(),
                  std::vector<int>{1, 4, 6}) != c8.socle_sets.end());
  CHECK(std::find(c8.trace_gen_sets.begin(), c8.trace_gen_sets.end(),
                  std::vector<int>{1, 5}) != c8.trace_gen_sets.end());

  CHECK_THROWS_AS(cycle_sequences(2), std::invalid_argument);
}

TEST_CASE("cycle sequences match facets and engine trace for 3 <= n <= 9") {
  for (int n = 3; n <= 9; ++n) {
    CAPTURE(n);
    CycleSequences s = cycle_sequences(n);
    SimplicialComplex D = independence_complex(cycle_graph(n), n);
    std::vector<std::vector<int>> facets;
    for (std::uint64_t f : D.facets) {
      std::vector<int> verts;
      for (int v = 1; v <= n; ++v)
        if (f & (1ull << (v - 1))) verts.push_back(v);
      facets.push_back(verts);
    }
    std::sort(facets.begin(), facets.end());
    CHECK(s.socle_sets == facets);

    std::vector<std::vector<int>> mff;
    for (std::uint64_t f : minimal_free_faces(D)) {
      std::vector<int> verts;
      for (int v = 1; v <= n; ++v)
        if (f & (1ull << (v - 1))) verts.push_back(v);
      mff.push_back(verts);
    }
    std::sort(mff.begin(), mff.end());
    CHECK(s.trace_gen_sets == mff);
    if (n > 3) CHECK(verify_flag_trace(D));
  }
}

TEST_CASE("posetll: lattice, extensions and C-sharp chains") {
  FinitePoset P = poset_from_relations(
      {"a1", "a2", "a3", "a4"},
      {{"a1", "a3"}, {"a2", "a3"}, {"a2", "a4"}});
  FinitePoset L = lattice_of_ideals(P);
  CHECK(L.size() == 8);

  auto exts = linear_extensions(P);
  std::vector<std::vector<int>> expect = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 3, 0, 2}};
  CHECK(exts == expect);

  auto chain = [&](const std::vector<int>& pi) { return c_sharp(P, pi); };
  CHECK(chain({0, 1, 2, 3}) ==
        std::vector<std::uint64_t>{0b0001, 0b0111});  // {a1} < {a1,a2,a3}
  CHECK(chain({0, 1, 3, 2}) == std::vector<std::uint64_t>{0b0001, 0b1011});
  CHECK(chain({1, 0, 2, 3}) == std::vector<std::uint64_t>{0b0010, 0b0111});
  CHECK(chain({1, 0, 3, 2}) ==
        std::vector<std::uint64_t>{0b0010, 0b0011, 0b1011});
  CHECK(chain({1, 3, 0, 2}) == std::vector<std::uint64_t>{0b1010});
  CHECK_THROWS_AS(c_sharp(P, {2, 0, 1, 3}), std::invalid_argument);
}

TEST_CASE("c_sharp on a chain is empty; small lattices") {
  FinitePoset chain3 =
      poset_from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(lattice_of_ideals(chain3).size() == 4);
  CHECK(linear_extensions(chain3).size() == 1);
  CHECK(c_sharp(chain3, {0, 1, 2}).empty());

  FinitePoset anti2 = poset_from_relations({"a", "b"}, {});
  CHECK(lattice_of_ideals(anti2).size() == 4);
  CHECK(linear_extensions(anti2).size() == 2);
}

TEST_CASE("distributive trace generators and engine agreement") {
  FinitePoset P = poset_from_relations(
      {"a1", "a2", "a3", "a4"},
      {{"a1", "a3"}, {"a2", "a3"}, {"a2", "a4"}});
  DistributiveReport rep = distributive_trace_gens(P);
  CHECK(rep.extensions.size() == 5);
  CHECK(rep.trace_gens.size() == 5);
  CHECK(verify_distributive(P));

  // a chain gives the simplex: single unit generator
  FinitePoset chain3 =
      poset_from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  DistributiveReport rc = distributive_trace_gens(chain3);
  CHECK(rc.trace_gens.size() == 1);
  CHECK(rc.trace_gens.front().is_unit());
  CHECK(verify_distributive(chain3));

  FinitePoset anti2 = poset_from_relations({"a", "b"}, {});
  DistributiveReport ra = distributive_trace_gens(anti2);
  CHECK(ra.trace_gens.size() == 2);
  CHECK(verify_distributive(anti2));
}

TEST_CASE("teter number on antichain lattices; large ones hit the cover cap") {
  FinitePoset a3 = poset_from_relations({"a1", "a2", "a3"}, {});
  DistributiveReport r3 = distributive_trace_gens(a3);
  TraceReport t3 = trace_multigraded(build_divisor_poset(kdelta_ideal(r3.complex)));
  CHECK(t3.teter_number_computed);
  CHECK(t3.trace.gens.size() == 6);
  REQUIRE(t3.teter_number.has_value());
  CHECK(*t3.teter_number == 3);

  FinitePoset a4 = poset_from_relations({"a1", "a2", "a3", "a4"}, {});
  DistributiveReport r4 = distributive_trace_gens(a4);
  TraceReport t4 = trace_multigraded(build_divisor_poset(kdelta_ideal(r4.complex)));
  CHECK_FALSE(t4.teter_number_computed);  // 24 extensions exceed the cap
  CHECK_FALSE(t4.teter_number.has_value());
  CHECK(t4.trace.gens.size() == 24);
}

TEST_CASE("standard monomials of K{Delta} are exactly the faces") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng() % 2) edges.emplace_back(i, j);
    SimplicialComplex D = independence_complex(edges, n);
    auto faces = D.faces();
    StandardBasis basis = standard_monomials(kdelta_ideal(D));
    REQUIRE(faces.size() == basis.monomials.size());
    for (std::size_t k = 0; k < faces.size(); ++k) {
      Monomial m = Monomial::unit(n);
      for (int v = 0; v < n; ++v)
        if (faces[k] & (1ull << v)) m.e[static_cast<std::size_t>(v)] = 1;
      CHECK(std::find(basis.monomials.begin(), basis.monomials.end(), m) !=
            basis.monomials.end());
    }
  }
}

TEST_CASE("poset_from_relations rejects cycles and duplicates") {
  CHECK_THROWS_AS(
      poset_from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
      std::invalid_argument);
  CHECK_THROWS_AS(poset_from_relations({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(poset_from_relations({"a"}, {{"a", "a"}}),
                  std::invalid_argument);
}
