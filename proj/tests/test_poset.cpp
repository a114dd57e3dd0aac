#include "doctest.h"

#include <random>

#include "montrace/poset.hpp"
#include "test_helpers.hpp"

using namespace montrace;
using namespace montrace::testing;

TEST_CASE("divisor poset covers on the Figure 1 ring") {
  DivisorPoset P = build_divisor_poset(ideal2("x^3, y^4, x*y^2"));
  CHECK(P.size() == 8);
  int xy = P.find(mon({1, 1}));
  REQUIRE(xy >= 0);
  // upper neighbors of xy are x and y; its lower neighbor is x^2*y
  std::vector<int> up = P.upper_covers[static_cast<std::size_t>(xy)];
  CHECK(up == std::vector<int>{P.find(mon({0, 1})), P.find(mon({1, 0}))});
  CHECK(P.lower_covers[static_cast<std::size_t>(xy)] ==
        std::vector<int>{P.find(mon({2, 1}))});
}

TEST_CASE("cover lists are mutually inverse single-variable steps") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 25; ++k) {
    DivisorPoset P = build_divisor_poset(random_artinian_ideal(rng, 3, 4));
    for (int u = 0; u < P.size(); ++u) {
      for (int up : P.upper_covers[static_cast<std::size_t>(u)]) {
        // u = up * x_i for exactly one i
        Monomial q = P.mono(u).quotient(P.mono(up));
        CHECK(q.total_degree() == 1);
        auto& lows = P.lower_covers[static_cast<std::size_t>(up)];
        CHECK(std::find(lows.begin(), lows.end(), u) != lows.end());
      }
    }
  }
}

TEST_CASE("unit is the unique maximal element; socle = minimal elements") {
  DivisorPoset P = build_divisor_poset(ideal2("x^5, y^4, x^2*y^2, x^4*y"));
  CHECK(P.size() == 13);
  int top = 0;
  for (int u = 0; u < P.size(); ++u)
    if (P.upper_covers[static_cast<std::size_t>(u)].empty()) top = u;
  CHECK(P.mono(top).is_unit());
  std::vector<int> soc = P.socle();
  std::vector<Monomial> soc_mons;
  for (int id : soc) soc_mons.push_back(P.mono(id));
  CHECK(soc_mons == std::vector<Monomial>{mon({1, 3}), mon({3, 1}), mon({4, 0})});
}

TEST_CASE("ideal_view reproduces the Example 'homomorphism' ideals") {
  DivisorPoset P = build_divisor_poset(ideal2("x^3, y^4, x*y^2"));
  PosetIdealView I = ideal_view(P, {mon({1, 0})});
  std::vector<Monomial> members;
  for (int id : I.members) members.push_back(P.mono(id));
  CHECK(members ==
        std::vector<Monomial>{mon({1, 0}), mon({1, 1}), mon({2, 0}), mon({2, 1})});
  CHECK(I.gen == std::vector<int>{P.find(mon({1, 0}))});
  CHECK(I.soc == std::vector<int>{P.find(mon({2, 1}))});

  PosetIdealView J = ideal_view(P, {mon({0, 2})});
  CHECK(J.members ==
        std::vector<int>{P.find(mon({0, 2})), P.find(mon({0, 3}))});
  CHECK(J.soc == std::vector<int>{P.find(mon({0, 3}))});

  PosetIdealView whole = ideal_view(P, {mon({0, 0})});
  CHECK(static_cast<int>(whole.members.size()) == P.size());

  CHECK_THROWS_AS(ideal_view(P, {mon({1, 2})}), std::invalid_argument);
}

TEST_CASE("closure is idempotent: regenerating a view from its gens") {
  std::mt19937_64 rng(55);
  for (int k = 0; k < 25; ++k) {
    DivisorPoset P = build_divisor_poset(random_artinian_ideal(rng, 3, 3));
    // random antichain of up to 3 elements
    std::vector<Monomial> gens;
    for (int t = 0; t < 3; ++t)
      gens.push_back(P.mono(static_cast<int>(rng() % static_cast<std::uint64_t>(P.size()))));
    PosetIdealView V = ideal_view(P, gens);
    std::vector<Monomial> gen_mons;
    for (int id : V.gen) gen_mons.push_back(P.mono(id));
    PosetIdealView W = ideal_view(P, gen_mons);
    CHECK(V.members == W.members);
    CHECK(V.soc == W.soc);
  }
}

TEST_CASE("socle of the whole poset matches socle_monomials") {
  std::mt19937_64 rng(808);
  for (int k = 0; k < 20; ++k) {
    MonomialIdeal I = random_artinian_ideal(rng, 3, 4);
    DivisorPoset P = build_divisor_poset(I);
    PosetIdealView whole = ideal_view(P, {Monomial::unit(I.nvars)});
    CHECK(whole.soc.size() == socle_monomials(I).size());
  }
}

TEST_CASE("view_from_members validates downward closedness") {
  DivisorPoset P = build_divisor_poset(ideal2("x^2, y^2"));
  // {1} alone is not downward closed (x and y are below it)
  CHECK_THROWS_AS(view_from_members(P, {P.find(mon({0, 0}))}),
                  std::invalid_argument);
  PosetIdealView V = view_from_members(P, {P.find(mon({1, 1}))});
  CHECK(V.gen == V.soc);
}

TEST_CASE("to_dot node and edge counts") {
  DivisorPoset small = build_divisor_poset(ideal2("x^2, y^2"));
  std::string dot = to_dot(small);
  auto count = [&](const std::string& needle) {
    std::size_t c = 0, pos = 0;
    while ((pos = dot.find(needle, pos)) != std::string::npos) {
      ++c;
      pos += needle.size();
    }
    return c;
  };
  CHECK(count("label=") == 4);
  CHECK(count("->") == 4);

  // Figure 1 poset draws nine covers
  DivisorPoset fig1 = build_divisor_poset(ideal2("x^3, y^4, x*y^2"));
  dot = to_dot(fig1);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) {
    ++edges;
    pos += 2;
  }
  CHECK(fig1.size() == 8);
  CHECK(edges == 9);

  // highlight from another poset is rejected; empty highlight styles nothing
  PosetIdealView V = ideal_view(small, {mon({1, 0})});
  CHECK_THROWS_AS(to_dot(fig1, &V), std::invalid_argument);
  std::string with = to_dot(small, &V);
  CHECK(with.find("filled") != std::string::npos);
}
