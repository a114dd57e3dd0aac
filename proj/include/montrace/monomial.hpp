#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace montrace {

/// Exponent vector of a monomial in a fixed number of variables.
/// All arithmetic is exact integer arithmetic; entries are >= 0.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial var(int nvars, int i, int power = 1);

  int arity() const { return static_cast<int>(e.size()); }
  int total_degree() const;
  bool is_unit() const;

  bool divides(const Monomial& other) const;      // componentwise <=
  Monomial times(const Monomial& other) const;
  Monomial times_var(int var) const;
  Monomial quotient(const Monomial& divisor) const;  // requires divisor | *this

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Canonical element order: total degree first, then lexicographic on exponents.
bool operator<(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// "x^2*y" in the given variable names; "1" for the unit monomial.
std::string to_string(const Monomial& m, const std::vector<std::string>& vars);

/// Default variable names: x,y,z for up to three variables, x1..xn beyond.
std::vector<std::string> default_var_names(int nvars);

/// A monomial ideal given by its minimal monomial generators.
/// gens is always minimalized (pairwise non-dividing) and sorted.
/// Empty gens = zero ideal; the single generator 1 = unit ideal.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& u) const;  // some generator divides u

  bool operator==(const MonomialIdeal& o) const {
    return nvars == o.nvars && gens == o.gens;
  }
};

/// Drops generators divisible by another one; sorts. Idempotent.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Builds an ideal from arbitrary generators (minimalizes, validates arity).
MonomialIdeal make_ideal(int nvars, std::vector<Monomial> gens);

/// The monomials of S not in I, the canonical K-basis of R = S/I.
/// Closed under division, contains 1, finite by the Artinian hypothesis.
struct StandardBasis {
  int nvars = 0;
  std::vector<Monomial> monomials;  // sorted by (degree, lex)
};

/// True iff every variable has a pure power among the generators.
bool is_artinian(const MonomialIdeal& I);

/// Enumerates the standard monomials of an Artinian ideal.
/// Throws std::invalid_argument if I is not Artinian.
StandardBasis standard_monomials(const MonomialIdeal& I);

/// Sum I + J (union of generators, minimalized).
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);

/// Intersection via pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// Monomial colon ideal (I : J) = {u : u*J in I}.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g);

/// Soc(R) = monomials u not in I with x_i*u in I for every i.
/// Throws std::invalid_argument if I is not Artinian.
std::vector<Monomial> socle_monomials(const MonomialIdeal& I);

/// Generators of m^k: all exponent vectors of total degree k.
MonomialIdeal power_of_maximal_ideal(int nvars, int k);

}  // namespace montrace
