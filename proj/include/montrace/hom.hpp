#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "montrace/poset.hpp"

namespace montrace {

/// Multidegree m of a multigraded homomorphism omega_R -> R in the poset
/// normalization: phi(v*) = c_v * (m/v). m need not lie in P, but a nonzero
/// degree-m hom forces m = u*w with u, w standard.
using HomDegree = Monomial;

/// The degree-m slice of Hom(omega_R, R), combinatorially: the live support
/// {u in P : u | m, m/u in P} partitioned into scalar-equality components,
/// with the components on which the scalar is forced to vanish flagged.
///
/// Degree-m homs are exactly the assignments constant on components and zero
/// on flagged ones. A component is flagged iff it contains some u with, for
/// some i, either
///   (A) u*x_i in P but u*x_i not live, or
///   (B) x_i does not divide u and (m/u)*x_i in P.
struct HomComponentSet {
  HomDegree degree;
  std::vector<int> live;                  // sorted element ids
  std::vector<int> partner;               // partner[k] = id of m/live[k]
  std::vector<std::vector<int>> components;  // partition of live, each sorted
  std::vector<char> zero_flag;               // per component
  int nonzero_dimension() const;
};

enum class TeterVerdict { Yes, No, Gorenstein };

struct TraceReport {
  MonomialIdeal trace;  // minimal generators, all standard monomials
  std::vector<std::pair<HomDegree, MonomialIdeal>> degree_images;  // nonzero only
  bool gorenstein = false;
  bool nearly_gorenstein = false;
  TeterVerdict teter_type = TeterVerdict::No;
  std::optional<HomDegree> witness_degree;
  std::optional<int> teter_number;  // multigraded; empty if Gorenstein or capped
  std::vector<HomDegree> teter_witnesses;
  bool teter_number_computed = false;
};

/// All degrees that can carry a nonzero hom: {u*w : u, w in P}, deduplicated.
std::vector<HomDegree> candidate_degrees(const DivisorPoset& P);

HomComponentSet hom_components(const DivisorPoset& P, const HomDegree& m);

/// Ideal generated by {m/u : u in a non-flagged component}; the image of one
/// degree-m hom with all component scalars nonzero. May be the zero ideal.
MonomialIdeal degree_image(const DivisorPoset& P, const HomDegree& m);

/// The multigraded canonical trace with all verdicts filled in.
TraceReport trace_multigraded(const DivisorPoset& P);

/// Teter-type verdict alone (gorenstein / yes+witness / no).
std::pair<TeterVerdict, std::optional<HomDegree>> teter_type_multigraded(
    const DivisorPoset& P);

struct TeterNumberResult {
  bool computed = false;  // false when the dominance-reduced set count exceeds the cap
  int number = 0;
  std::vector<HomDegree> witnesses;
};

/// Minimum number of candidate degrees whose images jointly generate the
/// trace; exact branch-and-bound set cover. Throws on Gorenstein input.
TeterNumberResult teter_number_multigraded(const DivisorPoset& P);

/// Degree m with u -> m/u a bijection Gen(V) -> Soc(V), if one exists.
/// Candidates are the pair products gen x soc, each verified. Unique when it
/// exists. Throws on an empty view.
std::optional<HomDegree> is_symmetric(const DivisorPoset& P, const PosetIdealView& V);

/// Degree m making V2 a companion of V1: m/. maps Soc(V2) onto Gen(V1) and
/// Gen(V2) onto Soc(V1) bijectively. Throws if either view is empty.
std::optional<HomDegree> are_companions(const DivisorPoset& P,
                                        const PosetIdealView& V1,
                                        const PosetIdealView& V2);

/// Searches for a companion of V among the sets m/V, m ranging over products
/// of Gen(V) with P. Symmetric views return themselves.
std::optional<std::pair<PosetIdealView, HomDegree>> is_tau_ideal(
    const DivisorPoset& P, const PosetIdealView& V);

/// The natural tau-ideal of R = S/((x^c) + J): the image of
/// ((x^c) : J) in R, plus the claim flag "J*J in (x^c) and the image is
/// nonzero" under which the image is a symmetric ideal.
std::pair<MonomialIdeal, bool> natural_tau_ideal(const std::vector<int>& pure_powers,
                                                 const MonomialIdeal& J);

}  // namespace montrace
