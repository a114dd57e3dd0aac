#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "montrace/monomial.hpp"

namespace montrace {

/// The divisor poset P of R = S/I: the standard monomials ordered by
/// u <= v iff v | u. The unit monomial is the unique maximal element;
/// the minimal elements are the socle monomials. Cover steps are single
/// variable multiplications/divisions.
struct DivisorPoset {
  StandardBasis basis;  // sorted by (degree, lex); element ids are positions
  MonomialIdeal ideal;  // the defining ideal, kept for reports
  std::unordered_map<Monomial, int, MonomialHash> index;
  // upper covers of u: the u/x_i inside P (toward 1); lower covers: the u*x_i.
  std::vector<std::vector<int>> upper_covers, lower_covers;
  // mult_var[i][u] = id of u*x_i, or -1 if not standard; div_var likewise.
  std::vector<std::vector<int>> mult_var, div_var;

  int size() const { return static_cast<int>(basis.monomials.size()); }
  const Monomial& mono(int id) const {
    return basis.monomials[static_cast<std::size_t>(id)];
  }
  int nvars() const { return basis.nvars; }
  int find(const Monomial& m) const {
    auto it = index.find(m);
    return it == index.end() ? -1 : it->second;
  }
  /// Socle of P = ids of the divisibility-maximal standard monomials.
  std::vector<int> socle() const;
};

DivisorPoset build_divisor_poset(const MonomialIdeal& I);

/// A monomial ideal of R as a downward closed subset of P, with its Gen
/// (divisibility-minimal members) and Soc (divisibility-maximal members).
struct PosetIdealView {
  const DivisorPoset* poset = nullptr;
  std::vector<int> members;  // sorted element ids
  std::vector<int> gen, soc; // sorted element ids

  bool empty() const { return members.empty(); }
  bool has_member(int id) const;
};

/// Downward closure of the given generators (which must lie in P).
PosetIdealView ideal_view(const DivisorPoset& P, const std::vector<Monomial>& gens);

/// View over an explicit member set; validates downward closedness.
PosetIdealView view_from_members(const DivisorPoset& P, std::vector<int> members);

/// Members of V as a monomial ideal of S (generated by Gen(V)).
MonomialIdeal view_ideal(const PosetIdealView& V);

/// DOT digraph: one edge per cover, elements grouped by total degree,
/// highlighted members drawn filled. var_names may be empty (defaults used).
std::string to_dot(const DivisorPoset& P,
                   const PosetIdealView* highlight = nullptr,
                   const std::vector<std::string>& var_names = {});

}  // namespace montrace
