#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "montrace/hom.hpp"
#include "montrace/monomial.hpp"

namespace montrace {

/// Simplicial complex on [n] given by its facets; faces are vertex bitmasks
/// (bit i-1 = vertex i). Every vertex must lie in some facet. n <= 64.
struct SimplicialComplex {
  int n = 0;
  std::vector<std::uint64_t> facets;  // pairwise non-containing, sorted

  bool is_face(std::uint64_t mask) const;
  /// All faces including the empty face, sorted by (popcount, mask).
  std::vector<std::uint64_t> faces() const;
};

/// Builds the complex, dropping non-maximal input facets. Vertices 1-based.
SimplicialComplex complex_from_facets(int n,
                                      const std::vector<std::vector<int>>& facets);

std::vector<std::uint64_t> minimal_nonfaces(const SimplicialComplex& D);
bool is_flag(const SimplicialComplex& D);

/// K{Delta} = S/(I_Delta, x_1^2, ..., x_n^2).
MonomialIdeal kdelta_ideal(const SimplicialComplex& D);

/// Faces contained in exactly one facet (the empty face qualifies iff the
/// complex is a simplex), and the inclusion-minimal ones among them.
std::vector<std::uint64_t> free_faces(const SimplicialComplex& D);
std::vector<std::uint64_t> minimal_free_faces(const SimplicialComplex& D);

/// Trace generators {u_F : F minimal free face} of a flag complex.
/// Throws std::invalid_argument when the complex is not flag.
std::vector<Monomial> flag_trace_gens(const SimplicialComplex& D);
bool verify_flag_trace(const SimplicialComplex& D);  // engine cross-check

/// Independence complex of a simple graph (edges 1-based, no loops/multi).
SimplicialComplex independence_complex(const std::vector<std::pair<int, int>>& edges,
                                       int n);
std::vector<std::pair<int, int>> path_graph(int n);   // edges {i, i+1}
std::vector<std::pair<int, int>> cycle_graph(int n);  // plus {1, n}, n >= 3

/// Gap-window characterizations for paths: permissible sequences are the
/// facets of the independence complex, tau-permissible ones its minimal free
/// faces (= trace generators). Boundary conventions a_0 = -1, a_{s+1} = n+2.
struct PathSequences {
  std::vector<std::vector<int>> permissible, tau_permissible;  // 1-based, sorted
};
PathSequences path_sequences(int n);  // n >= 2

/// Cycle analogue: a nonempty F in [n] is a socle set iff every cyclic gap is
/// 2 or 3, and a trace generator set iff every gap is in {2,3,4} and no
/// member has both neighboring gaps equal to 2 (for |F| = 1 the single gap is
/// n itself, on both sides).
struct CycleSequences {
  std::vector<std::vector<int>> socle_sets, trace_gen_sets;
};
CycleSequences cycle_sequences(int n);  // n >= 3

/// Engine cross-checks: the enumerations equal the facets and the minimal
/// free faces (= trace generators) of the independence complex.
bool verify_path_sequences(int n);
bool verify_cycle_sequences(int n);

/// Finite poset with named elements; `less` is the strict order, stored
/// transitively closed.
struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::vector<char>> less;

  int size() const { return static_cast<int>(labels.size()); }
  bool is_less(int i, int j) const {
    return less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
  }
};

/// Builds a poset from cover/order relations (closed transitively); rejects
/// cycles and duplicate labels.
FinitePoset poset_from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& relations);

/// Downward closed subsets of P0 as bitmasks, sorted by (popcount, mask).
std::vector<std::uint64_t> lattice_ideal_masks(const FinitePoset& P0);

/// The distributive lattice J(P0) ordered by inclusion; element labels are
/// canonical sorted member lists like "{a1,a2}".
FinitePoset lattice_of_ideals(const FinitePoset& P0);

/// All linear extensions as 0-based element index sequences, lexicographic.
std::vector<std::vector<int>> linear_extensions(const FinitePoset& P0);
bool is_linear_extension(const FinitePoset& P0, const std::vector<int>& pi);

/// The ascending-run prefix chain C_pi^# as poset-ideal bitmasks of P0
/// (empty when P0 is a chain). Throws if pi is not a linear extension.
std::vector<std::uint64_t> c_sharp(const FinitePoset& P0, const std::vector<int>& pi);

/// Order complex of a finite poset: faces are the chains.
SimplicialComplex order_complex(const FinitePoset& L);

struct DistributiveReport {
  FinitePoset lattice;
  SimplicialComplex complex;                 // order complex of the lattice
  std::vector<std::vector<int>> extensions;  // linear extensions of P0
  std::vector<Monomial> trace_gens;          // sorted u_{C_pi^#}
  // per extension: (u_{C_pi^#}, u_{C_pi}) over the lattice-vertex variables
  std::vector<std::pair<Monomial, Monomial>> intervals;
};

/// Trace generators of K{Delta(J(P0))} by the closed form, with the interval
/// decomposition [u_{C_pi^#}, u_{C_pi}].
DistributiveReport distributive_trace_gens(const FinitePoset& P0);

/// Engine cross-check: closed form equals the computed trace, the intervals
/// are pairwise disjoint symmetric poset ideals, and their union is the trace.
bool verify_distributive(const FinitePoset& P0);

}  // namespace montrace
