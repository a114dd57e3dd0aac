#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "montrace/hom.hpp"
#include "montrace/modp.hpp"
#include "montrace/poset.hpp"

namespace montrace {

/// Which hom spaces to solve for: the whole of Hom(omega_R, R), one total
/// degree, or one multidegree.
struct HomSenseSpec {
  enum class Kind { Full, Graded, Multigraded } kind = Kind::Full;
  int degree = 0;        // Graded
  Monomial multidegree;  // Multigraded

  static HomSenseSpec full() { return {}; }
  static HomSenseSpec graded(int d) { return {Kind::Graded, d, {}}; }
  static HomSenseSpec multigraded(Monomial m) {
    return {Kind::Multigraded, 0, std::move(m)};
  }
};

/// A basis of the hom space over F_p, solved from the raw linearity relations
/// phi(x_i v*) = x_i phi(v*) with unknowns "coefficient of w in phi(v*)".
struct HomSolutionSpace {
  HomSenseSpec sense;
  std::uint64_t prime = 0;
  std::vector<std::pair<int, int>> unknowns;       // (v, w) element ids
  std::vector<std::vector<std::uint64_t>> basis;   // reduced, deterministic
  std::size_t dimension() const { return basis.size(); }
};

HomSolutionSpace hom_basis(const DivisorPoset& P, const HomSenseSpec& sense,
                           std::uint64_t p);

/// Recomputes every linearity relation against a basis element; used to
/// cross-check the solver output rather than trusting it.
bool verify_relations(const DivisorPoset& P, const HomSolutionSpace& space);

/// The canonical trace recomputed from the full hom space: the sum of the
/// spans of phi(v*), closed under multiplication by the variables. Throws
/// std::logic_error if the span is not monomial-supported.
MonomialIdeal trace_oracle(const DivisorPoset& P, std::uint64_t p);

enum class RandomVerdict { Yes, ProbablyNo, Gorenstein };

struct RandomizedReport {
  std::string sense;  // "graded" or "local"
  RandomVerdict verdict = RandomVerdict::ProbablyNo;
  std::optional<int> witness_total_degree;  // graded yes only
  std::uint64_t prime = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Graded / local Teter-type decision by maximal-image sampling: draws
/// `trials` random coefficient vectors per admissible slice and certifies
/// "yes" iff a sampled hom's image span equals the trace span. One-sided:
/// yes is exact, probably_no is Monte Carlo.
RandomizedReport teter_type_randomized(const DivisorPoset& P, bool graded_sense,
                                       std::uint64_t p, int trials,
                                       std::uint64_t seed);

}  // namespace montrace
