#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "montrace/monomial.hpp"

namespace montrace {

struct SelfcheckOptions {
  int samples = 200;
  int max_vars = 3;
  int max_exp = 4;
  std::uint64_t seed = 0;
  std::uint64_t prime = 2147483647ull;
};

struct SelfcheckResult {
  int samples = 0;
  int small_poset_instances = 0;  // |P| <= 12, union-law checked
  int companion_pairs = 0;        // found during the fuzz
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Seeded random Artinian ideal: pure powers of every variable plus a few
/// dominated extra generators, all exponents <= max_exp.
MonomialIdeal random_artinian_ideal(std::mt19937_64& rng, int max_vars, int max_exp);

/// The differential oracle battery:
///  - engine trace == finite-field hom-space trace,
///  - per-degree slice dimension == non-flagged component count,
///  - full dimension == sum of slice dimensions, relations re-checked,
///  - |P| <= 12: the union of all symmetric poset ideals == trace, and
///    teter yes <=> trace view symmetric <=> teter number 1,
///  - every companion pair found has a symmetric union of the same degree,
///  - teter number <= number of trace generators.
SelfcheckResult run_selfcheck(const SelfcheckOptions& opts);

}  // namespace montrace
