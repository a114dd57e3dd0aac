#pragma once

#include <optional>
#include <vector>

#include "montrace/hom.hpp"
#include "montrace/monomial.hpp"

namespace montrace {

/// Almost complete intersection I = (x_1^{a_1},...,x_n^{a_n}, x^b):
/// 0 <= b_i < a_i everywhere and b_i > 0 for at least two i.
struct AciSpec {
  std::vector<int> a, b;
  int nvars() const { return static_cast<int>(a.size()); }
  MonomialIdeal defining_ideal() const;
};

AciSpec make_aci_spec(std::vector<int> a, std::vector<int> b);  // validates

/// Trace generators {x_i^{a_i-b_i} : b_i>0} + {w/x_i^{b_i} : b_i>0},
/// minimalized; Teter flag: exist j != j' with 2b_j >= a_j and 2b_{j'} >= a_{j'}.
std::pair<MonomialIdeal, bool> aci_trace_and_type(const AciSpec& spec);

/// G = S/(x_i^{a_i+1}); parameters for the quotients R/(0 : n^k).
struct PowerQuotientSpec {
  std::vector<int> a;  // a_i >= 1
  int k = 1;           // n^k != 0 in G, i.e. k <= sum(a)
  int nvars() const { return static_cast<int>(a.size()); }
  int min_a() const;
};

PowerQuotientSpec make_power_quotient_spec(std::vector<int> a, int k);  // validates

/// Defining ideal of R/(0 : n^k) = S/((x^{a+1}) : m^k), via the colon.
MonomialIdeal power_quotient_ideal(const PowerQuotientSpec& spec);

/// Gen(I_k): all exponent vectors b with 0 <= b_i <= a_i and sum b_i = k.
/// Requires k <= min(a); the theorem asserts these generate the trace.
std::vector<Monomial> chopin_trace(const PowerQuotientSpec& spec);

/// Squarefree case a = (1,...,1): trace generators are the squarefree
/// degree-k0 monomials, k0 = min(k, n-k); Teter type iff k <= n-k.
std::pair<std::vector<Monomial>, bool> mozart(int n, int k);

/// Codimension-2 monomial complete intersection G = S/(x^a, y^b), R = G/n^k:
/// trace = m_R^e. Returns e. Requires 2 <= a <= b and 1 <= k <= a+b-2.
int ci2_trace(int a, int b, int k);
MonomialIdeal ci2_defining_ideal(int a, int b, int k);

/// R = S/(x_1^2,...,x_n^2, w0) with w0 squarefree of degree >= 2:
/// the trace is generated by the variables dividing w0. Returns their indices.
std::vector<int> beethoven_trace(int n, const Monomial& w0);

/// Evidence report for the conjecture after the section-3 theorem: does
/// |Gen(I_1)| < ... < |Gen(I_k)| predict trace = I_k?
struct ConjectureProbe {
  PowerQuotientSpec spec;
  std::vector<long long> gen_counts;  // |Gen(I_1)| .. |Gen(I_k)|
  bool strictly_increasing = false;
  MonomialIdeal engine_trace;
  MonomialIdeal ik_ideal;  // generated by the Gen(I_k) monomials that are standard
  bool agree = false;
};

ConjectureProbe conjecture_probe(const PowerQuotientSpec& spec);

/// Engine cross-checks used by the CLI's --verify mode and the tests.
bool verify_aci(const AciSpec& spec);
bool verify_chopin(const PowerQuotientSpec& spec);
bool verify_mozart(int n, int k);
bool verify_ci2(int a, int b, int k);
bool verify_beethoven(int n, const Monomial& w0);

}  // namespace montrace
