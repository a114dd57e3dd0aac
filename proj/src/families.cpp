#include "montrace/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace montrace {

namespace {

// All exponent vectors with 0 <= e_i <= cap_i and total degree exactly k.
std::vector<Monomial> bounded_compositions(const std::vector<int>& cap, int k) {
  std::vector<Monomial> out;
  const int n = static_cast<int>(cap.size());
  Monomial cur = Monomial::unit(n);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      if (left <= cap[static_cast<std::size_t>(i)]) {
        cur.e[static_cast<std::size_t>(i)] = left;
        out.push_back(cur);
        cur.e[static_cast<std::size_t>(i)] = 0;
      }
      return;
    }
    for (int v = 0; v <= std::min(left, cap[static_cast<std::size_t>(i)]); ++v) {
      cur.e[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
    cur.e[static_cast<std::size_t>(i)] = 0;
  };
  if (n > 0) rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MonomialIdeal AciSpec::defining_ideal() const {
  const int n = nvars();
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(Monomial::var(n, i, a[static_cast<std::size_t>(i)]));
  gens.emplace_back(b);
  return make_ideal(n, std::move(gens));
}

AciSpec make_aci_spec(std::vector<int> a, std::vector<int> b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("a and b must be nonempty of equal length");
  int positive = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw std::invalid_argument("a_i must be >= 1");
    if (b[i] < 0 || b[i] >= a[i])
      throw std::invalid_argument("need 0 <= b_i < a_i");
    if (b[i] > 0) ++positive;
  }
  if (positive < 2)
    throw std::invalid_argument("need b_i > 0 for at least two indices");
  return AciSpec{std::move(a), std::move(b)};
}

std::pair<MonomialIdeal, bool> aci_trace_and_type(const AciSpec& spec) {
  const int n = spec.nvars();
  Monomial w(spec.b);
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    std::size_t s = static_cast<std::size_t>(i);
    if (spec.b[s] == 0) continue;
    gens.push_back(Monomial::var(n, i, spec.a[s] - spec.b[s]));
    Monomial q = w;
    q.e[s] = 0;
    gens.push_back(std::move(q));
  }
  int big = 0;
  for (std::size_t i = 0; i < spec.a.size(); ++i)
    if (spec.b[i] > 0 && 2 * spec.b[i] >= spec.a[i]) ++big;
  return {make_ideal(n, std::move(gens)), big >= 2};
}

int PowerQuotientSpec::min_a() const {
  return *std::min_element(a.begin(), a.end());
}

PowerQuotientSpec make_power_quotient_spec(std::vector<int> a, int k) {
  if (a.empty()) throw std::invalid_argument("need at least one variable");
  int total = 0;
  for (int v : a) {
    if (v < 1) throw std::invalid_argument("a_i must be >= 1");
    total += v;
  }
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > total)
    throw std::invalid_argument("n^k = 0 in G: k exceeds the socle degree");
  return PowerQuotientSpec{std::move(a), k};
}

MonomialIdeal power_quotient_ideal(const PowerQuotientSpec& spec) {
  const int n = spec.nvars();
  std::vector<Monomial> pure;
  for (int i = 0; i < n; ++i)
    pure.push_back(Monomial::var(n, i, spec.a[static_cast<std::size_t>(i)] + 1));
  return colon(make_ideal(n, std::move(pure)), power_of_maximal_ideal(n, spec.k));
}

std::vector<Monomial> chopin_trace(const PowerQuotientSpec& spec) {
  if (spec.nvars() < 2)
    throw std::invalid_argument(
        "theorem requires at least two variables (one variable gives a "
        "Gorenstein quotient)");
  if (spec.k > spec.min_a())
    throw std::invalid_argument("theorem requires k <= min(a)");
  return bounded_compositions(spec.a, spec.k);
}

std::pair<std::vector<Monomial>, bool> mozart(int n, int k) {
  if (n < 1 || k < 1 || k > n - 1)
    throw std::invalid_argument("need 1 <= k <= n-1");
  int k0 = std::min(k, n - k);
  return {bounded_compositions(std::vector<int>(static_cast<std::size_t>(n), 1), k0),
          k <= n - k};
}

int ci2_trace(int a, int b, int k) {
  if (a < 2 || b < a) throw std::invalid_argument("need 2 <= a <= b");
  if (k < 1 || k > a + b - 2)
    throw std::invalid_argument("need 1 <= k <= a+b-2");
  if (k <= a) return k - 1;
  if (k <= b) return a - 1;
  return a + b - 1 - k;
}

MonomialIdeal ci2_defining_ideal(int a, int b, int k) {
  ci2_trace(a, b, k);  // range validation
  MonomialIdeal ci =
      make_ideal(2, {Monomial::var(2, 0, a), Monomial::var(2, 1, b)});
  return sum(ci, power_of_maximal_ideal(2, k));
}

std::vector<int> beethoven_trace(int n, const Monomial& w0) {
  if (w0.arity() != n) throw std::invalid_argument("w0 arity mismatch");
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    int e = w0.e[static_cast<std::size_t>(i)];
    if (e > 1) throw std::invalid_argument("w0 must be squarefree");
    if (e == 1) support.push_back(i);
  }
  if (support.size() < 2)
    throw std::invalid_argument("w0 must have degree >= 2");
  return support;
}

ConjectureProbe conjecture_probe(const PowerQuotientSpec& spec) {
  ConjectureProbe probe;
  probe.spec = spec;
  for (int j = 1; j <= spec.k; ++j)
    probe.gen_counts.push_back(
        static_cast<long long>(bounded_compositions(spec.a, j).size()));
  probe.strictly_increasing = true;
  for (std::size_t j = 1; j < probe.gen_counts.size(); ++j)
    if (probe.gen_counts[j - 1] >= probe.gen_counts[j])
      probe.strictly_increasing = false;

  DivisorPoset P = build_divisor_poset(power_quotient_ideal(spec));
  probe.engine_trace = trace_multigraded(P).trace;
  std::vector<Monomial> standard_gens;
  for (const Monomial& g : bounded_compositions(spec.a, spec.k))
    if (P.find(g) >= 0) standard_gens.push_back(g);
  probe.ik_ideal = make_ideal(spec.nvars(), std::move(standard_gens));
  probe.agree = probe.engine_trace == probe.ik_ideal;
  return probe;
}

bool verify_aci(const AciSpec& spec) {
  auto [trace, teter] = aci_trace_and_type(spec);
  DivisorPoset P = build_divisor_poset(spec.defining_ideal());
  TraceReport rep = trace_multigraded(P);
  if (rep.gorenstein) return false;  // ACIs here are never Gorenstein
  return rep.trace == trace && (rep.teter_type == TeterVerdict::Yes) == teter;
}

bool verify_chopin(const PowerQuotientSpec& spec) {
  std::vector<Monomial> gens = chopin_trace(spec);
  DivisorPoset P = build_divisor_poset(power_quotient_ideal(spec));
  TraceReport rep = trace_multigraded(P);
  if (rep.trace.gens != gens) return false;
  return rep.gorenstein || rep.teter_type == TeterVerdict::Yes;
}

bool verify_mozart(int n, int k) {
  auto [gens, teter] = mozart(n, k);
  PowerQuotientSpec spec =
      make_power_quotient_spec(std::vector<int>(static_cast<std::size_t>(n), 1), k);
  DivisorPoset P = build_divisor_poset(power_quotient_ideal(spec));
  TraceReport rep = trace_multigraded(P);
  if (rep.trace.gens != gens) return false;
  if (rep.gorenstein) return false;  // k <= n-1 keeps these non-Gorenstein
  return (rep.teter_type == TeterVerdict::Yes) == teter;
}

bool verify_ci2(int a, int b, int k) {
  int e = ci2_trace(a, b, k);
  DivisorPoset P = build_divisor_poset(ci2_defining_ideal(a, b, k));
  TraceReport rep = trace_multigraded(P);
  std::vector<Monomial> expected;
  if (e == 0) {
    expected = {Monomial::unit(2)};
  } else {
    for (const Monomial& g : power_of_maximal_ideal(2, e).gens)
      if (P.find(g) >= 0) expected.push_back(g);
  }
  if (rep.trace.gens != expected) return false;
  return rep.gorenstein || rep.teter_type == TeterVerdict::Yes;
}

bool verify_beethoven(int n, const Monomial& w0) {
  std::vector<int> support = beethoven_trace(n, w0);
  std::vector<Monomial> gens;
  for (int i : support) gens.push_back(Monomial::var(n, i));
  std::sort(gens.begin(), gens.end());
  std::vector<Monomial> defining;
  for (int i = 0; i < n; ++i) defining.push_back(Monomial::var(n, i, 2));
  defining.push_back(w0);
  DivisorPoset P = build_divisor_poset(make_ideal(n, std::move(defining)));
  TraceReport rep = trace_multigraded(P);
  return rep.trace.gens == gens && rep.teter_type == TeterVerdict::Yes;
}

}  // namespace montrace
