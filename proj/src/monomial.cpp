#include "montrace/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace montrace {

Monomial Monomial::var(int nvars, int i, int power) {
  Monomial m = unit(nvars);
  m.e.at(static_cast<std::size_t>(i)) = power;
  return m;
}

int Monomial::total_degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (e.size() != other.e.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  if (e.size() != other.e.size())
    throw std::invalid_argument("monomial arity mismatch");
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += other.e[i];
  return r;
}

Monomial Monomial::times_var(int var) const {
  Monomial r(*this);
  r.e.at(static_cast<std::size_t>(var)) += 1;
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this))
    throw std::invalid_argument("inexact monomial division");
  Monomial r(*this);
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= divisor.e[i];
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : m.e) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (int i = 0; i < m.arity(); ++i) {
    if (m.e[static_cast<std::size_t>(i)] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.at(static_cast<std::size_t>(i));
    if (m.e[static_cast<std::size_t>(i)] > 1)
      s += "^" + std::to_string(m.e[static_cast<std::size_t>(i)]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::string> default_var_names(int nvars) {
  static const char* few[] = {"x", "y", "z"};
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) {
    if (nvars <= 3)
      names.emplace_back(few[i]);
    else
      names.emplace_back("x" + std::to_string(i + 1));
  }
  return names;
}

bool MonomialIdeal::is_unit() const {
  return gens.size() == 1 && gens.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& u) const {
  for (const Monomial& g : gens)
    if (g.divides(u)) return true;
  return false;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal make_ideal(int nvars, std::vector<Monomial> gens) {
  if (nvars < 0) throw std::invalid_argument("negative arity");
  for (const Monomial& g : gens) {
    if (g.arity() != nvars) throw std::invalid_argument("generator arity mismatch");
    for (int x : g.e)
      if (x < 0) throw std::invalid_argument("negative exponent");
  }
  return MonomialIdeal{nvars, minimalize(std::move(gens))};
}

bool is_artinian(const MonomialIdeal& I) {
  for (int i = 0; i < I.nvars; ++i) {
    bool pure = false;
    for (const Monomial& g : I.gens) {
      bool only_i = g.e[static_cast<std::size_t>(i)] > 0;
      for (int j = 0; only_i && j < I.nvars; ++j)
        if (j != i && g.e[static_cast<std::size_t>(j)] != 0) only_i = false;
      if (only_i) {
        pure = true;
        break;
      }
    }
    if (!pure) return false;
  }
  return true;
}

StandardBasis standard_monomials(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("unit ideal has no standard monomials");
  if (!is_artinian(I)) throw std::invalid_argument("ideal is not Artinian");
  // Bounding box from the minimal pure powers: x_i^{p_i} in I forces e_i < p_i.
  std::vector<int> bound(static_cast<std::size_t>(I.nvars), 0);
  for (int i = 0; i < I.nvars; ++i) {
    int best = -1;
    for (const Monomial& g : I.gens) {
      bool only_i = g.e[static_cast<std::size_t>(i)] > 0;
      for (int j = 0; only_i && j < I.nvars; ++j)
        if (j != i && g.e[static_cast<std::size_t>(j)] != 0) only_i = false;
      if (only_i && (best < 0 || g.e[static_cast<std::size_t>(i)] < best))
        best = g.e[static_cast<std::size_t>(i)];
    }
    bound[static_cast<std::size_t>(i)] = best;  // >= 1, exists by Artinian test
  }
  // Depth-first walk of the box, pruning a subtree as soon as the prefix is
  // already a multiple of a generator (all completions then lie in I as well).
  const int n = I.nvars;
  std::vector<int> last_support(I.gens.size(), -1);
  for (std::size_t g = 0; g < I.gens.size(); ++g)
    for (int i = 0; i < n; ++i)
      if (I.gens[g].e[static_cast<std::size_t>(i)] > 0) last_support[g] = i;

  StandardBasis basis;
  basis.nvars = n;
  Monomial cur = Monomial::unit(n);
  std::vector<std::vector<int>> alive_at(static_cast<std::size_t>(n) + 1);
  alive_at[0].resize(I.gens.size());
  for (std::size_t g = 0; g < I.gens.size(); ++g)
    alive_at[0][g] = static_cast<int>(g);

  auto rec = [&](auto&& self, int i) -> void {
    // alive_at[i]: generators dividing cur on the coordinates < i
    for (int g : alive_at[static_cast<std::size_t>(i)])
      if (last_support[static_cast<std::size_t>(g)] < i) return;  // cur in I
    if (i == n) {
      if (basis.monomials.size() >= (1u << 22))
        throw std::length_error("standard basis too large to enumerate");
      basis.monomials.push_back(cur);
      return;
    }
    auto& next = alive_at[static_cast<std::size_t>(i) + 1];
    for (int e = 0; e < bound[static_cast<std::size_t>(i)]; ++e) {
      cur.e[static_cast<std::size_t>(i)] = e;
      next.clear();
      for (int g : alive_at[static_cast<std::size_t>(i)])
        if (I.gens[static_cast<std::size_t>(g)].e[static_cast<std::size_t>(i)] <= e)
          next.push_back(g);
      self(self, i + 1);
    }
    cur.e[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0);
  std::sort(basis.monomials.begin(), basis.monomials.end());
  return basis;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars != J.nvars) throw std::invalid_argument("ideal arity mismatch");
  std::vector<Monomial> gens = I.gens;
  gens.insert(gens.end(), J.gens.begin(), J.gens.end());
  return make_ideal(I.nvars, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars != J.nvars) throw std::invalid_argument("ideal arity mismatch");
  std::vector<Monomial> gens;
  for (const Monomial& a : I.gens)
    for (const Monomial& b : J.gens) {
      Monomial l = a;
      for (std::size_t i = 0; i < l.e.size(); ++i)
        l.e[i] = std::max(l.e[i], b.e[i]);
      gens.push_back(std::move(l));
    }
  return make_ideal(I.nvars, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g) {
  if (I.nvars != g.arity()) throw std::invalid_argument("ideal arity mismatch");
  std::vector<Monomial> gens;
  gens.reserve(I.gens.size());
  for (const Monomial& m : I.gens) {
    Monomial q = m;
    for (std::size_t i = 0; i < q.e.size(); ++i)
      q.e[i] = std::max(0, q.e[i] - g.e[i]);
    gens.push_back(std::move(q));
  }
  return make_ideal(I.nvars, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars != J.nvars) throw std::invalid_argument("ideal arity mismatch");
  if (J.is_zero()) return MonomialIdeal{I.nvars, {Monomial::unit(I.nvars)}};
  bool first = true;
  MonomialIdeal result;
  for (const Monomial& g : J.gens) {
    MonomialIdeal part = colon(I, g);
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& I) {
  StandardBasis basis = standard_monomials(I);
  std::vector<Monomial> soc;
  for (const Monomial& u : basis.monomials) {
    bool in_soc = true;
    for (int i = 0; in_soc && i < I.nvars; ++i)
      if (!I.contains(u.times_var(i))) in_soc = false;
    if (in_soc) soc.push_back(u);
  }
  return soc;
}

MonomialIdeal power_of_maximal_ideal(int nvars, int k) {
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
  if (k < 1) throw std::invalid_argument("power must be >= 1");
  std::vector<Monomial> gens;
  Monomial cur = Monomial::unit(nvars);
  // Enumerate compositions of k into nvars parts.
  std::vector<int> comp(static_cast<std::size_t>(nvars), 0);
  comp[0] = k;
  while (true) {
    gens.emplace_back(comp);
    // next composition in colex-ish order
    int i = 0;
    while (i < nvars - 1 && comp[static_cast<std::size_t>(i)] == 0) ++i;
    if (i == nvars - 1) break;
    int v = comp[static_cast<std::size_t>(i)];
    comp[static_cast<std::size_t>(i)] = 0;
    comp[0] = v - 1;
    comp[static_cast<std::size_t>(i + 1)] += 1;
  }
  return make_ideal(nvars, std::move(gens));
}

}  // namespace montrace
