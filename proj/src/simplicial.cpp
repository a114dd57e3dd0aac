#include "montrace/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace montrace {

namespace {

int popcount(std::uint64_t m) { return std::popcount(m); }

bool mask_less(std::uint64_t a, std::uint64_t b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

Monomial mask_monomial(int n, std::uint64_t mask) {
  Monomial m = Monomial::unit(n);
  for (int i = 0; i < n; ++i)
    if (mask & (1ull << i)) m.e[static_cast<std::size_t>(i)] = 1;
  return m;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (mask & (1ull << i)) out.push_back(i + 1);
  return out;
}

}  // namespace

bool SimplicialComplex::is_face(std::uint64_t mask) const {
  for (std::uint64_t f : facets)
    if ((mask & f) == mask) return true;
  return false;
}

std::vector<std::uint64_t> SimplicialComplex::faces() const {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t f : facets) {
    std::uint64_t sub = f;  // all submasks of f
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

SimplicialComplex complex_from_facets(int n,
                                      const std::vector<std::vector<int>>& facets) {
  if (n < 1 || n > 64) throw std::invalid_argument("vertex count out of range");
  std::vector<std::uint64_t> masks;
  std::uint64_t covered = 0;
  for (const auto& f : facets) {
    std::uint64_t m = 0;
    for (int v : f) {
      if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
      m |= 1ull << (v - 1);
    }
    covered |= m;
    masks.push_back(m);
  }
  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  if (covered != all)
    throw std::invalid_argument("every vertex must lie in some facet");
  std::vector<std::uint64_t> kept;
  for (std::uint64_t m : masks) {
    bool maximal = true;
    for (std::uint64_t other : masks)
      if (other != m && (m & other) == m) {
        maximal = false;
        break;
      }
    if (maximal) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), mask_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return SimplicialComplex{n, std::move(kept)};
}

std::vector<std::uint64_t> minimal_nonfaces(const SimplicialComplex& D) {
  std::vector<std::uint64_t> out;
  // A minimal non-face turns into a face when its largest vertex is deleted,
  // so every candidate arises as face + one vertex above the face's maximum.
  for (std::uint64_t f : D.faces()) {
    int top = f == 0 ? 0 : 64 - std::countl_zero(f);
    for (int v = top; v < D.n; ++v) {
      std::uint64_t cand = f | (1ull << v);
      if (D.is_face(cand)) continue;
      bool all_subsets_faces = true;
      std::uint64_t rest = cand;
      while (rest && all_subsets_faces) {
        std::uint64_t bit = rest & (~rest + 1);
        if (!D.is_face(cand & ~bit)) all_subsets_faces = false;
        rest &= rest - 1;
      }
      if (all_subsets_faces) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

bool is_flag(const SimplicialComplex& D) {
  for (std::uint64_t m : minimal_nonfaces(D))
    if (popcount(m) != 2) return false;
  return true;
}

MonomialIdeal kdelta_ideal(const SimplicialComplex& D) {
  std::vector<Monomial> gens;
  for (int i = 0; i < D.n; ++i) gens.push_back(Monomial::var(D.n, i, 2));
  for (std::uint64_t m : minimal_nonfaces(D)) gens.push_back(mask_monomial(D.n, m));
  return make_ideal(D.n, std::move(gens));
}

std::vector<std::uint64_t> free_faces(const SimplicialComplex& D) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f : D.faces()) {
    int count = 0;
    for (std::uint64_t facet : D.facets)
      if ((f & facet) == f) ++count;
    if (count == 1) out.push_back(f);
  }
  return out;
}

std::vector<std::uint64_t> minimal_free_faces(const SimplicialComplex& D) {
  std::vector<std::uint64_t> all = free_faces(D);
  std::vector<std::uint64_t> out;
  for (std::uint64_t f : all) {
    bool minimal = true;
    for (std::uint64_t g : all)
      if (g != f && (g & f) == g) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::vector<Monomial> flag_trace_gens(const SimplicialComplex& D) {
  if (!is_flag(D))
    throw std::invalid_argument("the free-face trace theorem needs a flag complex");
  std::vector<Monomial> gens;
  for (std::uint64_t f : minimal_free_faces(D)) gens.push_back(mask_monomial(D.n, f));
  std::sort(gens.begin(), gens.end());
  return gens;
}

bool verify_flag_trace(const SimplicialComplex& D) {
  std::vector<Monomial> gens = flag_trace_gens(D);
  DivisorPoset P = build_divisor_poset(kdelta_ideal(D));
  return trace_multigraded(P).trace.gens == gens;
}

SimplicialComplex independence_complex(const std::vector<std::pair<int, int>>& edges,
                                       int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("vertex count out of range");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  std::unordered_set<std::uint64_t> seen;
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("vertex out of range");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    std::uint64_t key = (1ull << (a - 1)) | (1ull << (b - 1));
    if (!seen.insert(key).second)
      throw std::invalid_argument("multi-edges are not allowed");
    adj[static_cast<std::size_t>(a - 1)] |= 1ull << (b - 1);
    adj[static_cast<std::size_t>(b - 1)] |= 1ull << (a - 1);
  }
  std::vector<std::uint64_t> facets;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool independent = true;
    for (int v = 0; independent && v < n; ++v)
      if ((mask & (1ull << v)) && (adj[static_cast<std::size_t>(v)] & mask))
        independent = false;
    if (!independent) continue;
    bool maximal = true;
    for (int v = 0; maximal && v < n; ++v)
      if (!(mask & (1ull << v)) && !(adj[static_cast<std::size_t>(v)] & mask))
        maximal = false;
    if (maximal) facets.push_back(mask);
  }
  std::sort(facets.begin(), facets.end(), mask_less);
  return SimplicialComplex{n, std::move(facets)};
}

std::vector<std::pair<int, int>> path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

std::vector<std::pair<int, int>> cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  auto edges = path_graph(n);
  edges.emplace_back(1, n);
  return edges;
}

PathSequences path_sequences(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  PathSequences out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> a = mask_vertices(mask);
    const int s = static_cast<int>(a.size());
    auto at = [&](int i) {  // conventions a_0 = -1, a_{s+1} = n+2
      if (i == 0) return -1;
      if (i == s + 1) return n + 2;
      return a[static_cast<std::size_t>(i - 1)];
    };
    bool permissible = true, tau = true;
    for (int i = 0; i <= s; ++i) {
      int d = at(i + 1) - at(i);
      if (d != 2 && d != 3) permissible = false;
      if (d < 2 || d > 4) tau = false;
    }
    for (int i = 1; i <= s && tau; ++i)
      if (at(i - 1) == at(i) - 2 && at(i + 1) == at(i) + 2) tau = false;
    if (permissible) out.permissible.push_back(a);
    if (tau) out.tau_permissible.push_back(a);
  }
  std::sort(out.permissible.begin(), out.permissible.end());
  std::sort(out.tau_permissible.begin(), out.tau_permissible.end());
  return out;
}

CycleSequences cycle_sequences(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  CycleSequences out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> a = mask_vertices(mask);
    const int s = static_cast<int>(a.size());
    // cyclic gaps; for s = 1 the single wrap-around gap is n itself
    std::vector<int> gap(static_cast<std::size_t>(s));
    for (int i = 0; i + 1 < s; ++i)
      gap[static_cast<std::size_t>(i)] =
          a[static_cast<std::size_t>(i + 1)] - a[static_cast<std::size_t>(i)];
    gap[static_cast<std::size_t>(s - 1)] =
        n - a[static_cast<std::size_t>(s - 1)] + a[0];
    bool socle = true, trace = true;
    for (int g : gap) {
      if (g != 2 && g != 3) socle = false;
      if (g < 2 || g > 4) trace = false;
    }
    for (int i = 0; i < s && trace; ++i) {  // no member flanked by two gaps of 2
      int before = gap[static_cast<std::size_t>((i + s - 1) % s)];
      int after = gap[static_cast<std::size_t>(i)];
      if (before == 2 && after == 2) trace = false;
    }
    if (socle) out.socle_sets.push_back(a);
    if (trace) out.trace_gen_sets.push_back(a);
  }
  std::sort(out.socle_sets.begin(), out.socle_sets.end());
  std::sort(out.trace_gen_sets.begin(), out.trace_gen_sets.end());
  return out;
}

namespace {

std::vector<std::vector<int>> masks_to_vertex_lists(
    const std::vector<std::uint64_t>& masks) {
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(mask_vertices(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool verify_path_sequences(int n) {
  PathSequences s = path_sequences(n);
  SimplicialComplex D = independence_complex(path_graph(n), n);
  if (s.permissible != masks_to_vertex_lists(D.facets)) return false;
  if (s.tau_permissible != masks_to_vertex_lists(minimal_free_faces(D)))
    return false;
  return verify_flag_trace(D);
}

bool verify_cycle_sequences(int n) {
  CycleSequences s = cycle_sequences(n);
  SimplicialComplex D = independence_complex(cycle_graph(n), n);
  if (s.socle_sets != masks_to_vertex_lists(D.facets)) return false;
  if (s.trace_gen_sets != masks_to_vertex_lists(minimal_free_faces(D)))
    return false;
  // the flag theorem identifies the minimal free faces with the trace
  // generators; for n = 3 the complex is flag as well (its non-faces are the
  // three edges), so the engine comparison applies uniformly
  return verify_flag_trace(D);
}

FinitePoset poset_from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  const int m = static_cast<int>(labels.size());
  if (m < 1 || m > 16) throw std::invalid_argument("poset size out of range");
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < m; ++i)
    if (!index.emplace(labels[static_cast<std::size_t>(i)], i).second)
      throw std::invalid_argument("duplicate element label");
  FinitePoset P;
  P.labels = std::move(labels);
  P.less.assign(static_cast<std::size_t>(m),
                std::vector<char>(static_cast<std::size_t>(m), 0));
  for (const auto& [lo, hi] : relations) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end() || b == index.end())
      throw std::invalid_argument("relation references an unknown element");
    if (a->second == b->second)
      throw std::invalid_argument("reflexive relation in strict order input");
    P.less[static_cast<std::size_t>(a->second)][static_cast<std::size_t>(b->second)] =
        1;
  }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (P.is_less(i, k) && P.is_less(k, j))
          P.less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  for (int i = 0; i < m; ++i)
    if (P.is_less(i, i)) throw std::invalid_argument("relations contain a cycle");
  return P;
}

std::vector<std::uint64_t> lattice_ideal_masks(const FinitePoset& P0) {
  const int m = P0.size();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    bool closed = true;
    for (int j = 0; closed && j < m; ++j) {
      if (!(mask & (1ull << j))) continue;
      for (int i = 0; i < m; ++i)
        if (P0.is_less(i, j) && !(mask & (1ull << i))) {
          closed = false;
          break;
        }
    }
    if (closed) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end(), mask_less);
  return masks;
}

FinitePoset lattice_of_ideals(const FinitePoset& P0) {
  std::vector<std::uint64_t> masks = lattice_ideal_masks(P0);
  FinitePoset L;
  for (std::uint64_t mask : masks) {
    std::string label = "{";
    bool first = true;
    for (int i = 0; i < P0.size(); ++i) {
      if (!(mask & (1ull << i))) continue;
      if (!first) label += ",";
      label += P0.labels[static_cast<std::size_t>(i)];
      first = false;
    }
    label += "}";
    L.labels.push_back(std::move(label));
  }
  const int sz = static_cast<int>(masks.size());
  L.less.assign(static_cast<std::size_t>(sz),
                std::vector<char>(static_cast<std::size_t>(sz), 0));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      if (i != j && (masks[static_cast<std::size_t>(i)] &
                     masks[static_cast<std::size_t>(j)]) ==
                        masks[static_cast<std::size_t>(i)])
        L.less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return L;
}

bool is_linear_extension(const FinitePoset& P0, const std::vector<int>& pi) {
  const int m = P0.size();
  if (static_cast<int>(pi.size()) != m) return false;
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  for (int v : pi) {
    if (v < 0 || v >= m || used[static_cast<std::size_t>(v)]) return false;
    used[static_cast<std::size_t>(v)] = 1;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (P0.is_less(pi[static_cast<std::size_t>(j)], pi[static_cast<std::size_t>(i)]))
        return false;
  return true;
}

std::vector<std::vector<int>> linear_extensions(const FinitePoset& P0) {
  const int m = P0.size();
  std::vector<std::vector<int>> out;
  std::vector<int> pi;
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(pi.size()) == m) {
      out.push_back(pi);
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool available = true;
      for (int u = 0; available && u < m; ++u)
        if (!used[static_cast<std::size_t>(u)] && P0.is_less(u, v)) available = false;
      if (!available) continue;
      used[static_cast<std::size_t>(v)] = 1;
      pi.push_back(v);
      self(self);
      pi.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec);
  return out;
}

std::vector<std::uint64_t> c_sharp(const FinitePoset& P0, const std::vector<int>& pi) {
  if (!is_linear_extension(P0, pi))
    throw std::invalid_argument("pi is not a linear extension");
  const int m = P0.size();
  // prefix lengths at which a maximal ascending run ends (last run excluded)
  std::vector<int> run_ends;
  for (int j = 0; j + 1 < m; ++j)
    if (!P0.is_less(pi[static_cast<std::size_t>(j)],
                    pi[static_cast<std::size_t>(j + 1)]))
      run_ends.push_back(j + 1);
  std::vector<std::uint64_t> chain;
  std::uint64_t mask = 0;
  int taken = 0;
  for (int len : run_ends) {
    while (taken < len) {
      mask |= 1ull << pi[static_cast<std::size_t>(taken)];
      ++taken;
    }
    chain.push_back(mask);
  }
  return chain;  // empty iff pi is one ascending run (P0 a chain)
}

SimplicialComplex order_complex(const FinitePoset& L) {
  const int m = L.size();
  if (m > 64) throw std::invalid_argument("poset too large for an order complex");
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!L.is_less(i, j)) continue;
      bool cover = true;
      for (int k = 0; cover && k < m; ++k)
        if (L.is_less(i, k) && L.is_less(k, j)) cover = false;
      if (cover) covers[static_cast<std::size_t>(i)].push_back(j);
    }
  std::vector<std::vector<int>> facet_lists;
  std::vector<int> chain;
  auto rec = [&](auto&& self, int at) -> void {
    chain.push_back(at);
    if (covers[static_cast<std::size_t>(at)].empty()) {
      std::vector<int> f;
      for (int v : chain) f.push_back(v + 1);
      facet_lists.push_back(std::move(f));
    } else {
      for (int nxt : covers[static_cast<std::size_t>(at)]) self(self, nxt);
    }
    chain.pop_back();
  };
  for (int i = 0; i < m; ++i) {
    bool minimal = true;
    for (int j = 0; minimal && j < m; ++j)
      if (L.is_less(j, i)) minimal = false;
    if (minimal) rec(rec, i);
  }
  return complex_from_facets(m, facet_lists);
}

DistributiveReport distributive_trace_gens(const FinitePoset& P0) {
  DistributiveReport rep;
  std::vector<std::uint64_t> masks = lattice_ideal_masks(P0);
  rep.lattice = lattice_of_ideals(P0);
  rep.complex = order_complex(rep.lattice);
  rep.extensions = linear_extensions(P0);
  std::unordered_map<std::uint64_t, int> vertex_of;  // ideal mask -> lattice vertex
  for (std::size_t i = 0; i < masks.size(); ++i)
    vertex_of.emplace(masks[i], static_cast<int>(i));
  const int nv = static_cast<int>(masks.size());
  for (const auto& pi : rep.extensions) {
    Monomial sharp = Monomial::unit(nv);
    for (std::uint64_t alpha : c_sharp(P0, pi))
      sharp.e[static_cast<std::size_t>(vertex_of.at(alpha))] = 1;
    Monomial full = Monomial::unit(nv);
    std::uint64_t mask = 0;
    full.e[static_cast<std::size_t>(vertex_of.at(0))] = 1;  // the empty ideal
    for (int v : pi) {
      mask |= 1ull << v;
      full.e[static_cast<std::size_t>(vertex_of.at(mask))] = 1;
    }
    rep.trace_gens.push_back(sharp);
    rep.intervals.emplace_back(std::move(sharp), std::move(full));
  }
  std::sort(rep.trace_gens.begin(), rep.trace_gens.end());
  rep.trace_gens.erase(std::unique(rep.trace_gens.begin(), rep.trace_gens.end()),
                       rep.trace_gens.end());
  return rep;
}

bool verify_distributive(const FinitePoset& P0) {
  DistributiveReport rep = distributive_trace_gens(P0);
  DivisorPoset P = build_divisor_poset(kdelta_ideal(rep.complex));
  TraceReport trace = trace_multigraded(P);
  if (trace.trace.gens != rep.trace_gens) return false;
  // Interval decomposition: the downward closure of u_{C#} must be exactly
  // the interval [u_{C#}, u_{Cpi}], a symmetric poset ideal; the intervals
  // must be pairwise disjoint and cover the trace members.
  std::vector<char> seen(static_cast<std::size_t>(P.size()), 0);
  std::size_t covered = 0;
  for (const auto& [sharp, full] : rep.intervals) {
    PosetIdealView V = ideal_view(P, {sharp});
    for (int id : V.members) {
      const Monomial& mem = P.mono(id);
      if (!sharp.divides(mem) || !mem.divides(full)) return false;
      if (seen[static_cast<std::size_t>(id)]) return false;
      seen[static_cast<std::size_t>(id)] = 1;
      ++covered;
    }
    if (V.soc.size() != 1 || !(P.mono(V.soc.front()) == full)) return false;
    if (!is_symmetric(P, V).has_value()) return false;
  }
  std::size_t trace_members = 0;
  for (int id = 0; id < P.size(); ++id)
    if (trace.trace.contains(P.mono(id))) {
      ++trace_members;
      if (!seen[static_cast<std::size_t>(id)]) return false;
    }
  return covered == trace_members;
}

}  // namespace montrace
