#include "montrace/hom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace montrace {

int HomComponentSet::nonzero_dimension() const {
  int d = 0;
  for (std::size_t c = 0; c < components.size(); ++c)
    if (!zero_flag[c]) ++d;
  return d;
}

namespace {

// Scratch for per-degree analysis; partner_of doubles as the liveness mark
// (>= 0 iff live). Reset between degrees via the live list.
struct Scratch {
  std::vector<int> partner_of, comp_of;
  explicit Scratch(int n) : partner_of(static_cast<std::size_t>(n), -1),
                            comp_of(static_cast<std::size_t>(n), -1) {}
  void reset(const std::vector<int>& live) {
    for (int u : live) {
      partner_of[static_cast<std::size_t>(u)] = -1;
      comp_of[static_cast<std::size_t>(u)] = -1;
    }
  }
};

// Components of the live graph (edges u ~ u*x_i with both ends live) and the
// zero flags from rules (A) and (B).
void analyze_live(const DivisorPoset& P, const std::vector<int>& live, Scratch& s,
                  std::vector<std::vector<int>>& components,
                  std::vector<char>& flags) {
  components.clear();
  flags.clear();
  const int n = P.nvars();
  std::vector<int> stack;
  for (int seed : live) {
    if (s.comp_of[static_cast<std::size_t>(seed)] >= 0) continue;
    int cid = static_cast<int>(components.size());
    components.emplace_back();
    flags.push_back(0);
    s.comp_of[static_cast<std::size_t>(seed)] = cid;
    stack.push_back(seed);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      components[static_cast<std::size_t>(cid)].push_back(u);
      for (int i = 0; i < n; ++i) {
        for (int v : {P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)],
                      P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)]}) {
          if (v >= 0 && s.partner_of[static_cast<std::size_t>(v)] >= 0 &&
              s.comp_of[static_cast<std::size_t>(v)] < 0) {
            s.comp_of[static_cast<std::size_t>(v)] = cid;
            stack.push_back(v);
          }
        }
      }
    }
    std::sort(components[static_cast<std::size_t>(cid)].begin(),
              components[static_cast<std::size_t>(cid)].end());
  }
  for (int u : live) {
    int cid = s.comp_of[static_cast<std::size_t>(u)];
    if (flags[static_cast<std::size_t>(cid)]) continue;
    int mu = s.partner_of[static_cast<std::size_t>(u)];
    for (int i = 0; i < n; ++i) {
      int down = P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)];
      if (down >= 0 && s.partner_of[static_cast<std::size_t>(down)] < 0) {  // (A)
        flags[static_cast<std::size_t>(cid)] = 1;
        break;
      }
      if (P.mono(u).e[static_cast<std::size_t>(i)] == 0 &&
          P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(mu)] >= 0) {  // (B)
        flags[static_cast<std::size_t>(cid)] = 1;
        break;
      }
    }
  }
}

MonomialIdeal ids_to_ideal(const DivisorPoset& P, const std::vector<int>& ids) {
  std::vector<Monomial> gens;
  gens.reserve(ids.size());
  for (int id : ids) gens.push_back(P.mono(id));
  return make_ideal(P.nvars(), std::move(gens));
}

bool companions_with_degree(const DivisorPoset& P, const PosetIdealView& V1,
                            const PosetIdealView& V2, const Monomial& m) {
  if (V1.gen.size() != V2.soc.size() || V1.soc.size() != V2.gen.size()) return false;
  // d -> m/d must map Soc(V2) onto Gen(V1), c -> m/c must map Gen(V2) onto Soc(V1).
  for (int d : V2.soc) {
    if (!P.mono(d).divides(m)) return false;
    int t = P.find(m.quotient(P.mono(d)));
    if (t < 0 || !std::binary_search(V1.gen.begin(), V1.gen.end(), t)) return false;
  }
  for (int c : V2.gen) {
    if (!P.mono(c).divides(m)) return false;
    int t = P.find(m.quotient(P.mono(c)));
    if (t < 0 || !std::binary_search(V1.soc.begin(), V1.soc.end(), t)) return false;
  }
  return true;
}

std::vector<Monomial> sorted_products(const DivisorPoset& P, const std::vector<int>& A,
                                      const std::vector<int>& B) {
  std::set<Monomial> out;
  for (int a : A)
    for (int b : B) out.insert(P.mono(a).times(P.mono(b)));
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<HomDegree> candidate_degrees(const DivisorPoset& P) {
  std::vector<int> all(static_cast<std::size_t>(P.size()));
  for (int i = 0; i < P.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return sorted_products(P, all, all);
}

HomComponentSet hom_components(const DivisorPoset& P, const HomDegree& m) {
  if (m.arity() != P.nvars()) throw std::invalid_argument("degree arity mismatch");
  HomComponentSet H;
  H.degree = m;
  Scratch s(P.size());
  for (int u = 0; u < P.size(); ++u) {
    if (!P.mono(u).divides(m)) continue;
    int t = P.find(m.quotient(P.mono(u)));
    if (t < 0) continue;
    s.partner_of[static_cast<std::size_t>(u)] = t;
    H.live.push_back(u);
  }
  analyze_live(P, H.live, s, H.components, H.zero_flag);
  H.partner.reserve(H.live.size());
  for (int u : H.live) H.partner.push_back(s.partner_of[static_cast<std::size_t>(u)]);
  return H;
}

MonomialIdeal degree_image(const DivisorPoset& P, const HomDegree& m) {
  HomComponentSet H = hom_components(P, m);
  std::vector<int> image_ids;
  Scratch s(P.size());
  for (std::size_t k = 0; k < H.live.size(); ++k)
    s.partner_of[static_cast<std::size_t>(H.live[k])] = H.partner[k];
  for (std::size_t c = 0; c < H.components.size(); ++c) {
    if (H.zero_flag[c]) continue;
    for (int u : H.components[c])
      image_ids.push_back(s.partner_of[static_cast<std::size_t>(u)]);
  }
  return ids_to_ideal(P, image_ids);
}

TraceReport trace_multigraded(const DivisorPoset& P) {
  const int N = P.size();
  // Group the ordered pair sums u*w by degree; the pair lists give each
  // degree's live support together with the m/u partners for free.
  std::unordered_map<Monomial, int, MonomialHash> deg_id;
  std::vector<Monomial> deg_mono;
  std::vector<std::vector<std::pair<int, int>>> deg_pairs;
  deg_id.reserve(static_cast<std::size_t>(N) * static_cast<std::size_t>(N) / 2 + 8);
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      Monomial m = P.mono(i).times(P.mono(j));
      auto [it, inserted] = deg_id.try_emplace(std::move(m),
                                               static_cast<int>(deg_mono.size()));
      if (inserted) {
        deg_mono.push_back(it->first);
        deg_pairs.emplace_back();
      }
      deg_pairs[static_cast<std::size_t>(it->second)].emplace_back(i, j);
    }
  }
  std::vector<int> order(deg_mono.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return deg_mono[static_cast<std::size_t>(a)] < deg_mono[static_cast<std::size_t>(b)];
  });

  TraceReport rep;
  Scratch s(N);
  std::vector<char> trace_mark(static_cast<std::size_t>(N), 0);
  std::vector<int> live;
  std::vector<std::vector<int>> components;
  std::vector<char> flags;
  std::vector<int> image_ids;
  for (int k : order) {
    const auto& pairs = deg_pairs[static_cast<std::size_t>(k)];
    live.clear();
    for (auto [i, j] : pairs) {
      if (s.partner_of[static_cast<std::size_t>(i)] < 0) {
        s.partner_of[static_cast<std::size_t>(i)] = j;
        live.push_back(i);
      }
      if (s.partner_of[static_cast<std::size_t>(j)] < 0) {
        s.partner_of[static_cast<std::size_t>(j)] = i;
        live.push_back(j);
      }
    }
    std::sort(live.begin(), live.end());
    analyze_live(P, live, s, components, flags);
    image_ids.clear();
    for (std::size_t c = 0; c < components.size(); ++c) {
      if (flags[c]) continue;
      for (int u : components[c])
        image_ids.push_back(s.partner_of[static_cast<std::size_t>(u)]);
    }
    if (!image_ids.empty()) {
      for (int t : image_ids) trace_mark[static_cast<std::size_t>(t)] = 1;
      rep.degree_images.emplace_back(deg_mono[static_cast<std::size_t>(k)],
                                     ids_to_ideal(P, image_ids));
    }
    s.reset(live);
  }

  // Minimal generators of the trace: marked members with no marked divisor.
  std::vector<int> member_ids, gen_ids;
  for (int u = 0; u < N; ++u) {
    if (!trace_mark[static_cast<std::size_t>(u)]) continue;
    member_ids.push_back(u);
    bool minimal = true;
    for (int i = 0; minimal && i < P.nvars(); ++i) {
      int up = P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)];
      if (up >= 0 && trace_mark[static_cast<std::size_t>(up)]) minimal = false;
    }
    if (minimal) gen_ids.push_back(u);
  }
  rep.trace = ids_to_ideal(P, gen_ids);

  rep.gorenstein = P.socle().size() == 1;
  rep.nearly_gorenstein = true;
  for (int i = 0; i < P.nvars(); ++i) {
    int id = P.find(Monomial::var(P.nvars(), i));
    if (id >= 0 && !trace_mark[static_cast<std::size_t>(id)]) {
      rep.nearly_gorenstein = false;
      break;
    }
  }

  if (rep.gorenstein) {
    rep.teter_type = TeterVerdict::Gorenstein;
    return rep;
  }

  // Verdict from the degree images, cross-checked against the independent
  // characterization: the trace is a symmetric poset ideal iff a witness exists.
  std::optional<HomDegree> witness;
  for (const auto& [deg, img] : rep.degree_images) {
    if (img == rep.trace) {
      witness = deg;
      break;
    }
  }
  PosetIdealView trace_view = view_from_members(P, member_ids);
  std::optional<HomDegree> sym = is_symmetric(P, trace_view);
  if (witness.has_value() != sym.has_value() ||
      (witness && sym && !(*witness == *sym)))
    throw std::logic_error("teter verdict disagreement between degree images "
                           "and the symmetric-ideal check");
  rep.teter_type = witness ? TeterVerdict::Yes : TeterVerdict::No;
  rep.witness_degree = witness;

  // Exact minimum cover of the trace generators by degree images.
  constexpr std::size_t kCoverCap = 24;
  const std::size_t k = rep.trace.gens.size();
  const std::size_t words = (k + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks;
  std::vector<HomDegree> mask_degree;
  for (const auto& [deg, img] : rep.degree_images) {
    std::vector<std::uint64_t> mask(words, 0);
    bool any = false;
    for (std::size_t g = 0; g < k; ++g) {
      if (img.contains(rep.trace.gens[g])) {
        mask[g / 64] |= 1ull << (g % 64);
        any = true;
      }
    }
    if (!any) continue;
    bool dominated = false;
    for (std::size_t t = 0; t < masks.size(); ++t) {
      bool sub = true, sup = true;
      for (std::size_t w = 0; w < words; ++w) {
        if ((mask[w] & masks[t][w]) != mask[w]) sub = false;
        if ((mask[w] & masks[t][w]) != masks[t][w]) sup = false;
      }
      if (sub) {  // contained in an existing image (or equal): drop
        dominated = true;
        break;
      }
      if (sup) {  // strictly dominates an existing image: replace
        masks[t] = mask;
        mask_degree[t] = deg;
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      masks.push_back(std::move(mask));
      mask_degree.push_back(deg);
    }
  }
  // final sweep: a replacement above can leave older masks dominated
  for (std::size_t t = 0; t < masks.size();) {
    bool drop = false;
    for (std::size_t o = 0; o < masks.size() && !drop; ++o) {
      if (o == t) continue;
      bool sub = true;
      for (std::size_t w = 0; w < words; ++w)
        if ((masks[t][w] & masks[o][w]) != masks[t][w]) {
          sub = false;
          break;
        }
      if (sub) drop = true;
    }
    if (drop) {
      masks.erase(masks.begin() + static_cast<std::ptrdiff_t>(t));
      mask_degree.erase(mask_degree.begin() + static_cast<std::ptrdiff_t>(t));
    } else {
      ++t;
    }
  }
  if (masks.size() > kCoverCap) {
    rep.teter_number_computed = false;
    return rep;
  }

  // Branch and bound: always branch on the first uncovered generator.
  std::vector<std::size_t> best, chosen;
  auto covered = [&](const std::vector<std::uint64_t>& acc) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t full = (w + 1 < words || k % 64 == 0)
                               ? ~0ull
                               : ((1ull << (k % 64)) - 1);
      if ((acc[w] & full) != full) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> acc(words, 0);
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (!best.empty() && depth >= best.size()) return;
    if (covered(acc)) {
      best = chosen;
      return;
    }
    std::size_t g = 0;
    while ((acc[g / 64] >> (g % 64)) & 1ull) ++g;
    for (std::size_t t = 0; t < masks.size(); ++t) {
      if (!((masks[t][g / 64] >> (g % 64)) & 1ull)) continue;
      std::vector<std::uint64_t> saved = acc;
      for (std::size_t w = 0; w < words; ++w) acc[w] |= masks[t][w];
      chosen.push_back(t);
      self(self, depth + 1);
      chosen.pop_back();
      acc = saved;
    }
  };
  dfs(dfs, 0);
  rep.teter_number_computed = true;
  rep.teter_number = static_cast<int>(best.size());
  for (std::size_t t : best) rep.teter_witnesses.push_back(mask_degree[t]);
  std::sort(rep.teter_witnesses.begin(), rep.teter_witnesses.end());
  return rep;
}

std::pair<TeterVerdict, std::optional<HomDegree>> teter_type_multigraded(
    const DivisorPoset& P) {
  TraceReport rep = trace_multigraded(P);
  return {rep.teter_type, rep.witness_degree};
}

TeterNumberResult teter_number_multigraded(const DivisorPoset& P) {
  TraceReport rep = trace_multigraded(P);
  if (rep.gorenstein)
    throw std::invalid_argument("teter number is undefined for Gorenstein rings");
  TeterNumberResult r;
  r.computed = rep.teter_number_computed;
  if (r.computed) {
    r.number = *rep.teter_number;
    r.witnesses = rep.teter_witnesses;
  }
  return r;
}

std::optional<HomDegree> is_symmetric(const DivisorPoset& P, const PosetIdealView& V) {
  if (V.empty()) throw std::invalid_argument("empty poset ideal view");
  if (V.poset != &P) throw std::invalid_argument("view belongs to a different poset");
  if (V.gen.size() != V.soc.size()) return std::nullopt;
  for (const Monomial& m : sorted_products(P, V.gen, V.soc)) {
    bool ok = true;
    for (int a : V.gen) {
      if (!P.mono(a).divides(m)) {
        ok = false;
        break;
      }
      int t = P.find(m.quotient(P.mono(a)));
      if (t < 0 || !std::binary_search(V.soc.begin(), V.soc.end(), t)) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  return std::nullopt;
}

std::optional<HomDegree> are_companions(const DivisorPoset& P,
                                        const PosetIdealView& V1,
                                        const PosetIdealView& V2) {
  if (V1.empty() || V2.empty()) throw std::invalid_argument("empty poset ideal view");
  if (V1.poset != &P || V2.poset != &P)
    throw std::invalid_argument("view belongs to a different poset");
  if (V1.gen.size() != V2.soc.size() || V1.soc.size() != V2.gen.size())
    return std::nullopt;
  for (const Monomial& m : sorted_products(P, V1.gen, V2.soc))
    if (companions_with_degree(P, V1, V2, m)) return m;
  return std::nullopt;
}

std::optional<std::pair<PosetIdealView, HomDegree>> is_tau_ideal(
    const DivisorPoset& P, const PosetIdealView& V) {
  if (V.empty()) throw std::invalid_argument("empty poset ideal view");
  if (V.poset != &P) throw std::invalid_argument("view belongs to a different poset");
  std::vector<int> all(static_cast<std::size_t>(P.size()));
  for (int i = 0; i < P.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  for (const Monomial& m : sorted_products(P, V.gen, all)) {
    std::vector<int> j_members;
    bool ok = true;
    for (int u : V.members) {
      if (!P.mono(u).divides(m)) {
        ok = false;
        break;
      }
      int t = P.find(m.quotient(P.mono(u)));
      if (t < 0) {
        ok = false;
        break;
      }
      j_members.push_back(t);
    }
    if (!ok) continue;
    // m/V must itself be a poset ideal of P.
    std::sort(j_members.begin(), j_members.end());
    std::vector<char> mark(static_cast<std::size_t>(P.size()), 0);
    for (int id : j_members) mark[static_cast<std::size_t>(id)] = 1;
    for (int id : j_members) {
      for (int down : P.lower_covers[static_cast<std::size_t>(id)])
        if (!mark[static_cast<std::size_t>(down)]) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) continue;
    PosetIdealView J = view_from_members(P, j_members);
    if (companions_with_degree(P, V, J, m)) return std::make_pair(std::move(J), m);
  }
  return std::nullopt;
}

std::pair<MonomialIdeal, bool> natural_tau_ideal(const std::vector<int>& pure_powers,
                                                 const MonomialIdeal& J) {
  const int n = static_cast<int>(pure_powers.size());
  if (n < 1) throw std::invalid_argument("need at least one variable");
  for (int c : pure_powers)
    if (c < 1) throw std::invalid_argument("pure powers must be >= 1");
  if (J.nvars != n) throw std::invalid_argument("ideal arity mismatch");
  if (J.is_zero()) throw std::invalid_argument("J must be nonzero");
  if (J.is_unit()) throw std::invalid_argument("J contains a unit");
  std::vector<Monomial> pure_gens;
  for (int i = 0; i < n; ++i)
    pure_gens.push_back(Monomial::var(n, i, pure_powers[static_cast<std::size_t>(i)]));
  MonomialIdeal pure = make_ideal(n, std::move(pure_gens));
  bool proper = false;
  for (const Monomial& g : J.gens)
    if (!pure.contains(g)) proper = true;
  if (!proper) throw std::invalid_argument("J is contained in the pure-power ideal");

  MonomialIdeal quotient_ideal = sum(pure, J);   // defines R
  MonomialIdeal annihilator = colon(pure, J);    // (0 : J) lifted to S
  std::vector<Monomial> image_gens;
  for (const Monomial& g : annihilator.gens)
    if (!quotient_ideal.contains(g)) image_gens.push_back(g);
  MonomialIdeal image{n, std::move(image_gens)};

  bool claimed = !image.is_zero();
  for (std::size_t a = 0; claimed && a < J.gens.size(); ++a)
    for (std::size_t b = a; claimed && b < J.gens.size(); ++b)
      if (!pure.contains(J.gens[a].times(J.gens[b]))) claimed = false;
  return {std::move(image), claimed};
}

}  // namespace montrace
