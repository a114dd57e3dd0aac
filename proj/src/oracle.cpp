#include "montrace/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace montrace {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ (b * 0x9E3779B97F4A7C15ull + 0x6A09E667F3BCC909ull));
}

struct UnknownIndex {
  std::unordered_map<std::uint64_t, int> map;
  int N = 0;
  int find(int v, int w) const {
    auto it = map.find(static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(N) +
                       static_cast<std::uint64_t>(w));
    return it == map.end() ? -1 : it->second;
  }
};

}  // namespace

HomSolutionSpace hom_basis(const DivisorPoset& P, const HomSenseSpec& sense,
                           std::uint64_t p) {
  PrimeField f(p);
  const int N = P.size();
  const int n = P.nvars();

  HomSolutionSpace space;
  space.sense = sense;
  space.prime = p;
  UnknownIndex ux;
  ux.N = N;
  auto add_unknown = [&](int v, int w) {
    ux.map.emplace(static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(N) +
                       static_cast<std::uint64_t>(w),
                   static_cast<int>(space.unknowns.size()));
    space.unknowns.emplace_back(v, w);
  };
  switch (sense.kind) {
    case HomSenseSpec::Kind::Full:
      for (int v = 0; v < N; ++v)
        for (int w = 0; w < N; ++w) add_unknown(v, w);
      break;
    case HomSenseSpec::Kind::Graded:
      for (int v = 0; v < N; ++v)
        for (int w = 0; w < N; ++w)
          if (P.mono(v).total_degree() + P.mono(w).total_degree() == sense.degree)
            add_unknown(v, w);
      break;
    case HomSenseSpec::Kind::Multigraded: {
      const Monomial& m = sense.multidegree;
      if (m.arity() != n) throw std::invalid_argument("degree arity mismatch");
      for (int v = 0; v < N; ++v) {
        if (!P.mono(v).divides(m)) continue;
        int w = P.find(m.quotient(P.mono(v)));
        if (w >= 0) add_unknown(v, w);
      }
      break;
    }
  }

  // Every relation row touching at least one unknown, found from the unknowns.
  std::unordered_set<std::uint64_t> row_keys;
  auto key_of = [&](int v, int i, int w2) {
    return (static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(n) +
            static_cast<std::uint64_t>(i)) *
               static_cast<std::uint64_t>(N) +
           static_cast<std::uint64_t>(w2);
  };
  for (auto [a, b] : space.unknowns) {
    for (int i = 0; i < n; ++i) {
      int v = P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
      if (v >= 0) row_keys.insert(key_of(v, i, b));
      int w2 = P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
      if (w2 >= 0) row_keys.insert(key_of(a, i, w2));
    }
  }
  std::vector<std::uint64_t> ordered(row_keys.begin(), row_keys.end());
  std::sort(ordered.begin(), ordered.end());

  SparseKernelSolver solver(f, space.unknowns.size());
  for (std::uint64_t key : ordered) {
    int w2 = static_cast<int>(key % static_cast<std::uint64_t>(N));
    std::uint64_t rest = key / static_cast<std::uint64_t>(N);
    int i = static_cast<int>(rest % static_cast<std::uint64_t>(n));
    int v = static_cast<int>(rest / static_cast<std::uint64_t>(n));
    std::vector<std::pair<std::size_t, std::uint64_t>> row;
    int vi = P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
    if (vi >= 0) {
      int idx = ux.find(vi, w2);
      if (idx >= 0) row.emplace_back(static_cast<std::size_t>(idx), 1);
    }
    int wi = P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(w2)];
    if (wi >= 0) {
      int idx = ux.find(v, wi);
      if (idx >= 0) row.emplace_back(static_cast<std::size_t>(idx), p - 1);
    }
    if (!row.empty()) solver.add_row(std::move(row));
  }
  space.basis = solver.kernel_basis();
  return space;
}

bool verify_relations(const DivisorPoset& P, const HomSolutionSpace& space) {
  const int N = P.size();
  const int n = P.nvars();
  PrimeField f(space.prime);
  UnknownIndex ux;
  ux.N = N;
  for (std::size_t k = 0; k < space.unknowns.size(); ++k)
    ux.map.emplace(
        static_cast<std::uint64_t>(space.unknowns[k].first) *
                static_cast<std::uint64_t>(N) +
            static_cast<std::uint64_t>(space.unknowns[k].second),
        static_cast<int>(k));
  for (const auto& vec : space.basis) {
    auto coeff = [&](int v, int w) -> std::uint64_t {
      int idx = ux.find(v, w);
      return idx < 0 ? 0 : vec[static_cast<std::size_t>(idx)];
    };
    for (int v = 0; v < N; ++v) {
      for (int i = 0; i < n; ++i) {
        int vd = P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
        for (int w2 = 0; w2 < N; ++w2) {
          std::uint64_t lhs = vd >= 0 ? coeff(vd, w2) : 0;
          int wd = P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(w2)];
          std::uint64_t rhs = wd >= 0 ? coeff(v, wd) : 0;
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct TraceSpanInfo {
  std::vector<int> member_ids;  // sorted
  MonomialIdeal ideal;
};

TraceSpanInfo trace_span(const DivisorPoset& P, std::uint64_t p) {
  PrimeField f(p);
  const int N = P.size();
  HomSolutionSpace full = hom_basis(P, HomSenseSpec::full(), p);
  DenseSpan span(f, static_cast<std::size_t>(N));
  std::vector<std::uint64_t> row(static_cast<std::size_t>(N));
  for (const auto& vec : full.basis) {
    // rows phi(v*) grouped by v
    std::vector<std::vector<std::uint64_t>> by_v(
        static_cast<std::size_t>(N), std::vector<std::uint64_t>());
    for (std::size_t k = 0; k < full.unknowns.size(); ++k) {
      if (vec[k] == 0) continue;
      auto [v, w] = full.unknowns[k];
      auto& r = by_v[static_cast<std::size_t>(v)];
      if (r.empty()) r.assign(static_cast<std::size_t>(N), 0);
      r[static_cast<std::size_t>(w)] = vec[k];
    }
    for (auto& r : by_v)
      if (!r.empty()) span.insert(r);
  }
  // close under multiplication by the variables
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = span.rows();
    for (const auto& r : snapshot) {
      for (int i = 0; i < P.nvars(); ++i) {
        std::fill(row.begin(), row.end(), 0);
        bool nonzero = false;
        for (int w = 0; w < N; ++w) {
          if (r[static_cast<std::size_t>(w)] == 0) continue;
          int t = P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(w)];
          if (t >= 0) {
            row[static_cast<std::size_t>(t)] = r[static_cast<std::size_t>(w)];
            nonzero = true;
          }
        }
        if (nonzero && span.insert(row)) grew = true;
      }
    }
  }
  auto cols = span.support();
  if (span.rank() != cols.size())
    throw std::logic_error("trace span is not monomial-supported");
  TraceSpanInfo info;
  for (std::size_t c : cols) info.member_ids.push_back(static_cast<int>(c));
  std::vector<int> gen_ids;
  std::vector<char> mark(static_cast<std::size_t>(N), 0);
  for (int id : info.member_ids) mark[static_cast<std::size_t>(id)] = 1;
  for (int id : info.member_ids) {
    bool minimal = true;
    for (int i = 0; minimal && i < P.nvars(); ++i) {
      int up = P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(id)];
      if (up >= 0 && mark[static_cast<std::size_t>(up)]) minimal = false;
    }
    if (minimal) gen_ids.push_back(id);
  }
  std::vector<Monomial> gens;
  for (int id : gen_ids) gens.push_back(P.mono(id));
  info.ideal = make_ideal(P.nvars(), std::move(gens));
  return info;
}

}  // namespace

MonomialIdeal trace_oracle(const DivisorPoset& P, std::uint64_t p) {
  return trace_span(P, p).ideal;
}

RandomizedReport teter_type_randomized(const DivisorPoset& P, bool graded_sense,
                                       std::uint64_t p, int trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  PrimeField f(p);
  RandomizedReport rep;
  rep.sense = graded_sense ? "graded" : "local";
  rep.prime = p;
  rep.trials = trials;
  rep.seed = seed;
  if (P.socle().size() == 1) {
    rep.verdict = RandomVerdict::Gorenstein;
    return rep;
  }
  const int N = P.size();
  TraceSpanInfo trace = trace_span(P, p);
  const std::size_t target = trace.member_ids.size();

  // product table: id of w * u, or -1
  std::vector<std::vector<int>> prod(
      static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), -1));
  for (int w = 0; w < N; ++w)
    for (int u = 0; u < N; ++u)
      prod[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] =
          P.find(P.mono(w).times(P.mono(u)));

  auto image_rank = [&](const HomSolutionSpace& space,
                        const std::vector<std::uint64_t>& coeffs) {
    std::vector<std::vector<std::uint64_t>> by_v(static_cast<std::size_t>(N));
    for (std::size_t k = 0; k < space.unknowns.size(); ++k) {
      if (coeffs[k] == 0) continue;
      auto [v, w] = space.unknowns[k];
      auto& r = by_v[static_cast<std::size_t>(v)];
      if (r.empty()) r.assign(static_cast<std::size_t>(N), 0);
      r[static_cast<std::size_t>(w)] = coeffs[k];
    }
    DenseSpan span(f, static_cast<std::size_t>(N));
    std::vector<std::uint64_t> row(static_cast<std::size_t>(N));
    for (int v = 0; v < N; ++v) {
      const auto& r = by_v[static_cast<std::size_t>(v)];
      if (r.empty()) continue;
      for (int u = 0; u < N; ++u) {  // multiply phi(v*) by every standard monomial
        std::fill(row.begin(), row.end(), 0);
        bool nonzero = false;
        for (int w = 0; w < N; ++w) {
          if (r[static_cast<std::size_t>(w)] == 0) continue;
          int t = prod[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)];
          if (t >= 0) {
            row[static_cast<std::size_t>(t)] =
                f.add(row[static_cast<std::size_t>(t)], r[static_cast<std::size_t>(w)]);
            nonzero = true;
          }
        }
        if (nonzero) span.insert(row);
      }
      if (span.rank() == target) break;
    }
    if (span.rank() > target)
      throw std::logic_error("hom image exceeds the trace span");
    return span.rank();
  };

  auto sample = [&](const HomSolutionSpace& space, std::uint64_t stream) {
    std::vector<std::uint64_t> coeffs(space.unknowns.size(), 0);
    std::vector<std::uint64_t> lambda(space.basis.size());
    for (std::size_t k = 0; k < lambda.size(); ++k)
      lambda[k] = splitmix64(stream + k) % p;
    for (std::size_t k = 0; k < space.basis.size(); ++k) {
      if (lambda[k] == 0) continue;
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        coeffs[j] = f.add(coeffs[j], f.mul(lambda[k], space.basis[k][j]));
    }
    return coeffs;
  };

  if (graded_sense) {
    int maxdeg = 0;
    for (int id = 0; id < N; ++id)
      maxdeg = std::max(maxdeg, P.mono(id).total_degree());
    for (int d = 0; d <= 2 * maxdeg; ++d) {
      HomSolutionSpace space = hom_basis(P, HomSenseSpec::graded(d), p);
      if (space.dimension() == 0) continue;
      for (int t = 0; t < trials; ++t) {
        std::uint64_t stream = mix(mix(seed, static_cast<std::uint64_t>(d) + 1),
                                   static_cast<std::uint64_t>(t) + 1);
        if (image_rank(space, sample(space, stream)) == target) {
          rep.verdict = RandomVerdict::Yes;
          rep.witness_total_degree = d;
          return rep;
        }
      }
    }
  } else {
    HomSolutionSpace space = hom_basis(P, HomSenseSpec::full(), p);
    for (int t = 0; t < trials; ++t) {
      std::uint64_t stream = mix(mix(seed, 0), static_cast<std::uint64_t>(t) + 1);
      if (image_rank(space, sample(space, stream)) == target) {
        rep.verdict = RandomVerdict::Yes;
        return rep;
      }
    }
  }
  rep.verdict = RandomVerdict::ProbablyNo;
  return rep;
}

}  // namespace montrace
