#include "montrace/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace montrace {

std::vector<int> DivisorPoset::socle() const {
  std::vector<int> soc;
  for (int u = 0; u < size(); ++u) {
    bool maximal = true;
    for (int i = 0; maximal && i < nvars(); ++i)
      if (mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] >= 0)
        maximal = false;
    if (maximal) soc.push_back(u);
  }
  return soc;
}

DivisorPoset build_divisor_poset(const MonomialIdeal& I) {
  DivisorPoset P;
  P.basis = standard_monomials(I);  // throws on non-Artinian input
  P.ideal = I;
  const int n = P.nvars();
  const int N = P.size();
  P.index.reserve(static_cast<std::size_t>(N) * 2);
  for (int id = 0; id < N; ++id) P.index.emplace(P.mono(id), id);

  P.mult_var.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(N), -1));
  P.div_var.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(N), -1));
  P.upper_covers.assign(static_cast<std::size_t>(N), {});
  P.lower_covers.assign(static_cast<std::size_t>(N), {});
  Monomial tmp;
  for (int id = 0; id < N; ++id) {
    for (int i = 0; i < n; ++i) {
      tmp = P.mono(id);
      tmp.e[static_cast<std::size_t>(i)] += 1;
      int down = P.find(tmp);
      if (down >= 0) {
        P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(id)] = down;
        P.lower_covers[static_cast<std::size_t>(id)].push_back(down);
        P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(down)] = id;
        P.upper_covers[static_cast<std::size_t>(down)].push_back(id);
      }
    }
  }
  for (auto& v : P.upper_covers) std::sort(v.begin(), v.end());
  for (auto& v : P.lower_covers) std::sort(v.begin(), v.end());
  return P;
}

bool PosetIdealView::has_member(int id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

namespace {

// Gen = members with no member proper divisor; Soc = members with no member
// multiple. Local one-step tests suffice because member sets are closed under
// multiplication within P.
void fill_gen_soc(PosetIdealView& V) {
  const DivisorPoset& P = *V.poset;
  V.gen.clear();
  V.soc.clear();
  std::vector<char> mark(static_cast<std::size_t>(P.size()), 0);
  for (int id : V.members) mark[static_cast<std::size_t>(id)] = 1;
  for (int id : V.members) {
    bool is_gen = true, is_soc = true;
    for (int i = 0; i < P.nvars(); ++i) {
      int up = P.div_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(id)];
      if (up >= 0 && mark[static_cast<std::size_t>(up)]) is_gen = false;
      int down = P.mult_var[static_cast<std::size_t>(i)][static_cast<std::size_t>(id)];
      if (down >= 0 && mark[static_cast<std::size_t>(down)]) is_soc = false;
    }
    if (is_gen) V.gen.push_back(id);
    if (is_soc) V.soc.push_back(id);
  }
}

}  // namespace

PosetIdealView ideal_view(const DivisorPoset& P, const std::vector<Monomial>& gens) {
  PosetIdealView V;
  V.poset = &P;
  std::vector<char> mark(static_cast<std::size_t>(P.size()), 0);
  std::vector<int> stack;
  for (const Monomial& g : gens) {
    int id = P.find(g);
    if (id < 0)
      throw std::invalid_argument("generator is not a standard monomial of P");
    if (!mark[static_cast<std::size_t>(id)]) {
      mark[static_cast<std::size_t>(id)] = 1;
      stack.push_back(id);
    }
  }
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    V.members.push_back(id);
    for (int down : P.lower_covers[static_cast<std::size_t>(id)]) {
      if (!mark[static_cast<std::size_t>(down)]) {
        mark[static_cast<std::size_t>(down)] = 1;
        stack.push_back(down);
      }
    }
  }
  std::sort(V.members.begin(), V.members.end());
  fill_gen_soc(V);
  return V;
}

PosetIdealView view_from_members(const DivisorPoset& P, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PosetIdealView V;
  V.poset = &P;
  V.members = std::move(members);
  std::vector<char> mark(static_cast<std::size_t>(P.size()), 0);
  for (int id : V.members) {
    if (id < 0 || id >= P.size())
      throw std::invalid_argument("member id out of range");
    mark[static_cast<std::size_t>(id)] = 1;
  }
  for (int id : V.members)
    for (int down : P.lower_covers[static_cast<std::size_t>(id)])
      if (!mark[static_cast<std::size_t>(down)])
        throw std::invalid_argument("member set is not downward closed in P");
  fill_gen_soc(V);
  return V;
}

MonomialIdeal view_ideal(const PosetIdealView& V) {
  std::vector<Monomial> gens;
  gens.reserve(V.gen.size());
  for (int id : V.gen) gens.push_back(V.poset->mono(id));
  return make_ideal(V.poset->nvars(), std::move(gens));
}

std::string to_dot(const DivisorPoset& P, const PosetIdealView* highlight,
                   const std::vector<std::string>& var_names) {
  if (highlight && highlight->poset != &P)
    throw std::invalid_argument("highlight view belongs to a different poset");
  std::vector<std::string> vars =
      var_names.empty() ? default_var_names(P.nvars()) : var_names;
  if (static_cast<int>(vars.size()) != P.nvars())
    throw std::invalid_argument("variable name count mismatch");

  std::string out = "digraph divisor_poset {\n  rankdir=BT;\n  node [shape=box];\n";
  std::vector<char> hl(static_cast<std::size_t>(P.size()), 0);
  if (highlight)
    for (int id : highlight->members) hl[static_cast<std::size_t>(id)] = 1;
  for (int id = 0; id < P.size(); ++id) {
    out += "  n" + std::to_string(id) + " [label=\"" + to_string(P.mono(id), vars) + "\"";
    if (hl[static_cast<std::size_t>(id)]) out += ", style=filled, fillcolor=lightblue";
    out += "];\n";
  }
  // rank groups by total degree; BT rank direction puts 1 on top
  int maxdeg = 0;
  for (int id = 0; id < P.size(); ++id)
    maxdeg = std::max(maxdeg, P.mono(id).total_degree());
  for (int d = 0; d <= maxdeg; ++d) {
    std::string row;
    for (int id = 0; id < P.size(); ++id)
      if (P.mono(id).total_degree() == d) row += " n" + std::to_string(id) + ";";
    if (!row.empty()) out += "  { rank=same;" + row + " }\n";
  }
  for (int id = 0; id < P.size(); ++id)
    for (int up : P.upper_covers[static_cast<std::size_t>(id)])
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(up) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace montrace
