#include "montrace/parse.hpp"

#include <cctype>
#include <unordered_map>

namespace montrace {

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_'))
        ++pos;
    }
    if (start == pos) throw ParseError("expected a variable name at position " +
                                       std::to_string(start));
    return s.substr(start, pos - start);
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    long v = 0;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) throw ParseError("exponent too large");
      ++pos;
      ++digits;
    }
    if (digits == 0)
      throw ParseError("expected an integer at position " + std::to_string(start));
    return neg ? -v : v;
  }
};

Monomial parse_one_monomial(Lexer& lex,
                            const std::unordered_map<std::string, int>& var_index,
                            int nvars) {
  Monomial m = Monomial::unit(nvars);
  bool first = true;
  while (true) {
    if (first && std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      long c = lex.integer();
      if (c != 1) throw ParseError("only the coefficient 1 is allowed in monomials");
    } else {
      std::string nm = lex.name();
      auto it = var_index.find(nm);
      if (it == var_index.end()) throw ParseError("unknown variable '" + nm + "'");
      long exp = 1;
      if (lex.peek() == '^') {
        ++lex.pos;
        exp = lex.integer();
        if (exp < 0) throw ParseError("negative exponent");
      }
      m.e[static_cast<std::size_t>(it->second)] += static_cast<int>(exp);
    }
    first = false;
    if (lex.peek() == '*') {
      ++lex.pos;
      continue;
    }
    break;
  }
  return m;
}

std::unordered_map<std::string, int> index_vars(const std::vector<std::string>& vars) {
  if (vars.empty()) throw ParseError("no variables declared");
  std::unordered_map<std::string, int> var_index;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!var_index.emplace(vars[i], static_cast<int>(i)).second)
      throw ParseError("duplicate variable '" + vars[i] + "'");
  }
  return var_index;
}

NamedIdeal finish(const std::vector<std::string>& vars, std::vector<Monomial> gens) {
  if (gens.empty()) throw ParseError("ideal has no generators");
  NamedIdeal named;
  named.ideal = make_ideal(static_cast<int>(vars.size()), std::move(gens));
  named.vars = vars;
  if (named.ideal.is_unit()) throw ParseError("unit ideal (R would be the zero ring)");
  return named;
}

}  // namespace

NamedIdeal parse_ideal(const std::string& text, const std::vector<std::string>& vars) {
  return finish(vars, parse_monomial_list(text, vars));
}

NamedIdeal parse_ideal_rows(const std::vector<std::string>& vars,
                            const std::vector<std::vector<int>>& rows) {
  auto var_index = index_vars(vars);
  if (rows.empty()) throw ParseError("ideal has no generators");
  std::vector<Monomial> gens;
  for (const auto& row : rows) {
    if (row.size() != vars.size())
      throw ParseError("generator row length does not match variable count");
    for (int x : row)
      if (x < 0) throw ParseError("negative exponent");
    gens.emplace_back(row);
  }
  return finish(vars, std::move(gens));
}

std::string to_string(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  std::string s;
  for (const Monomial& g : I.gens) {
    if (!s.empty()) s += ", ";
    s += to_string(g, vars);
  }
  return s;
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  auto var_index = index_vars(vars);
  Lexer lex{text};
  Monomial m = parse_one_monomial(lex, var_index, static_cast<int>(vars.size()));
  if (!lex.done()) throw ParseError("trailing input after monomial");
  return m;
}

std::vector<Monomial> parse_monomial_list(const std::string& text,
                                          const std::vector<std::string>& vars) {
  auto var_index = index_vars(vars);
  Lexer lex{text};
  std::vector<Monomial> out;
  if (lex.done()) throw ParseError("empty monomial list");
  while (true) {
    out.push_back(parse_one_monomial(lex, var_index, static_cast<int>(vars.size())));
    if (lex.peek() == ',') {
      ++lex.pos;
      continue;
    }
    break;
  }
  if (!lex.done()) throw ParseError("unexpected token at position " +
                                    std::to_string(lex.pos));
  return out;
}

}  // namespace montrace
