#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "montrace/monomial.hpp"

namespace montrace {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ideal together with its variable names, as read from user input.
struct NamedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> vars;
};

/// Parses a comma-separated monomial expression ("x^3, y^3, x*y") over the
/// declared variables. Tokens: names, '^', '*', ','. Rejects the unit ideal,
/// an empty generator list, malformed tokens and negative exponents.
NamedIdeal parse_ideal(const std::string& text, const std::vector<std::string>& vars);

/// Validates a structured record: rows of exponents over named variables.
NamedIdeal parse_ideal_rows(const std::vector<std::string>& vars,
                            const std::vector<std::vector<int>>& rows);

/// Serializes back to the expression form; round-trips through parse_ideal.
std::string to_string(const MonomialIdeal& I, const std::vector<std::string>& vars);

/// Parses a single monomial expression ("x^2*y") over the declared variables.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars);

/// Parses a comma-separated list of monomials ("x, y^2").
std::vector<Monomial> parse_monomial_list(const std::string& text,
                                          const std::vector<std::string>& vars);

}  // namespace montrace
