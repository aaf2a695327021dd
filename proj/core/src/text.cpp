#include "stci/text.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace stci {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(std::string(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

Int parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer: " + text);
  }
}

}  // namespace

Monomial parse_monomial(const VariableSet& vars, std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty monomial");
  if (s == "1") return Monomial::one(vars);
  std::vector<Int> exps(vars.count(), 0);
  for (const auto& raw : split(s, '*')) {
    std::string factor = trim(raw);
    if (factor.empty()) throw std::invalid_argument("empty factor in monomial");
    std::string name = factor;
    Int exp = 1;
    if (auto pos = factor.find('^'); pos != std::string::npos) {
      name = trim(factor.substr(0, pos));
      exp = parse_int(trim(factor.substr(pos + 1)));
      if (exp < 0) throw std::invalid_argument("negative exponent: " + factor);
    }
    auto idx = vars.index(name);
    if (!idx) throw std::invalid_argument("unknown variable: " + name);
    exps[*idx] += exp;
  }
  return Monomial(vars, std::move(exps));
}

MonomialMatrix parse_matrix(const VariableSet& vars, std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 2)
    throw std::invalid_argument("matrix must have exactly 2 rows");
  std::vector<std::vector<Monomial>> parsed;
  for (const auto& row : rows) {
    std::vector<Monomial> entries;
    for (const auto& cell : split(row, ','))
      entries.push_back(parse_monomial(vars, cell));
    parsed.push_back(std::move(entries));
  }
  return MonomialMatrix(std::move(parsed[0]), std::move(parsed[1]));
}

SparsePolynomial parse_polynomial(const VariableSet& vars,
                                  std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  SparsePolynomial poly(vars);
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-' ||
                            std::isspace(static_cast<unsigned char>(s[i])))) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = trim(s.substr(start, i - start));
    if (term.empty()) throw std::invalid_argument("dangling sign in polynomial");
    // Optional leading integer coefficient, then the monomial part.
    Int coeff = 1;
    std::string mono = term;
    std::size_t d = 0;
    while (d < term.size() && std::isdigit(static_cast<unsigned char>(term[d])))
      ++d;
    if (d > 0) {
      coeff = parse_int(term.substr(0, d));
      std::string rest = trim(term.substr(d));
      if (rest.empty()) {
        mono = "1";
      } else {
        if (rest.front() != '*')
          throw std::invalid_argument("expected '*' after coefficient: " + term);
        mono = trim(rest.substr(1));
      }
    }
    Monomial m = parse_monomial(vars, mono);
    poly.add_term(m.exponents(), sign * coeff);
    any = true;
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return poly;
}

std::vector<std::string> scan_variable_names(std::string_view text) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      names.insert(std::string(text.substr(start, i - start)));
    } else {
      ++i;
    }
  }
  return std::vector<std::string>(names.begin(), names.end());
}

}  // namespace stci
