#include "stci/radical.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace stci {

bool is_simple(const MonomialMatrix& a) {
  for (const auto& entry : all_2minors(a)) {
    if (!entry.minor) return false;  // zero minor: divisible by anything
    if (!mono_gcd(entry.minor->lead(), entry.minor->trail()).is_one())
      return false;
  }
  return true;
}

RadicalReduction radical_hypothesis(const MonomialMatrix& a, std::size_t k) {
  if (k >= a.cols()) throw std::out_of_range("invalid column index");
  const Monomial& g0 = a.at(0, k);
  const Monomial& g1 = a.at(1, k);

  RadicalReduction result;
  result.column = k;
  result.holds = true;
  for (const auto& entry : all_2minors(a)) {
    MinorEvidence ev;
    ev.i = entry.i;
    ev.j = entry.j;
    if (!entry.minor) {
      ev.zero_minor = true;  // the zero polynomial lies in every ideal
    } else {
      for (const Monomial* term : {&entry.minor->lead(), &entry.minor->trail()}) {
        TermEvidence te;
        te.term = term->str();
        if (support_contains(*term, g0)) {
          te.covered = true;
          te.covering_row = 0;
        } else if (support_contains(*term, g1)) {
          te.covered = true;
          te.covering_row = 1;
        }
        if (!te.covered) result.holds = false;
        ev.terms.push_back(std::move(te));
      }
    }
    result.evidence.push_back(std::move(ev));
    if (entry.i == k || entry.j == k) {
      if (entry.minor) result.reduced_generators.push_back(*entry.minor);
    }
  }
  return result;
}

std::vector<RadicalReduction> find_reducing_columns(const MonomialMatrix& a) {
  std::vector<RadicalReduction> out;
  for (std::size_t k = 0; k < a.cols(); ++k)
    out.push_back(radical_hypothesis(a, k));
  return out;
}

std::string form_name(Form f) {
  switch (f) {
    case Form::i: return "i";
    case Form::ii: return "ii";
    case Form::iii: return "iii";
    case Form::iv: return "iv";
    case Form::v: return "v";
    case Form::vi: return "vi";
    case Form::vii: return "vii";
    case Form::viii: return "viii";
    case Form::ix: return "ix";
  }
  throw std::logic_error("bad form");
}

namespace {

// Template cells list the template variables (0=a,1=b,2=c,3=d) allowed in
// that position; row-major over 2x3.
using Cell = std::vector<int>;
struct FormTemplate {
  Form form;
  std::array<Cell, 6> cells;
};

const std::vector<FormTemplate>& form_templates() {
  static const std::vector<FormTemplate> forms = {
      {Form::i, {Cell{0}, {1}, {2, 3}, {1}, {2, 3}, {0}}},
      {Form::ii, {Cell{0}, {1}, {2}, {1}, {0, 2}, {3}}},
      {Form::iii, {Cell{0}, {1}, {2}, {1}, {2}, {0, 3}}},
      {Form::iv, {Cell{0}, {1}, {2, 3}, {1, 2}, {3}, {0}}},
      {Form::v, {Cell{0}, {1}, {2}, {1, 2}, {0}, {3}}},
      {Form::vi, {Cell{0}, {1}, {2, 3}, {2}, {0, 3}, {1}}},
      {Form::vii, {Cell{0}, {1}, {2, 3}, {2}, {3}, {0, 1}}},
      {Form::viii, {Cell{0}, {1}, {2}, {2}, {0}, {1, 3}}},
      {Form::ix, {Cell{0}, {1}, {2, 3}, {2, 3}, {0}, {1}}},
  };
  return forms;
}

// exp(cell, templateVar) for a matched arrangement.
struct MatchedExponents {
  // [cell][templateVar] -> exponent (0 when the variable is absent).
  std::array<std::array<Int, 4>, 6> e{};
};

std::vector<PropNote> applicable_props(Form form, const MatchedExponents& me) {
  std::vector<PropNote> props;
  // Exponent names follow the printed templates; read them off the cells.
  switch (form) {
    case Form::ii: {
      props.push_back({"explicit-pair", ""});
      const Int& s = me.e[4][0];  // cell (2,2) = a^s c^t
      if (s > 0) props.push_back({"column-criterion", "case (ii), s>0: J in (a,b)"});
      break;
    }
    case Form::iv: {
      props.push_back({"explicit-pair", ""});
      const Int& p = me.e[2][2];  // c^p d^q
      const Int& q = me.e[2][3];
      const Int& r = me.e[3][1];  // b^r c^s
      const Int& s = me.e[3][2];
      if ((r == 0 && p > 0) || (q == 0 && s > 0))
        props.push_back({"column-criterion", "case (iv): J in (a,c)"});
      break;
    }
    case Form::v: {
      props.push_back({"explicit-pair", ""});
      const Int& r = me.e[3][1];  // b^r c^s
      if (r > 0) props.push_back({"column-criterion", "case (v), r>0: J in (a,b)"});
      break;
    }
    case Form::vi: {
      props.push_back({"explicit-pair", ""});
      const Int& p = me.e[2][2];  // c^p d^q
      const Int& q = me.e[2][3];
      const Int& s = me.e[4][0];  // a^s d^t
      const Int& t = me.e[4][3];
      if ((s == 0 && q > 0) || (p == 0 && t > 0))
        props.push_back({"column-criterion", "case (vi): J in (b,d)"});
      break;
    }
    case Form::vii: {
      const Int& p = me.e[2][2];  // c^p d^q
      const Int& q = me.e[2][3];
      const Int& t = me.e[5][0];  // a^t b^u
      const Int& u = me.e[5][1];
      if (p == 0 || q == 0 || t == 0 || u == 0)
        props.push_back({"explicit-pair", "case (vii), one of p,q,t,u zero"});
      if (t > 0 && p > 0)
        props.push_back({"column-criterion", "case (vii), t,p>0: J in (a,c)"});
      if (q > 0 && u > 0)
        props.push_back({"column-criterion", "case (vii), q,u>0: J in (b,d)"});
      break;
    }
    default:
      props.push_back({"explicit-pair", ""});
      break;
  }
  return props;
}

}  // namespace

ClassifyResult classify_form(const MonomialMatrix& a) {
  if (a.cols() != 3)
    throw std::invalid_argument("classification needs a 2x3 matrix");
  if (a.vars().count() != 4)
    throw std::invalid_argument("classification needs 4 variables");
  if (!is_simple(a))
    throw std::invalid_argument("classification needs a simple matrix");

  ClassifyResult result;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (a.at(r, c).is_one()) {
        result.unit_entry_shortcut = true;
        result.note =
            "entry 1 present: the column criterion applies directly; see "
            "the per-column reduction report";
        return result;
      }

  bool oversized_entry = false;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (support(a.at(r, c)).size() > 2) oversized_entry = true;

  std::vector<std::array<std::size_t, 3>> col_perms;
  {
    std::array<std::size_t, 3> p{0, 1, 2};
    do col_perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::array<std::size_t, 4>> var_maps;
  {
    std::array<std::size_t, 4> p{0, 1, 2, 3};
    do var_maps.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  for (const auto& tmpl : form_templates()) {
    for (int rowswap = 0; rowswap < 2; ++rowswap) {
      for (const auto& cp : col_perms) {
        for (const auto& vm : var_maps) {
          MatchedExponents me;
          bool ok = true;
          for (std::size_t cell = 0; cell < 6 && ok; ++cell) {
            std::size_t row = cell / 3, col = cp[cell % 3];
            if (rowswap) row = 1 - row;
            const Monomial& entry = a.at(row, col);
            // Entry support must sit inside the mapped cell variables.
            std::array<bool, 4> allowed{};
            for (int tv : tmpl.cells[cell]) allowed[vm[tv]] = true;
            for (std::size_t var = 0; var < 4 && ok; ++var)
              if (entry.exponents()[var] > 0 && !allowed[var]) ok = false;
            if (!ok) break;
            if (entry.is_one()) ok = false;  // each cell needs a positive exp
            for (int tv : tmpl.cells[cell])
              me.e[cell][tv] = entry.exponents()[vm[tv]];
          }
          if (!ok) continue;
          FormMatch match;
          match.form = tmpl.form;
          match.col_perm = cp;
          match.var_map = vm;
          match.rows_swapped = rowswap != 0;
          match.cd_swapped = vm[2] > vm[3];
          match.props = applicable_props(tmpl.form, me);
          result.matches.push_back(std::move(match));
        }
      }
    }
  }
  if (result.matches.empty()) {
    result.note = oversized_entry
                      ? "no form matched: an entry involves more than two "
                        "variables"
                      : "no form matched";
  }
  return result;
}

std::pair<Binomial, SparsePolynomial> valla_fg(const Int& m, const Int& n,
                                               const Int& p, const Int& r,
                                               const Int& s, const Int& u) {
  if (m <= 0 || p <= 0 || r <= 0 || s <= 0 || u <= 0)
    throw std::invalid_argument("valla_fg: m, p, r, s, u must be positive");
  if (n < 0) throw std::invalid_argument("valla_fg: n must be nonnegative");

  VariableSet vars = VariableSet::letters(3);
  auto mono = [&](Int ea, Int eb, Int ec) {
    return Monomial(vars, {std::move(ea), std::move(eb), std::move(ec)});
  };

  if (n == 0) {
    Binomial f(mono(m, 0, s), mono(0, r, 0));
    SparsePolynomial g(vars);
    g.add_term({u, 0, 0}, 1);
    g.add_term({0, 0, p + s}, -1);
    return {f, g};
  }

  Binomial f(mono(m, 0, s), mono(0, n + r, 0));
  SparsePolynomial g(vars);
  const Int top = n + r;
  for (Int k = 0; k <= top; ++k) {
    Int tau = (k * n) / top;
    Int sigma = (k * n) % top;
    Int ea = k * u + tau * m;
    Int ec = (top - k) * (p + s) + tau * s - n * s;
    if (ea < 0 || sigma < 0 || ec < 0) {
      std::ostringstream msg;
      msg << "valla_fg: negative exponent at k=" << k;
      throw std::domain_error(msg.str());
    }
    Int coeff = binomial_coefficient(top, k);
    if ((top - k) % 2 != 0) coeff = -coeff;
    g.add_term({ea, sigma, ec}, coeff);
  }
  return {f, g};
}

MonomialMatrix valla_matrix(const Int& m, const Int& n, const Int& p,
                            const Int& r, const Int& s, const Int& u) {
  VariableSet vars = VariableSet::letters(3);
  std::vector<Monomial> row1{Monomial::power(vars, 0, m),
                             Monomial::power(vars, 1, n),
                             Monomial::power(vars, 2, p)};
  std::vector<Monomial> row2{Monomial::power(vars, 1, r),
                             Monomial::power(vars, 2, s),
                             Monomial::power(vars, 0, u)};
  return MonomialMatrix(std::move(row1), std::move(row2));
}

}  // namespace stci
