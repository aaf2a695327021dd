#include "stci/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace stci {

// ---------------------------------------------------------------- VariableSet

VariableSet::VariableSet(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("variable set must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name: " + n);
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VariableSet VariableSet::projective() {
  return VariableSet({"x0", "x1", "x2", "x3"});
}

VariableSet VariableSet::projective(std::vector<std::string> names) {
  if (names.size() != 4)
    throw std::invalid_argument("projective variable set needs 4 names");
  return VariableSet(std::move(names));
}

VariableSet VariableSet::letters(std::size_t n) {
  if (n == 0 || n > 26) throw std::invalid_argument("letters: bad count");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return VariableSet(std::move(names));
}

std::optional<std::size_t> VariableSet::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

bool VariableSet::operator==(const VariableSet& o) const {
  return names_ == o.names_ || *names_ == *o.names_;
}

// ------------------------------------------------------------------- Monomial

Monomial::Monomial(VariableSet vars, std::vector<Int> exponents)
    : vars_(std::move(vars)), exps_(std::move(exponents)) {
  if (exps_.size() != vars_.count())
    throw std::invalid_argument("exponent count does not match variable count");
  for (const auto& e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::one(const VariableSet& vars) {
  return Monomial(vars, std::vector<Int>(vars.count(), 0));
}

Monomial Monomial::power(const VariableSet& vars, std::size_t var, Int exp) {
  std::vector<Int> e(vars.count(), 0);
  e.at(var) = std::move(exp);
  return Monomial(vars, std::move(e));
}

Int Monomial::total_degree() const {
  Int d = 0;
  for (const auto& e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](const Int& e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable-set mismatch");
  std::vector<Int> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return Monomial(vars_, std::move(e));
}

bool Monomial::operator==(const Monomial& o) const {
  return vars_ == o.vars_ && exps_ == o.exps_;
}

bool Monomial::divides(const Monomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable-set mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

std::string Monomial::str() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (any) out << '*';
    out << vars_.name(i);
    if (exps_[i] != 1) out << '^' << exps_[i];
    any = true;
  }
  if (!any) return "1";
  return out.str();
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  Int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  return false;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("variable-set mismatch");
  std::vector<Int> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(a.exponents()[i], b.exponents()[i]);
  return Monomial(a.vars(), std::move(e));
}

std::set<std::size_t> support(const Monomial& m) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < m.exponents().size(); ++i)
    if (m.exponents()[i] > 0) s.insert(i);
  return s;
}

Monomial squarefree_part(const Monomial& m) {
  std::vector<Int> e(m.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = m.exponents()[i] > 0 ? 1 : 0;
  return Monomial(m.vars(), std::move(e));
}

bool support_contains(const Monomial& term, const Monomial& generator) {
  for (std::size_t i = 0; i < generator.exponents().size(); ++i)
    if (generator.exponents()[i] > 0 && term.exponents()[i] == 0) return false;
  return true;
}

// ------------------------------------------------------------------- Binomial

Binomial::Binomial(Monomial first, Monomial second)
    : lead_(std::move(first)), trail_(std::move(second)), sign_(1) {
  if (lead_.vars() != trail_.vars())
    throw std::invalid_argument("variable-set mismatch");
  if (lead_ == trail_)
    throw std::invalid_argument("binomial needs two distinct monomials");
  if (canonical_less(lead_, trail_)) {
    std::swap(lead_, trail_);
    sign_ = -1;
  }
}

bool Binomial::is_homogeneous() const {
  return lead_.total_degree() == trail_.total_degree();
}

SparsePolynomial Binomial::to_polynomial() const {
  SparsePolynomial p(vars());
  p.add_term(first().exponents(), 1);
  p.add_term(second().exponents(), -1);
  return p;
}

bool Binomial::same_up_to_sign(const Binomial& o) const {
  return lead_ == o.lead_ && trail_ == o.trail_;
}

bool Binomial::operator==(const Binomial& o) const {
  return sign_ == o.sign_ && same_up_to_sign(o);
}

std::string Binomial::str() const {
  return first().str() + "-" + second().str();
}

// ---------------------------------------------------------- SparsePolynomial

SparsePolynomial::SparsePolynomial(VariableSet vars) : vars_(std::move(vars)) {}

SparsePolynomial SparsePolynomial::from_monomial(const Monomial& m, Int coeff) {
  SparsePolynomial p(m.vars());
  p.add_term(m.exponents(), coeff);
  return p;
}

void SparsePolynomial::add_term(const std::vector<Int>& exps, const Int& coeff) {
  if (exps.size() != vars_.count())
    throw std::invalid_argument("exponent vector size mismatch");
  if (coeff == 0) return;
  for (const auto& e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  Int deg = -1;
  for (const auto& [e, c] : terms_) {
    Int d = 0;
    for (const auto& x : e) d += x;
    if (deg < 0)
      deg = d;
    else if (d != deg)
      return false;
  }
  return true;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable-set mismatch");
  SparsePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable-set mismatch");
  SparsePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("variable-set mismatch");
  SparsePolynomial r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<Int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
  return vars_ == o.vars_ && terms_ == o.terms_;
}

SparsePolynomial SparsePolynomial::specialize_to_one(std::size_t var) const {
  SparsePolynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    std::vector<Int> e2 = e;
    e2.at(var) = 0;
    r.add_term(e2, c);
  }
  return r;
}

SparsePolynomial SparsePolynomial::drop_variable(std::size_t var) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars_.count(); ++i)
    if (i != var) names.push_back(vars_.name(i));
  SparsePolynomial r{VariableSet(std::move(names))};
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != 0)
      throw std::invalid_argument("drop_variable: variable still in use");
    std::vector<Int> e2;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var) e2.push_back(e[i]);
    r.add_term(e2, c);
  }
  return r;
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  // Descending lexicographic term order; std::map already sorts ascending.
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    Monomial m(vars_, e);
    if (m.is_one()) {
      out << a;
    } else {
      if (a != 1) out << a << '*';
      out << m.str();
    }
  }
  return out.str();
}

// ------------------------------------------------------------ MonomialMatrix

MonomialMatrix::MonomialMatrix(std::vector<Monomial> row1,
                               std::vector<Monomial> row2) {
  if (row1.size() != row2.size())
    throw std::invalid_argument("rows must have equal length");
  if (row1.size() < 2) throw std::invalid_argument("matrix needs >= 2 columns");
  cols_ = row1.size();
  const VariableSet& vars = row1.front().vars();
  for (const auto& m : row1)
    if (m.vars() != vars) throw std::invalid_argument("variable-set mismatch");
  for (const auto& m : row2)
    if (m.vars() != vars) throw std::invalid_argument("variable-set mismatch");
  entries_ = std::move(row1);
  entries_.insert(entries_.end(), std::make_move_iterator(row2.begin()),
                  std::make_move_iterator(row2.end()));
}

const Monomial& MonomialMatrix::at(std::size_t row, std::size_t col) const {
  if (row > 1 || col >= cols_) throw std::out_of_range("bad matrix index");
  return entries_[row * cols_ + col];
}

std::string MonomialMatrix::str() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < 2; ++r) {
    if (r) out << ';';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ',';
      out << at(r, c).str();
    }
  }
  return out.str();
}

std::optional<Binomial> minor_2x2(const MonomialMatrix& a, std::size_t i,
                                  std::size_t j) {
  if (i == j) throw std::invalid_argument("minor needs distinct columns");
  if (i >= a.cols() || j >= a.cols())
    throw std::out_of_range("invalid column index");
  Monomial lhs = a.at(0, i) * a.at(1, j);
  Monomial rhs = a.at(0, j) * a.at(1, i);
  if (lhs == rhs) return std::nullopt;
  return Binomial(std::move(lhs), std::move(rhs));
}

std::vector<MinorEntry> all_2minors(const MonomialMatrix& a) {
  std::vector<MinorEntry> result;
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      result.push_back({i, j, minor_2x2(a, i, j)});
  return result;
}

}  // namespace stci
