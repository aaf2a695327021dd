#pragma once

#include "stci/numeric.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stci {

/// Ordered set of variable display names. Cheap to copy (shared storage).
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  static VariableSet projective();                 // x0, x1, x2, x3
  static VariableSet projective(std::vector<std::string> names);
  static VariableSet letters(std::size_t n);       // a, b, c, d, ...

  std::size_t count() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  std::optional<std::size_t> index(const std::string& name) const;

  bool operator==(const VariableSet& o) const;
  bool operator!=(const VariableSet& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// A monomial: one nonnegative exponent per variable.
class Monomial {
 public:
  Monomial(VariableSet vars, std::vector<Int> exponents);
  static Monomial one(const VariableSet& vars);
  /// Single power var^exp.
  static Monomial power(const VariableSet& vars, std::size_t var, Int exp);

  const VariableSet& vars() const { return vars_; }
  const std::vector<Int>& exponents() const { return exps_; }
  Int total_degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const;
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Componentwise <=.
  bool divides(const Monomial& o) const;

  std::string str() const;

 private:
  VariableSet vars_;
  std::vector<Int> exps_;
};

/// Canonical monomial order: degree-lexicographic, ties broken at the first
/// variable index where the exponents differ (larger exponent wins).
bool canonical_less(const Monomial& a, const Monomial& b);

/// Componentwise minimum of the exponent vectors.
Monomial mono_gcd(const Monomial& a, const Monomial& b);

/// Indices of variables with positive exponent.
std::set<std::size_t> support(const Monomial& m);

/// Every positive exponent replaced by 1.
Monomial squarefree_part(const Monomial& m);

/// support(term) contains support(generator)?
bool support_contains(const Monomial& term, const Monomial& generator);

class SparsePolynomial;

/// Difference of two distinct monomials. Stored canonically as lead - trail
/// with lead > trail; the sign flag records the construction orientation and
/// drives rendering, so printed output reproduces the source orientation.
class Binomial {
 public:
  Binomial(Monomial first, Monomial second);

  const Monomial& lead() const { return lead_; }
  const Monomial& trail() const { return trail_; }
  int sign() const { return sign_; }

  /// Construction orientation: the binomial equals first() - second().
  const Monomial& first() const { return sign_ > 0 ? lead_ : trail_; }
  const Monomial& second() const { return sign_ > 0 ? trail_ : lead_; }

  const VariableSet& vars() const { return lead_.vars(); }
  bool is_homogeneous() const;

  SparsePolynomial to_polynomial() const;

  bool same_up_to_sign(const Binomial& o) const;
  bool operator==(const Binomial& o) const;
  bool operator!=(const Binomial& o) const { return !(*this == o); }

  std::string str() const;  // first - second

 private:
  Monomial lead_, trail_;
  int sign_;
};

/// Exact multivariate polynomial: exponent vector -> nonzero integer
/// coefficient.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(VariableSet vars);
  static SparsePolynomial from_monomial(const Monomial& m, Int coeff = 1);

  const VariableSet& vars() const { return vars_; }
  const std::map<std::vector<Int>, Int>& terms() const { return terms_; }

  void add_term(const std::vector<Int>& exps, const Int& coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_homogeneous() const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  bool operator==(const SparsePolynomial& o) const;

  /// Set variable `var` to 1: its exponent is dropped, like terms merge.
  SparsePolynomial specialize_to_one(std::size_t var) const;
  /// Remove a variable that no term uses; result is over the smaller set.
  SparsePolynomial drop_variable(std::size_t var) const;

  /// Terms in descending lexicographic order, e.g. "a^4-2*a*b*c+c^3".
  std::string str() const;

 private:
  VariableSet vars_;
  std::map<std::vector<Int>, Int> terms_;
};

/// A 2-row grid of monomials over a shared variable set.
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<Monomial> row1, std::vector<Monomial> row2);

  std::size_t cols() const { return cols_; }
  const VariableSet& vars() const { return entries_.front().vars(); }
  const Monomial& at(std::size_t row, std::size_t col) const;

  std::string str() const;  // rows ';'-separated, entries ','-separated

 private:
  std::size_t cols_;
  std::vector<Monomial> entries_;  // row-major
};

/// 2-minor of columns i, j (0-based): a(0,i)a(1,j) - a(0,j)a(1,i).
/// Empty optional is the distinguished Zero value (product monomials equal).
std::optional<Binomial> minor_2x2(const MonomialMatrix& a, std::size_t i,
                                  std::size_t j);

struct MinorEntry {
  std::size_t i, j;  // 0-based, i < j
  std::optional<Binomial> minor;
};

/// All C(r,2) minors in column order.
std::vector<MinorEntry> all_2minors(const MonomialMatrix& a);

}  // namespace stci
