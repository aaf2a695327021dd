#pragma once

#include "stci/monomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stci {

/// None of the 2-minors is zero or has a nonconstant monomial factor.
bool is_simple(const MonomialMatrix& a);

struct TermEvidence {
  std::string term;
  bool covered = false;
  int covering_row = -1;  // 0 or 1 when covered
};

struct MinorEvidence {
  std::size_t i, j;  // 0-based columns
  bool zero_minor = false;
  std::vector<TermEvidence> terms;
};

/// Verdict for: J contained in the radical of (a(0,k), a(1,k)). Holds iff
/// every term of every minor has support containing the support of one of
/// the column-k entries; then sqrt(J) = sqrt(J_k).
struct RadicalReduction {
  std::size_t column;  // 0-based
  bool holds = false;
  std::vector<Binomial> reduced_generators;  // J_k, zero minors omitted
  std::vector<MinorEvidence> evidence;
};

RadicalReduction radical_hypothesis(const MonomialMatrix& a, std::size_t k);

/// One RadicalReduction per column, in column order.
std::vector<RadicalReduction> find_reducing_columns(const MonomialMatrix& a);

/// The nine simple-matrix templates over K[a,b,c,d], as numbered (i)..(ix).
enum class Form { i = 1, ii, iii, iv, v, vi, vii, viii, ix };
std::string form_name(Form f);

struct PropNote {
  std::string prop;       // "column-criterion" or "explicit-pair"
  std::string condition;  // triggering condition, empty if unconditional
};

struct FormMatch {
  Form form;
  std::array<std::size_t, 3> col_perm;  // template column -> input column
  std::array<std::size_t, 4> var_map;   // template a,b,c,d -> input variable
  bool rows_swapped = false;
  bool cd_swapped = false;  // template c maps past template d's image
  std::vector<PropNote> props;
};

struct ClassifyResult {
  bool unit_entry_shortcut = false;  // some entry is 1: handled by Prop 1
  std::vector<FormMatch> matches;    // lowest-numbered form first
  std::string note;
};

/// Exhaustive search over 6 column permutations x 24 variable bijections x
/// 2 row orders. Requires a simple 2x3 matrix over 4 variables.
ClassifyResult classify_form(const MonomialMatrix& a);

/// Valla's explicit pair for the type-(i) matrix (a^m, b^n, c^p / b^r, c^s,
/// a^u) with t = q = 0:
///   f = a^m c^s - b^{n+r}
///   g = sum_{k=0}^{n+r} (-1)^{n+r-k} C(n+r,k)
///         a^{k u + tau_k m} b^{sigma_k} c^{(n+r-k)(p+s) + tau_k s - n s}
/// with tau_k, sigma_k the quotient and remainder of k n by n + r.
/// For n = 0 the degenerate pair is f = a^m c^s - b^r, g = a^u - c^{p+s}.
/// Throws std::domain_error if a computed exponent would be negative.
std::pair<Binomial, SparsePolynomial> valla_fg(const Int& m, const Int& n,
                                               const Int& p, const Int& r,
                                               const Int& s, const Int& u);

/// The matrix whose 2-minors Valla's pair defines up to radical.
MonomialMatrix valla_matrix(const Int& m, const Int& n, const Int& p,
                            const Int& r, const Int& s, const Int& u);

}  // namespace stci
