#pragma once

#include "stci/curve.hpp"
#include "stci/monomial.hpp"
#include "stci/report.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stci {

enum class CaseTag { I, II, III, IV };
std::string case_name(CaseTag t);

/// f = x1^dstar - x0^e1star * x3^f1star
Binomial binomial_f(const ProjectiveCurveParams& cp);
/// f1 = x1^m - x0^n * x2^p
Binomial binomial_f1(const ProjectiveCurveParams& cp);
/// f2 = x2^u - x1^v * x3^w
Binomial binomial_f2(const ProjectiveCurveParams& cp);

/// The 2x3 monomial matrix whose 2-minors satisfy Delta_12 = f and
/// Delta_13 = f1. Zero exponents render as the entry 1.
MonomialMatrix build_matrix(const ProjectiveCurveParams& cp);

/// I: e1star > n, dstar > m;  II: e1star > n, dstar <= m;
/// III: e1star <= n, dstar > m;  IV: both <=.
CaseTag classify_case(const ProjectiveCurveParams& cp);

/// (Delta_13, Delta_23) for cases I/III; (Delta_12, Delta_23) for II/IV.
std::pair<Binomial, Binomial> select_minors(const ProjectiveCurveParams& cp);

enum class TripleVariant { minors, binomials };

struct DefiningSystem {
  ProjectiveCurveParams params;
  Binomial f, f1, f2;
  MonomialMatrix matrix;
  CaseTag tag;
  Binomial m1, m2;
  TripleVariant variant;
  /// The three defining equations; x0 := 1 applied when params.affine.
  /// Specialization can merge a binomial's monomials, so members are
  /// general polynomials.
  std::vector<SparsePolynomial> members;
};

DefiningSystem defining_triple(const ProjectiveCurveParams& cp,
                               TripleVariant variant);

/// Substitute variable i by xi^{images[i].first} * omega^{images[i].second}
/// and collect like (xi, omega)-exponent pairs exactly.
std::map<std::pair<Int, Int>, Int> substitute_parametrization(
    const SparsePolynomial& poly,
    const std::vector<std::pair<Int, Int>>& images);

/// Does poly vanish identically under the curve substitution? Surviving
/// terms are reported as witnesses. Accepts 4-variable (projective) input,
/// or 3-variable input in affine mode (x1, x2, x3).
VerificationReport symbolic_vanishes_on_curve(const SparsePolynomial& poly,
                                              const ProjectiveCurveParams& cp);

/// Set x0 := 1 in a polynomial over x0..x3.
SparsePolynomial affine_specialize(const SparsePolynomial& poly);

}  // namespace stci
