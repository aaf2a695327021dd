#pragma once

#include "stci/monomial.hpp"
#include "stci/report.hpp"

#include <array>
#include <utility>

namespace stci {

/// Coordinate relabeling produced by normalization. `perm[i]` is the user
/// coordinate shown at normalized position i; the xi/omega exchange swaps
/// x0 and x3 and replaces each epsilon_i by delta - epsilon_i.
struct Relabeling {
  bool swapped = false;
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
};

/// The raw curve exponents delta, eps1, eps2 and every derived quantity.
struct ProjectiveCurveParams {
  Int delta, eps1, eps2;
  Int phi1, phi2;             // phi_i = delta - eps_i
  Int dgcd, egcd, fgcd;       // gcd(delta,eps1), gcd(eps1,eps2), gcd(phi1,phi2)
  Int dstar, e1star, f1star;  // delta/dgcd, eps1/dgcd, phi1/dgcd
  Int m, p, n;                // phi2/fgcd, phi1/fgcd, m - p
  Int u, v, w;                // eps1/egcd, eps2/egcd, u - v

  VariableSet vars = VariableSet::projective();
  Relabeling relabel;
  bool affine = false;
  std::array<std::size_t, 3> affine_perm{0, 1, 2};
};

/// All derived quantities from already-oriented input 0 < eps2 <= eps1 < delta.
/// Throws std::invalid_argument on an ordering or positivity violation.
ProjectiveCurveParams derive_params(const Int& delta, const Int& eps1,
                                    const Int& eps2);

/// Orient raw exponents of x1, x2: if e1 < e2, apply the xi/omega exchange
/// (eps_i -> delta - eps_i, x0 and x3 swapped) and record the relabeling.
/// Requires 0 < e1, e2 < delta.
ProjectiveCurveParams normalize_orientation(const Int& delta, const Int& e1,
                                            const Int& e2);

/// Projectivize an affine monomial curve (t^a, t^b, t^c): exponents are
/// sorted ascending (permutation recorded), then delta = c, phi1 = a,
/// phi2 = b. The affine flag marks downstream x0 := 1 specialization.
ProjectiveCurveParams from_affine(const Int& a, const Int& b, const Int& c);

/// Per projective coordinate, the (xi-exponent, omega-exponent) pair.
using ParametrizationExponents = std::array<std::pair<Int, Int>, 4>;
ParametrizationExponents parametrization(const ProjectiveCurveParams& cp);

/// The arithmetic identities behind membership of f, f1, f2 in I(C), plus
/// the signed identity eps1*(dstar - m) = (e1star - n)*delta - eps2*p.
/// A failing item indicates an implementation bug: these are theorems.
VerificationReport check_identities(const ProjectiveCurveParams& cp);

}  // namespace stci
