#include "stci/curve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stci {

namespace {

CheckItem identity(const std::string& name, const Int& lhs, const Int& rhs) {
  std::ostringstream detail;
  detail << lhs << " == " << rhs;
  return {name, lhs == rhs, detail.str()};
}

}  // namespace

ProjectiveCurveParams derive_params(const Int& delta, const Int& eps1,
                                    const Int& eps2) {
  if (delta <= 0 || eps1 <= 0 || eps2 <= 0)
    throw std::invalid_argument("curve exponents must be positive");
  if (eps1 >= delta)
    throw std::invalid_argument("eps1 >= delta: degenerate coordinate");
  if (eps2 > eps1)
    throw std::invalid_argument(
        "eps2 > eps1: normalize orientation first (xi/omega exchange)");

  ProjectiveCurveParams cp;
  cp.delta = delta;
  cp.eps1 = eps1;
  cp.eps2 = eps2;
  cp.phi1 = delta - eps1;
  cp.phi2 = delta - eps2;
  cp.dgcd = int_gcd(delta, eps1);
  cp.egcd = int_gcd(eps1, eps2);
  cp.fgcd = int_gcd(cp.phi1, cp.phi2);
  cp.dstar = delta / cp.dgcd;
  cp.e1star = eps1 / cp.dgcd;
  cp.f1star = cp.phi1 / cp.dgcd;
  cp.m = cp.phi2 / cp.fgcd;
  cp.p = cp.phi1 / cp.fgcd;
  cp.n = cp.m - cp.p;
  cp.u = eps1 / cp.egcd;
  cp.v = eps2 / cp.egcd;
  cp.w = cp.u - cp.v;
  return cp;
}

ProjectiveCurveParams normalize_orientation(const Int& delta, const Int& e1,
                                            const Int& e2) {
  if (e1 <= 0 || e2 <= 0 || e1 >= delta || e2 >= delta)
    throw std::invalid_argument("coordinate exponents must lie strictly "
                                "between 0 and delta");
  if (e1 >= e2) return derive_params(delta, e1, e2);
  // xi/omega exchange: eps_i -> delta - eps_i, coordinates x0 and x3 swap.
  ProjectiveCurveParams cp = derive_params(delta, delta - e1, delta - e2);
  cp.relabel.swapped = true;
  cp.relabel.perm = {3, 1, 2, 0};
  cp.vars = VariableSet::projective({"x3", "x1", "x2", "x0"});
  return cp;
}

ProjectiveCurveParams from_affine(const Int& a, const Int& b, const Int& c) {
  if (a <= 0 || b <= 0 || c <= 0)
    throw std::invalid_argument("affine exponents must be positive");
  std::array<std::pair<Int, std::size_t>, 3> sorted{
      std::pair<Int, std::size_t>{a, 0}, {b, 1}, {c, 2}};
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  if (sorted[0].first == sorted[1].first || sorted[1].first == sorted[2].first)
    throw std::invalid_argument("affine exponents must be distinct");

  // delta = largest exponent; phi1, phi2 = the two smaller ones.
  ProjectiveCurveParams cp =
      derive_params(sorted[2].first, sorted[2].first - sorted[0].first,
                    sorted[2].first - sorted[1].first);
  cp.affine = true;
  for (std::size_t i = 0; i < 3; ++i) cp.affine_perm[i] = sorted[i].second;
  cp.vars = VariableSet::projective(
      {"x0", "x" + std::to_string(sorted[0].second + 1),
       "x" + std::to_string(sorted[1].second + 1),
       "x" + std::to_string(sorted[2].second + 1)});
  return cp;
}

ParametrizationExponents parametrization(const ProjectiveCurveParams& cp) {
  return {std::pair<Int, Int>{cp.delta, 0},
          {cp.eps1, cp.phi1},
          {cp.eps2, cp.phi2},
          {0, cp.delta}};
}

VerificationReport check_identities(const ProjectiveCurveParams& cp) {
  VerificationReport report;
  report.subject = "curve parameter identities";
  report.items.push_back(
      identity("eps1*dstar == e1star*delta", cp.eps1 * cp.dstar,
               cp.e1star * cp.delta));
  report.items.push_back(
      identity("phi1*dstar == f1star*delta", cp.phi1 * cp.dstar,
               cp.f1star * cp.delta));
  report.items.push_back(
      identity("eps1*m == delta*n + eps2*p", cp.eps1 * cp.m,
               cp.delta * cp.n + cp.eps2 * cp.p));
  report.items.push_back(
      identity("phi1*m == phi2*p", cp.phi1 * cp.m, cp.phi2 * cp.p));
  report.items.push_back(
      identity("eps2*u == eps1*v", cp.eps2 * cp.u, cp.eps1 * cp.v));
  report.items.push_back(
      identity("phi2*u == phi1*v + delta*w", cp.phi2 * cp.u,
               cp.phi1 * cp.v + cp.delta * cp.w));
  report.items.push_back(identity(
      "eps1*(dstar-m) == (e1star-n)*delta - eps2*p",
      cp.eps1 * (cp.dstar - cp.m), (cp.e1star - cp.n) * cp.delta - cp.eps2 * cp.p));
  return report;
}

}  // namespace stci
