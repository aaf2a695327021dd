#include "stci/construct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stci {

namespace {

Int max0(const Int& a) { return a > 0 ? a : Int(0); }

Monomial mono(const VariableSet& vars, std::initializer_list<Int> exps) {
  return Monomial(vars, std::vector<Int>(exps));
}

}  // namespace

std::string case_name(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
  }
  throw std::logic_error("bad case tag");
}

Binomial binomial_f(const ProjectiveCurveParams& cp) {
  const auto& V = cp.vars;
  return Binomial(mono(V, {0, cp.dstar, 0, 0}),
                  mono(V, {cp.e1star, 0, 0, cp.f1star}));
}

Binomial binomial_f1(const ProjectiveCurveParams& cp) {
  const auto& V = cp.vars;
  return Binomial(mono(V, {0, cp.m, 0, 0}), mono(V, {cp.n, 0, cp.p, 0}));
}

Binomial binomial_f2(const ProjectiveCurveParams& cp) {
  const auto& V = cp.vars;
  return Binomial(mono(V, {0, 0, cp.u, 0}), mono(V, {0, cp.v, 0, cp.w}));
}

MonomialMatrix build_matrix(const ProjectiveCurveParams& cp) {
  const auto& V = cp.vars;
  std::vector<Monomial> row1{
      mono(V, {0, std::min(cp.dstar, cp.m), 0, 0}),
      mono(V, {max0(cp.e1star - cp.n), 0, 0, cp.f1star}),
      mono(V, {max0(cp.n - cp.e1star), 0, cp.p, 0})};
  std::vector<Monomial> row2{
      mono(V, {std::min(cp.e1star, cp.n), 0, 0, 0}),
      mono(V, {0, max0(cp.dstar - cp.m), 0, 0}),
      mono(V, {0, max0(cp.m - cp.dstar), 0, 0})};
  return MonomialMatrix(std::move(row1), std::move(row2));
}

CaseTag classify_case(const ProjectiveCurveParams& cp) {
  bool top = cp.e1star > cp.n;
  bool left = cp.dstar > cp.m;
  if (top && left) return CaseTag::I;
  if (top) return CaseTag::II;
  if (left) return CaseTag::III;
  return CaseTag::IV;
}

std::pair<Binomial, Binomial> select_minors(const ProjectiveCurveParams& cp) {
  MonomialMatrix a = build_matrix(cp);
  CaseTag tag = classify_case(cp);
  bool use12 = (tag == CaseTag::II || tag == CaseTag::IV);
  auto m1 = minor_2x2(a, 0, use12 ? 1 : 2);
  auto m2 = minor_2x2(a, 1, 2);
  if (!m1 || !m2)
    throw std::logic_error("zero minor in the curve matrix");
  return {*m1, *m2};
}

DefiningSystem defining_triple(const ProjectiveCurveParams& cp,
                               TripleVariant variant) {
  Binomial f = binomial_f(cp);
  Binomial f1 = binomial_f1(cp);
  Binomial f2 = binomial_f2(cp);
  auto [m1, m2] = select_minors(cp);
  std::vector<SparsePolynomial> members;
  const auto pick = [&](const Binomial& b) {
    SparsePolynomial poly = b.to_polynomial();
    members.push_back(cp.affine ? affine_specialize(poly) : poly);
  };
  if (variant == TripleVariant::minors) {
    pick(m1);
    pick(m2);
    pick(f2);
  } else {
    pick(f);
    pick(f1);
    pick(f2);
  }
  return DefiningSystem{cp,  f,  f1,      f2, build_matrix(cp),
                        classify_case(cp), m1, m2, variant, std::move(members)};
}

std::map<std::pair<Int, Int>, Int> substitute_parametrization(
    const SparsePolynomial& poly,
    const std::vector<std::pair<Int, Int>>& images) {
  if (images.size() != poly.vars().count())
    throw std::invalid_argument("image count does not match variable count");
  std::map<std::pair<Int, Int>, Int> collected;
  for (const auto& [e, c] : poly.terms()) {
    Int xi = 0, omega = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      xi += e[i] * images[i].first;
      omega += e[i] * images[i].second;
    }
    auto key = std::make_pair(xi, omega);
    auto it = collected.find(key);
    if (it == collected.end()) {
      collected.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) collected.erase(it);
    }
  }
  return collected;
}

VerificationReport symbolic_vanishes_on_curve(const SparsePolynomial& poly,
                                              const ProjectiveCurveParams& cp) {
  std::vector<std::pair<Int, Int>> images;
  auto full = parametrization(cp);
  if (poly.vars().count() == 4) {
    if (cp.affine) {
      // xi := 1, so x0 -> 1 and the others keep only their omega powers
      images = {{0, 0}, {0, cp.phi1}, {0, cp.phi2}, {0, cp.delta}};
    } else {
      images.assign(full.begin(), full.end());
    }
  } else if (poly.vars().count() == 3 && cp.affine) {
    images = {{0, cp.phi1}, {0, cp.phi2}, {0, cp.delta}};
  } else {
    throw std::invalid_argument("polynomial has unexpected variable count");
  }
  auto surviving = substitute_parametrization(poly, images);
  VerificationReport report;
  report.subject = poly.str();
  CheckItem item;
  item.name = "vanishes-on-parametrization";
  item.ok = surviving.empty();
  item.detail = item.ok ? "all terms cancel"
                        : std::to_string(surviving.size()) + " surviving terms";
  report.items.push_back(std::move(item));
  for (const auto& [key, c] : surviving) {
    std::ostringstream w;
    w << c << "*xi^" << key.first << "*omega^" << key.second;
    report.witnesses.push_back(w.str());
  }
  return report;
}

SparsePolynomial affine_specialize(const SparsePolynomial& poly) {
  if (poly.vars().count() != 4)
    throw std::invalid_argument("affine_specialize expects x0..x3");
  return poly.specialize_to_one(0);
}

}  // namespace stci
