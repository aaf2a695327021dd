// stci: construct and verify set-theoretic defining systems for monomial
// curves in 3-space, and decide the column-reduction criterion for 2xr
// monomial determinantal ideals.

#include "stci/construct.hpp"
#include "stci/curve.hpp"
#include "stci/field.hpp"
#include "stci/monomial.hpp"
#include "stci/oracle.hpp"
#include "stci/radical.hpp"
#include "stci/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;
using namespace stci;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;
constexpr unsigned kExtensionCap = 12;

Int parse_big(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer: " + s);
  }
}

json poly_json(const SparsePolynomial& poly, const std::string& text) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) {
    json exps = json::array();
    for (const auto& x : e) exps.push_back(x.str());
    terms.push_back(json{{"exps", exps}, {"coeff", c.str()}});
  }
  return json{{"text", text}, {"terms", terms}};
}

json poly_json(const SparsePolynomial& poly) {
  return poly_json(poly, poly.str());
}

json binomial_json(const Binomial& b) {
  return poly_json(b.to_polynomial(), b.str());
}

json report_json(const VerificationReport& report) {
  json items = json::array();
  for (const auto& it : report.items)
    items.push_back(json{{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
  return json{{"subject", report.subject},
              {"ok", report.ok()},
              {"items", items},
              {"witnesses", report.witnesses}};
}

json params_json(const ProjectiveCurveParams& cp) {
  auto s = [](const Int& v) { return v.str(); };
  json names = json::array();
  for (std::size_t i = 0; i < 4; ++i) names.push_back(cp.vars.name(i));
  return json{{"delta", s(cp.delta)},   {"eps1", s(cp.eps1)},
              {"eps2", s(cp.eps2)},     {"phi1", s(cp.phi1)},
              {"phi2", s(cp.phi2)},     {"dgcd", s(cp.dgcd)},
              {"egcd", s(cp.egcd)},     {"fgcd", s(cp.fgcd)},
              {"dstar", s(cp.dstar)},   {"e1star", s(cp.e1star)},
              {"f1star", s(cp.f1star)}, {"m", s(cp.m)},
              {"p", s(cp.p)},           {"n", s(cp.n)},
              {"u", s(cp.u)},           {"v", s(cp.v)},
              {"w", s(cp.w)},           {"affine", cp.affine},
              {"swapped", cp.relabel.swapped}, {"vars", names}};
}

json equality_json(const EqualityReport& rep) {
  return json{{"equal", rep.equal},
              {"left_size", rep.left_size},
              {"right_size", rep.right_size},
              {"left_only", rep.left_only},
              {"right_only", rep.right_only},
              {"field", rep.field_desc}};
}

void print_report_text(const VerificationReport& report) {
  for (const auto& it : report.items)
    std::cout << (it.ok ? "  [ok]   " : "  [FAIL] ") << it.name << ": "
              << it.detail << "\n";
  for (const auto& w : report.witnesses)
    std::cout << "  witness: " << w << "\n";
}

struct CurveOptions {
  std::string delta, eps1, eps2;
  std::vector<std::string> affine;
  bool reduce_gcd = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--delta", delta, "projective degree delta");
    cmd->add_option("--eps1", eps1, "xi-exponent of x1");
    cmd->add_option("--eps2", eps2, "xi-exponent of x2");
    cmd->add_option("--affine", affine,
                    "affine curve exponents a b c for (t^a, t^b, t^c)")
        ->expected(3);
    cmd->add_flag("--reduce-gcd", reduce_gcd,
                  "divide delta, eps1, eps2 by their common gcd");
  }

  ProjectiveCurveParams resolve(json* input_echo) const {
    if (!affine.empty()) {
      Int a = parse_big(affine[0]), b = parse_big(affine[1]),
          c = parse_big(affine[2]);
      if (input_echo)
        *input_echo = json{{"mode", "affine"},
                           {"exponents", {a.str(), b.str(), c.str()}}};
      return from_affine(a, b, c);
    }
    if (delta.empty() || eps1.empty() || eps2.empty())
      throw std::invalid_argument(
          "need --delta/--eps1/--eps2 or --affine A B C");
    Int d = parse_big(delta), e1 = parse_big(eps1), e2 = parse_big(eps2);
    if (reduce_gcd) {
      Int g = int_gcd(d, int_gcd(e1, e2));
      if (g > 1) {
        d /= g;
        e1 /= g;
        e2 /= g;
      }
    }
    if (input_echo)
      *input_echo = json{{"mode", "projective"},
                         {"delta", d.str()},
                         {"eps1", e1.str()},
                         {"eps2", e2.str()}};
    return normalize_orientation(d, e1, e2);
  }
};

std::array<const Binomial*, 3> triple_binomials(const DefiningSystem& sys) {
  if (sys.variant == TripleVariant::minors)
    return {&sys.m1, &sys.m2, &sys.f2};
  return {&sys.f, &sys.f1, &sys.f2};
}

json system_json(const DefiningSystem& sys) {
  json matrix = json::array();
  for (std::size_t r = 0; r < 2; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 3; ++c) row.push_back(sys.matrix.at(r, c).str());
    matrix.push_back(row);
  }
  json members = json::array();
  if (sys.params.affine) {
    for (const auto& poly : sys.members) members.push_back(poly_json(poly));
  } else {
    for (const Binomial* b : triple_binomials(sys))
      members.push_back(binomial_json(*b));
  }
  return json{{"f", binomial_json(sys.f)},
              {"f1", binomial_json(sys.f1)},
              {"f2", binomial_json(sys.f2)},
              {"matrix", matrix},
              {"matrix_text", sys.matrix.str()},
              {"case", case_name(sys.tag)},
              {"M1", binomial_json(sys.m1)},
              {"M2", binomial_json(sys.m2)},
              {"variant",
               sys.variant == TripleVariant::minors ? "minors" : "binomials"},
              {"members", members}};
}

void emit(const json& report, bool as_json) {
  if (as_json) std::cout << report.dump(2) << "\n";
}

void print_params_text(const ProjectiveCurveParams& cp) {
  std::cout << "delta=" << cp.delta << " eps1=" << cp.eps1
            << " eps2=" << cp.eps2 << " phi1=" << cp.phi1
            << " phi2=" << cp.phi2 << "\n";
  std::cout << "dgcd=" << cp.dgcd << " egcd=" << cp.egcd << " fgcd=" << cp.fgcd
            << "\n";
  std::cout << "dstar=" << cp.dstar << " e1star=" << cp.e1star
            << " f1star=" << cp.f1star << "\n";
  std::cout << "m=" << cp.m << " p=" << cp.p << " n=" << cp.n << "\n";
  std::cout << "u=" << cp.u << " v=" << cp.v << " w=" << cp.w << "\n";
  if (cp.relabel.swapped)
    std::cout << "orientation: xi/omega exchanged (x0 and x3 swapped)\n";
  if (cp.affine) std::cout << "mode: affine (x0 := 1 specialization)\n";
}

// ------------------------------------------------------------------- derive

int cmd_derive(const CurveOptions& opts, bool as_json) {
  json input;
  ProjectiveCurveParams cp = opts.resolve(&input);
  VerificationReport identities = check_identities(cp);
  json report{{"input", input},
              {"params", params_json(cp)},
              {"system", nullptr},
              {"checks", json::array({report_json(identities)})},
              {"oracle", json::array()}};
  if (as_json) {
    emit(report, true);
  } else {
    print_params_text(cp);
    print_report_text(identities);
  }
  return identities.ok() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- binomials

int cmd_binomials(const CurveOptions& opts, const std::string& variant,
                  bool as_json) {
  json input;
  ProjectiveCurveParams cp = opts.resolve(&input);
  TripleVariant tv = variant == "binomials" ? TripleVariant::binomials
                                            : TripleVariant::minors;
  DefiningSystem sys = defining_triple(cp, tv);
  json report{{"input", input},
              {"params", params_json(cp)},
              {"system", system_json(sys)},
              {"checks", json::array()},
              {"oracle", json::array()}};
  if (as_json) {
    emit(report, true);
  } else if (cp.affine) {
    // projective scaffolding involves x0; show only the specialized system
    std::cout << "case " << case_name(sys.tag) << "\n";
    std::cout << "defining system (" << variant << ", specialized):\n";
    for (const auto& member : sys.members)
      std::cout << "  " << member.str() << "\n";
  } else {
    std::cout << "case " << case_name(sys.tag) << "\n";
    std::cout << "matrix " << sys.matrix.str() << "\n";
    std::cout << "f  = " << sys.f.str() << "\n";
    std::cout << "f1 = " << sys.f1.str() << "\n";
    std::cout << "f2 = " << sys.f2.str() << "\n";
    std::cout << "M1 = " << sys.m1.str() << "\n";
    std::cout << "M2 = " << sys.m2.str() << "\n";
    std::cout << "defining system (" << variant << "):\n";
    for (const Binomial* b : triple_binomials(sys))
      std::cout << "  " << b->str() << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const CurveOptions& opts,
               const std::vector<std::uint64_t>& primes, unsigned max_ext,
               bool skip_oracle, const std::vector<std::string>& extra_polys,
               bool as_json) {
  json input;
  ProjectiveCurveParams cp = opts.resolve(&input);
  DefiningSystem minors = defining_triple(cp, TripleVariant::minors);
  DefiningSystem binoms = defining_triple(cp, TripleVariant::binomials);

  bool failed = false;
  bool inconclusive = false;
  json checks = json::array();
  auto add_report = [&](const VerificationReport& rep, bool text) {
    checks.push_back(report_json(rep));
    if (!rep.ok()) failed = true;
    if (text) {
      std::cout << rep.subject << "\n";
      print_report_text(rep);
    }
  };

  add_report(check_identities(cp), !as_json);

  {
    VerificationReport rep;
    rep.subject = "matrix structure";
    rep.items.push_back({"matrix-is-simple", is_simple(minors.matrix),
                         minors.matrix.str()});
    auto d12 = minor_2x2(minors.matrix, 0, 1);
    auto d13 = minor_2x2(minors.matrix, 0, 2);
    rep.items.push_back({"Delta12 == f", d12 && *d12 == minors.f,
                         d12 ? d12->str() : "zero"});
    rep.items.push_back({"Delta13 == f1", d13 && *d13 == minors.f1,
                         d13 ? d13->str() : "zero"});
    add_report(rep, !as_json);
  }

  for (const Binomial* b :
       {&binoms.f, &binoms.f1, &binoms.f2, &minors.m1, &minors.m2})
    add_report(symbolic_vanishes_on_curve(b->to_polynomial(), cp), !as_json);
  for (const auto& text : extra_polys) {
    SparsePolynomial poly = parse_polynomial(cp.vars, text);
    add_report(symbolic_vanishes_on_curve(poly, cp), !as_json);
  }

  json oracle = json::array();
  if (!skip_oracle) {
    for (std::uint64_t p : primes) {
      FieldHandle base = FieldHandle::build(p, 1);
      json entry{{"prime", p}};
      json entry_checks = json::array();
      auto add_eq = [&](const std::string& name, const EqualityReport& rep) {
        entry_checks.push_back(
            json{{"name", name}, {"ok", rep.equal}, {"report", equality_json(rep)}});
        if (!rep.equal) failed = true;
        if (!as_json)
          std::cout << "  [" << (rep.equal ? "ok" : "FAIL") << "] p=" << p
                    << " " << name << " (" << rep.left_size << " vs "
                    << rep.right_size << " points)\n";
      };

      std::vector<SparsePolynomial> sys_b, sys_m, gens_all, gens_sel;
      for (const auto& member : binoms.members) sys_b.push_back(member);
      for (const auto& member : minors.members) sys_m.push_back(member);
      for (const auto& entry2 : all_2minors(minors.matrix)) {
        if (!entry2.minor) continue;
        SparsePolynomial poly = entry2.minor->to_polynomial();
        gens_all.push_back(cp.affine ? affine_specialize(poly) : poly);
      }
      gens_sel.push_back(sys_m[0]);
      gens_sel.push_back(sys_m[1]);

      std::set<Point> vb, vm, vj, vsel;
      if (cp.affine) {
        auto drop = [](std::vector<SparsePolynomial> polys) {
          std::vector<SparsePolynomial> out;
          for (auto& poly : polys) out.push_back(poly.drop_variable(0));
          return out;
        };
        vb = affine_variety(drop(sys_b), base);
        vm = affine_variety(drop(sys_m), base);
        vj = affine_variety(drop(gens_all), base);
        vsel = affine_variety(drop(gens_sel), base);
      } else {
        vb = projective_variety(sys_b, base);
        vm = projective_variety(sys_m, base);
        vj = projective_variety(gens_all, base);
        vsel = projective_variety(gens_sel, base);
      }
      add_eq("V(M1,M2) == V(J)", compare_sets(vsel, vj, base, !cp.affine));
      add_eq("V(f,f1,f2) == V(M1,M2,f2)", compare_sets(vb, vm, base, !cp.affine));

      CurveMatchResult match = match_variety_to_curve(
          vb, cp, p, std::clamp(max_ext, 1u, kExtensionCap));
      const char* status = match.status == CurveMatchStatus::equal
                               ? "equal"
                               : match.status == CurveMatchStatus::mismatch
                                     ? "mismatch"
                                     : "equal-up-to-unmatched-points";
      if (match.status == CurveMatchStatus::mismatch) failed = true;
      if (match.status == CurveMatchStatus::inconclusive) inconclusive = true;
      entry["curve_match"] = json{{"status", status},
                                  {"k_used", match.k_used},
                                  {"report", equality_json(match.report)}};
      if (!as_json)
        std::cout << "  [" << (match.status == CurveMatchStatus::equal
                                   ? "ok"
                                   : "??")
                  << "] p=" << p << " variety == curve image: " << status
                  << " (k=" << match.k_used << ")\n";
      entry["checks"] = entry_checks;
      oracle.push_back(entry);
    }
  }

  json report{{"input", input},
              {"params", params_json(cp)},
              {"system", system_json(minors)},
              {"checks", checks},
              {"oracle", oracle}};
  emit(report, as_json);
  if (failed) return kExitCheckFailed;
  if (inconclusive) return kExitInconclusive;
  return kExitOk;
}

// -------------------------------------------------------------------- prop1

VariableSet vars_for_matrix(const std::string& spec,
                            const std::string& vars_csv) {
  if (!vars_csv.empty()) {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : vars_csv) {
      if (ch == ',') {
        names.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        cur += ch;
      }
    }
    if (!cur.empty()) names.push_back(cur);
    return VariableSet(names);
  }
  auto names = scan_variable_names(spec);
  if (names.empty()) throw std::invalid_argument("no variables in matrix");
  return VariableSet(names);
}

json reduction_json(const RadicalReduction& red) {
  json gens = json::array();
  for (const auto& g : red.reduced_generators) gens.push_back(g.str());
  json evidence = json::array();
  for (const auto& ev : red.evidence) {
    json terms = json::array();
    for (const auto& te : ev.terms)
      terms.push_back(json{{"term", te.term},
                           {"covered", te.covered},
                           {"covering_row", te.covering_row}});
    evidence.push_back(json{{"i", ev.i + 1},
                            {"j", ev.j + 1},
                            {"zero_minor", ev.zero_minor},
                            {"terms", terms}});
  }
  return json{{"column", red.column + 1},
              {"holds", red.holds},
              {"reduced_generators", gens},
              {"evidence", evidence}};
}

int cmd_prop1(const std::string& spec, const std::string& vars_csv,
              int column, bool oracle_check,
              const std::vector<std::uint64_t>& primes, bool as_json) {
  VariableSet vars = vars_for_matrix(spec, vars_csv);
  MonomialMatrix a = parse_matrix(vars, spec);
  std::vector<RadicalReduction> reductions;
  if (column > 0) {
    if (static_cast<std::size_t>(column) > a.cols())
      throw std::invalid_argument("column out of range");
    reductions.push_back(radical_hypothesis(a, column - 1));
  } else {
    reductions = find_reducing_columns(a);
  }

  bool failed = false;
  json checks = json::array();
  json oracle = json::array();
  for (const auto& red : reductions) {
    checks.push_back(reduction_json(red));
    if (!as_json)
      std::cout << "column " << red.column + 1 << ": "
                << (red.holds ? "holds" : "does not hold") << "\n";
    if (red.holds && oracle_check) {
      std::vector<SparsePolynomial> gens_all, gens_k;
      for (const auto& entry : all_2minors(a))
        if (entry.minor) gens_all.push_back(entry.minor->to_polynomial());
      for (const auto& g : red.reduced_generators)
        gens_k.push_back(g.to_polynomial());
      for (std::uint64_t p : primes) {
        FieldHandle field = FieldHandle::build(p, 1);
        EqualityReport rep =
            compare_sets(affine_variety(gens_all, field),
                         affine_variety(gens_k, field), field, false);
        if (!rep.equal) failed = true;
        oracle.push_back(json{{"prime", p},
                              {"column", red.column + 1},
                              {"name", "V(J) == V(J_k)"},
                              {"ok", rep.equal},
                              {"report", equality_json(rep)}});
        if (!as_json)
          std::cout << "  oracle p=" << p << ": V(J) == V(J_" << red.column + 1
                    << ") " << (rep.equal ? "ok" : "FAIL") << "\n";
      }
    }
  }
  json report{{"input", json{{"matrix", spec}}},
              {"matrix", a.str()},
              {"checks", checks},
              {"oracle", oracle}};
  emit(report, as_json);
  return failed ? kExitCheckFailed : kExitOk;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const std::string& spec, const std::string& vars_csv,
                 bool as_json) {
  VariableSet vars = vars_for_matrix(spec, vars_csv);
  if (vars_csv.empty() && vars.count() < 4) {
    // classification is over 4 variables; pad a short scan with the
    // remaining default letters
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars.count(); ++i)
      names.push_back(vars.name(i));
    for (const char* letter : {"a", "b", "c", "d"})
      if (!vars.index(letter) && names.size() < 4) names.push_back(letter);
    std::sort(names.begin(), names.end());
    vars = VariableSet(names);
  }
  MonomialMatrix a = parse_matrix(vars, spec);
  ClassifyResult result = classify_form(a);

  json matches = json::array();
  for (const auto& match : result.matches) {
    json props = json::array();
    for (const auto& pn : match.props)
      props.push_back(json{{"prop", pn.prop}, {"condition", pn.condition}});
    json cols = json::array(), vm = json::array();
    for (auto c : match.col_perm) cols.push_back(c + 1);
    for (auto v : match.var_map) vm.push_back(a.vars().name(v));
    matches.push_back(json{{"form", form_name(match.form)},
                           {"col_perm", cols},
                           {"var_map", vm},
                           {"rows_swapped", match.rows_swapped},
                           {"cd_swapped", match.cd_swapped},
                           {"props", props}});
  }
  json checks = json::array();
  if (result.unit_entry_shortcut)
    for (const auto& red : find_reducing_columns(a))
      checks.push_back(reduction_json(red));
  json report{{"input", json{{"matrix", spec}}},
              {"matrix", a.str()},
              {"unit_entry_shortcut", result.unit_entry_shortcut},
              {"note", result.note},
              {"matches", matches},
              {"checks", checks},
              {"oracle", json::array()}};
  emit(report, as_json);
  if (!as_json) {
    if (result.unit_entry_shortcut) {
      std::cout << result.note << "\n";
    } else if (result.matches.empty()) {
      std::cout << result.note << "\n";
    } else {
      for (const auto& match : result.matches) {
        std::cout << "form (" << form_name(match.form) << ") cols ["
                  << match.col_perm[0] + 1 << "," << match.col_perm[1] + 1
                  << "," << match.col_perm[2] + 1 << "] vars [";
        for (std::size_t i = 0; i < 4; ++i)
          std::cout << (i ? "," : "") << a.vars().name(match.var_map[i]);
        std::cout << "]" << (match.rows_swapped ? " rows-swapped" : "");
        for (const auto& pn : match.props) {
          std::cout << " " << pn.prop;
          if (!pn.condition.empty()) std::cout << " (" << pn.condition << ")";
        }
        std::cout << "\n";
      }
    }
  }
  return kExitOk;
}

// -------------------------------------------------------------------- valla

int cmd_valla(const std::string& m, const std::string& n, const std::string& p,
              const std::string& r, const std::string& s, const std::string& u,
              const std::vector<std::string>& check_curve,
              const std::vector<std::uint64_t>& primes, bool as_json) {
  Int mi = parse_big(m), ni = parse_big(n), pi = parse_big(p),
      ri = parse_big(r), si = parse_big(s), ui = parse_big(u);
  auto [f, g] = valla_fg(mi, ni, pi, ri, si, ui);
  MonomialMatrix a = valla_matrix(mi, ni, pi, ri, si, ui);

  bool failed = false;
  json checks = json::array();
  if (!check_curve.empty()) {
    std::vector<std::pair<Int, Int>> images{{parse_big(check_curve[0]), 0},
                                            {parse_big(check_curve[1]), 0},
                                            {parse_big(check_curve[2]), 0}};
    const std::pair<std::string, SparsePolynomial> members[] = {
        {"f", f.to_polynomial()}, {"g", g}};
    for (const auto& [name, poly] : members) {
      auto surviving = substitute_parametrization(poly, images);
      bool ok = surviving.empty();
      if (!ok) failed = true;
      checks.push_back(json{{"name", name + " vanishes on (t^a,t^b,t^c)"},
                            {"ok", ok},
                            {"detail", std::to_string(surviving.size()) +
                                           " surviving terms"}});
      if (!as_json)
        std::cout << "  [" << (ok ? "ok" : "FAIL") << "] " << name
                  << " vanishes on the curve\n";
    }
  }

  json oracle = json::array();
  for (std::uint64_t prime : primes) {
    FieldHandle field = FieldHandle::build(prime, 1);
    std::vector<SparsePolynomial> gens;
    for (const auto& entry : all_2minors(a))
      if (entry.minor) gens.push_back(entry.minor->to_polynomial());
    std::vector<SparsePolynomial> fg{f.to_polynomial(), g};
    EqualityReport rep = compare_sets(affine_variety(gens, field),
                                      affine_variety(fg, field), field, false);
    if (!rep.equal) failed = true;
    oracle.push_back(json{{"prime", prime},
                          {"name", "V(J) == V(f,g)"},
                          {"ok", rep.equal},
                          {"report", equality_json(rep)}});
    if (!as_json)
      std::cout << "  [" << (rep.equal ? "ok" : "FAIL") << "] p=" << prime
                << " V(J) == V(f,g)\n";
  }

  json report{{"input", json{{"m", m}, {"n", n}, {"p", p}, {"r", r},
                             {"s", s}, {"u", u}}},
              {"matrix", a.str()},
              {"f", binomial_json(f)},
              {"g", poly_json(g)},
              {"checks", checks},
              {"oracle", oracle}};
  emit(report, as_json);
  if (!as_json) {
    std::cout << "matrix " << a.str() << "\n";
    std::cout << "f = " << f.str() << "\n";
    std::cout << "g = " << g.str() << "\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-theoretic defining systems for monomial curves in 3-space"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CurveOptions derive_opts, binom_opts, verify_opts;
  std::string variant = "minors";
  std::vector<std::uint64_t> verify_primes{5, 7, 11};
  unsigned max_ext = 6;
  bool skip_oracle = false;
  std::vector<std::string> extra_polys;

  auto* derive = app.add_subcommand("derive", "derive all curve quantities");
  derive_opts.attach(derive);

  auto* binomials =
      app.add_subcommand("binomials", "emit the defining binomial system");
  binom_opts.attach(binomials);
  binomials->add_option("--variant", variant, "minors or binomials")
      ->check(CLI::IsMember({"minors", "binomials"}));

  auto* verify = app.add_subcommand(
      "verify", "run symbolic and finite-field verification");
  verify_opts.attach(verify);
  verify->add_option("--prime", verify_primes, "oracle primes");
  verify->add_option("--max-ext", max_ext, "initial extension-degree cap");
  verify->add_flag("--skip-oracle", skip_oracle, "symbolic checks only");
  verify->add_option("--extra-poly", extra_polys,
                     "additional polynomial that must vanish on the curve");

  std::string matrix_spec, vars_csv;
  int column = 0;
  bool prop1_oracle = false;
  std::vector<std::uint64_t> prop1_primes{3, 5, 7};
  auto* prop1 = app.add_subcommand(
      "prop1", "column-reduction criterion for a 2xr monomial matrix");
  prop1->add_option("--matrix", matrix_spec, "matrix, e.g. a^2*d,b,c;b,a,d")
      ->required();
  prop1->add_option("--vars", vars_csv, "comma-separated variable names");
  prop1->add_option("--column", column, "check a single column (1-based)");
  prop1->add_flag("--oracle", prop1_oracle, "finite-field cross-check");
  prop1->add_option("--prime", prop1_primes, "oracle primes");

  std::string classify_spec, classify_vars;
  auto* classify = app.add_subcommand(
      "classify", "match a simple 2x3 matrix against the form templates");
  classify->add_option("--matrix", classify_spec, "matrix over 4 variables")
      ->required();
  classify->add_option("--vars", classify_vars,
                       "comma-separated variable names");

  std::string vm, vn, vp, vr, vs, vu;
  std::vector<std::string> check_curve;
  std::vector<std::uint64_t> valla_primes;
  auto* valla =
      app.add_subcommand("valla", "explicit (f, g) for the type-(i) matrix");
  valla->add_option("--m", vm)->required();
  valla->add_option("--n", vn)->required();
  valla->add_option("--p", vp)->required();
  valla->add_option("--r", vr)->required();
  valla->add_option("--s", vs)->required();
  valla->add_option("--u", vu)->required();
  valla->add_option("--check-curve", check_curve,
                    "affine curve exponents a b c")
      ->expected(3);
  valla->add_option("--prime", valla_primes, "oracle primes for V(J)==V(f,g)");

  CLI11_PARSE(app, argc, argv);
  bool as_json = format == "json";

  try {
    if (derive->parsed()) return cmd_derive(derive_opts, as_json);
    if (binomials->parsed()) return cmd_binomials(binom_opts, variant, as_json);
    if (verify->parsed())
      return cmd_verify(verify_opts, verify_primes, max_ext, skip_oracle,
                        extra_polys, as_json);
    if (prop1->parsed())
      return cmd_prop1(matrix_spec, vars_csv, column, prop1_oracle,
                       prop1_primes, as_json);
    if (classify->parsed())
      return cmd_classify(classify_spec, classify_vars, as_json);
    if (valla->parsed())
      return cmd_valla(vm, vn, vp, vr, vs, vu, check_curve, valla_primes,
                       as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}
