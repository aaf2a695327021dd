#include "stci/construct.hpp"
#include "stci/radical.hpp"
#include "stci/text.hpp"

#include <doctest.h>

#include <random>

using namespace stci;

namespace {
MonomialMatrix mat(const std::string& spec) {
  return parse_matrix(VariableSet::letters(4), spec);
}
}  // namespace

TEST_CASE("simplicity") {
  VariableSet xs = VariableSet::projective();
  CHECK(is_simple(parse_matrix(xs, "x1^3,x0*x3,x2;x0^2,x1,1")));
  // zero minor
  CHECK_FALSE(is_simple(mat("a,b,a;b,a,b")));
  // minor b*a - c*a has the factor a
  CHECK_FALSE(is_simple(mat("a,b,c;b,a,a")));
}

TEST_CASE("column reduction on the K[a,b,c,d] worked matrices") {
  // (a d, b, c / b, a, d): sqrt(J) = sqrt(J_2)
  MonomialMatrix ex = mat("a*d,b,c;b,a,d");
  RadicalReduction red = radical_hypothesis(ex, 1);
  CHECK(red.holds);
  REQUIRE(red.reduced_generators.size() == 2);
  CHECK(red.reduced_generators[0].str() == "a^2*d-b^2");
  CHECK(red.reduced_generators[1].str() == "b*d-a*c");
  CHECK_FALSE(radical_hypothesis(ex, 0).holds);

  // (a^{2u-1}, b, c / b c, d, a^u) with u=2: third column reduces
  MonomialMatrix u2 = mat("a^3,b,c;b*c,d,a^2");
  RadicalReduction col3 = radical_hypothesis(u2, 2);
  CHECK(col3.holds);
  REQUIRE(col3.reduced_generators.size() == 2);
  CHECK(col3.reduced_generators[0].str() == "a^5-b*c^2");
  CHECK(col3.reduced_generators[1].str() == "a^2*b-c*d");
}

TEST_CASE("column scan over the quartic matrix") {
  MonomialMatrix a =
      parse_matrix(VariableSet::projective(), "x1^3,x0*x3,x2;x0^2,x1,1");
  auto cols = find_reducing_columns(a);
  REQUIRE(cols.size() == 3);
  CHECK(cols[0].holds);
  CHECK_FALSE(cols[1].holds);
  CHECK(cols[2].holds);
}

TEST_CASE("no column reduces a matrix of distinct indeterminates") {
  VariableSet six = VariableSet::letters(6);
  MonomialMatrix a = parse_matrix(six, "a,b,c;d,e,f");
  for (const auto& red : find_reducing_columns(a)) CHECK_FALSE(red.holds);
}

TEST_CASE("J_k is contained in the column ideal") {
  // soundness direction: each J_k generator term is divisible by a
  // column-k entry's support
  std::mt19937_64 rng(4242);
  VariableSet abcd = VariableSet::letters(4);
  int checked = 0;
  while (checked < 100) {
    std::vector<Monomial> row1, row2;
    for (int c = 0; c < 3; ++c) {
      std::vector<Int> e1(4), e2(4);
      for (int v = 0; v < 4; ++v) {
        e1[v] = std::uniform_int_distribution<int>(0, 2)(rng);
        e2[v] = std::uniform_int_distribution<int>(0, 2)(rng);
      }
      row1.emplace_back(abcd, e1);
      row2.emplace_back(abcd, e2);
    }
    MonomialMatrix a(row1, row2);
    for (std::size_t k = 0; k < 3; ++k) {
      RadicalReduction red = radical_hypothesis(a, k);
      for (const auto& g : red.reduced_generators) {
        bool l = support_contains(g.lead(), a.at(0, k)) ||
                 support_contains(g.lead(), a.at(1, k));
        bool t = support_contains(g.trail(), a.at(0, k)) ||
                 support_contains(g.trail(), a.at(1, k));
        // each generator has one term from each row product through col k
        CHECK((l || t));
      }
    }
    ++checked;
  }
}

TEST_CASE("form classification of the printed templates") {
  ClassifyResult i = classify_form(mat("a,b,c;b,c,a"));
  REQUIRE_FALSE(i.matches.empty());
  CHECK(form_name(i.matches.front().form) == "i");

  ClassifyResult iv = classify_form(mat("a^2,b,c;b*c,d,a"));
  bool has_iv = false;
  for (const auto& match : iv.matches)
    if (match.form == Form::iv) has_iv = true;
  CHECK(has_iv);

  ClassifyResult ex21 = classify_form(mat("a*d,b,c;b,a,d"));
  CHECK_FALSE(ex21.matches.empty());
  bool has_vi = false;
  for (const auto& match : ex21.matches)
    if (match.form == Form::vi) has_vi = true;
  CHECK(has_vi);

  // a unit entry short-circuits to the column criterion
  ClassifyResult unit = classify_form(
      parse_matrix(VariableSet::projective(), "x1^2,x0*x3,x2;x0,x1,1"));
  CHECK(unit.unit_entry_shortcut);
}

TEST_CASE("classification rejects bad shapes") {
  CHECK_THROWS_AS(classify_form(mat("a,b,a;b,a,b")), std::invalid_argument);
  VariableSet six = VariableSet::letters(6);
  CHECK_THROWS_AS(classify_form(parse_matrix(six, "a,b,c;d,e,f")),
                  std::invalid_argument);
}

TEST_CASE("Valla pair") {
  auto [f, g] = valla_fg(2, 1, 1, 1, 1, 1);
  CHECK(f.str() == "a^2*c-b^2");
  CHECK(g.str() == "a^4-2*a*b*c+c^3");
  CHECK(valla_matrix(2, 1, 1, 1, 1, 1).str() == "a^2,b,c;b,c,a");

  // leading term is +a^{(n+r)u + n m}
  Int lead_exp = g.terms().rbegin()->first[0];
  CHECK(lead_exp == 4);
  CHECK(g.terms().rbegin()->second == 1);

  auto [f0, g0] = valla_fg(1, 0, 1, 1, 1, 1);
  CHECK(f0.str() == "a*c-b");
  CHECK(g0.str() == "a-c^2");
}

TEST_CASE("Valla g vanishes on curves satisfying the exponent relations") {
  // relations: m*alpha + s*gamma = (n+r)*beta, (m+u)*alpha = r*beta + p*gamma
  auto [f, g] = valla_fg(2, 1, 1, 1, 1, 1);
  std::vector<std::pair<Int, Int>> images{{3, 0}, {5, 0}, {4, 0}};
  CHECK(substitute_parametrization(f.to_polynomial(), images).empty());
  CHECK(substitute_parametrization(g, images).empty());
}
