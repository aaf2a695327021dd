#include "stci/construct.hpp"
#include "stci/field.hpp"
#include "stci/oracle.hpp"
#include "stci/text.hpp"

#include <doctest.h>

#include <random>

using namespace stci;

TEST_CASE("field construction") {
  FieldHandle f4 = FieldHandle::build(2, 2);
  CHECK(f4.describe() == "GF(2^2), modulus t^2+t+1");
  CHECK(f4.element_count_u64() == 4);

  FieldHandle f5 = FieldHandle::build(5, 1);
  CHECK(f5.describe() == "GF(5)");

  CHECK_THROWS_AS(FieldHandle::build(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldHandle::build(1, 1), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {13, 2}, {3, 3}, {7, 1}}) {
    FieldHandle field = FieldHandle::build(p, k);
    auto elems = field.elements();
    std::mt19937_64 rng(1000 * p + k);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int i = 0; i < 200; ++i) {
      auto a = elems[pick(rng)], b = elems[pick(rng)], c = elems[pick(rng)];
      CHECK(field.mul(a, field.mul(b, c)) == field.mul(field.mul(a, b), c));
      CHECK(field.mul(a, field.add(b, c)) ==
            field.add(field.mul(a, b), field.mul(a, c)));
      CHECK(field.add(a, field.neg(a)) == field.zero());
      if (!(a == field.zero()))
        CHECK(field.mul(a, field.inv(a)) == field.one());
    }
  }
}

TEST_CASE("Frobenius subfield test") {
  FieldHandle f9 = FieldHandle::build(3, 2);
  int in_f3 = 0;
  for (const auto& e : f9.elements())
    if (f9.in_prime_subfield(e)) ++in_f3;
  CHECK(in_f3 == 3);
  CHECK(f9.in_prime_subfield(f9.from_integer(2)));
}

TEST_CASE("polynomial evaluation") {
  FieldHandle f5 = FieldHandle::build(5, 1);
  ProjectiveCurveParams q = derive_params(4, 3, 1);
  SparsePolynomial f = binomial_f(q).to_polynomial();
  std::vector<FieldHandle::Element> ones(4, f5.one());
  CHECK(eval(f, ones, f5) == f5.zero());

  VariableSet xs = VariableSet::projective();
  SparsePolynomial lin = parse_polynomial(xs, "x1-x0");
  std::vector<FieldHandle::Element> pt{f5.from_integer(1), f5.from_integer(2),
                                       f5.zero(), f5.zero()};
  CHECK(eval(lin, pt, f5) == f5.one());

  VariableSet abc = VariableSet::letters(3);
  SparsePolynomial g = parse_polynomial(abc, "a^4-2*a*b*c+c^3");
  std::vector<FieldHandle::Element> img{f5.from_integer(3), f5.from_integer(2),
                                        f5.from_integer(1)};
  CHECK(eval(g, img, f5) == f5.zero());
}

TEST_CASE("projective variety enumeration") {
  FieldHandle f5 = FieldHandle::build(5, 1);
  VariableSet xs = VariableSet::projective();
  std::vector<SparsePolynomial> axes{parse_polynomial(xs, "x0"),
                                     parse_polynomial(xs, "x1"),
                                     parse_polynomial(xs, "x2")};
  auto v = projective_variety(axes, f5);
  REQUIRE(v.size() == 1);
  CHECK(render_point(*v.begin(), f5, true) == "(0:0:0:1)");

  FieldHandle f2 = FieldHandle::build(2, 1);
  CHECK(projective_variety({}, f2).size() == 15);

  CHECK_THROWS_AS(projective_variety({parse_polynomial(xs, "x1-x0^2")}, f5),
                  std::invalid_argument);
}

TEST_CASE("affine variety enumeration") {
  FieldHandle f3 = FieldHandle::build(3, 1);
  VariableSet v3({"x1", "x2", "x3"});
  CHECK(affine_variety({parse_polynomial(v3, "x1-x2")}, f3).size() == 9);
  auto origin = affine_variety({parse_polynomial(v3, "x1"),
                                parse_polynomial(v3, "x2"),
                                parse_polynomial(v3, "x3")},
                               f3);
  REQUIRE(origin.size() == 1);
  CHECK(render_point(*origin.begin(), f3, false) == "(0,0,0)");
}

TEST_CASE("curve image points") {
  ProjectiveCurveParams q = derive_params(4, 3, 1);
  auto k1 = curve_points(q, 5, 1);
  FieldHandle f5 = FieldHandle::build(5, 1);
  // (0:0:0:1) plus (1:w:w^3:w^4) for w in F5, which covers (1:0:0:0)
  // and the all-ones point
  CHECK(k1.points.size() == 6);
  for (std::uint64_t w = 1; w < 5; ++w) {
    Point pt{f5.one(), f5.from_integer(w), f5.from_integer(w * w * w % 5),
             f5.from_integer(w * w * w * w % 5)};
    CHECK(k1.points.count(pt) == 1);
  }
  Point ones(4, f5.one());
  CHECK(k1.points.count(ones) == 1);

  auto k2 = curve_points(q, 5, 2);
  for (const auto& pt : k1.points) CHECK(k2.points.count(pt) == 1);
}

TEST_CASE("set comparison") {
  FieldHandle f5 = FieldHandle::build(5, 1);
  Point origin{f5.one(), f5.zero(), f5.zero(), f5.zero()};
  std::set<Point> left{origin};
  EqualityReport same = compare_sets(left, left, f5, true);
  CHECK(same.equal);
  EqualityReport diff = compare_sets(left, {}, f5, true);
  CHECK_FALSE(diff.equal);
  REQUIRE(diff.left_only.size() == 1);
  CHECK(diff.left_only[0] == "(1:0:0:0)");
}

TEST_CASE("curve image is contained in the binomial varieties") {
  for (auto [d, e1, e2] :
       std::vector<std::array<int, 3>>{{4, 3, 1}, {3, 2, 1}, {5, 3, 2}}) {
    ProjectiveCurveParams cp = derive_params(d, e1, e2);
    DefiningSystem binoms = defining_triple(cp, TripleVariant::binomials);
    DefiningSystem minors = defining_triple(cp, TripleVariant::minors);
    for (std::uint64_t p : {5, 7}) {
      FieldHandle field = FieldHandle::build(p, 1);
      auto image = curve_points(cp, p, 3).points;
      auto vb = projective_variety(binoms.members, field);
      auto vm = projective_variety(minors.members, field);
      for (const auto& pt : image) {
        CHECK(vb.count(pt) == 1);
        CHECK(vm.count(pt) == 1);
      }
    }
  }
}

TEST_CASE("variety matches the curve image after degree escalation") {
  ProjectiveCurveParams q = derive_params(4, 3, 1);
  DefiningSystem binoms = defining_triple(q, TripleVariant::binomials);
  FieldHandle f5 = FieldHandle::build(5, 1);
  auto v = projective_variety(binoms.members, f5);
  CurveMatchResult match = match_variety_to_curve(v, q, 5, 12);
  CHECK(match.status == CurveMatchStatus::equal);
}
