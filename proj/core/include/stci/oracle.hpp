#pragma once

#include "stci/curve.hpp"
#include "stci/field.hpp"

#include <set>
#include <string>
#include <vector>

namespace stci {

/// A point: a list of field elements. Projective points are normalized so
/// the first nonzero coordinate is 1, which makes comparison canonical.
using Point = std::vector<FieldHandle::Element>;

std::string render_point(const Point& pt, const FieldHandle& field,
                         bool projective);

/// All points of P^(n-1) over the field where every poly vanishes.
/// Throws std::invalid_argument on non-homogeneous input.
std::set<Point> projective_variety(const std::vector<SparsePolynomial>& polys,
                                   const FieldHandle& field);

/// All points of F_q^n where every poly vanishes (n = variable count).
std::set<Point> affine_variety(const std::vector<SparsePolynomial>& polys,
                               const FieldHandle& field);

struct CurvePointsResult {
  std::set<Point> points;       // prime-field points (degree-1 elements)
  unsigned max_ext_done = 0;    // largest extension degree enumerated
  bool budget_exceeded = false; // some extension skipped as too large
};

/// Image of the parametrization: for k = 1..max_ext enumerate P^1(F_{p^k}),
/// keep image points all of whose normalized coordinates pass the Frobenius
/// subfield test, and return them as F_p-points. Extensions with more than
/// `point_budget` elements are skipped and flagged.
CurvePointsResult curve_points(const ProjectiveCurveParams& cp,
                               std::uint64_t p, unsigned max_ext,
                               std::uint64_t point_budget = 2'000'000);

/// Affine analogue: images (t^phi1, t^phi2, t^delta) with coordinates in F_p.
CurvePointsResult affine_curve_points(const ProjectiveCurveParams& cp,
                                      std::uint64_t p, unsigned max_ext,
                                      std::uint64_t point_budget = 2'000'000);

struct EqualityReport {
  bool equal = false;
  std::size_t left_size = 0, right_size = 0;
  std::vector<std::string> left_only, right_only;  // rendered witnesses
  std::string field_desc;
};

EqualityReport compare_sets(const std::set<Point>& left,
                            const std::set<Point>& right,
                            const FieldHandle& field, bool projective);

enum class CurveMatchStatus {
  equal,         // variety == curve image at k_used
  inconclusive,  // unmatched variety points remain at the cap/budget
  mismatch       // a curve point escaped the variety: containment broken
};

struct CurveMatchResult {
  CurveMatchStatus status = CurveMatchStatus::inconclusive;
  unsigned k_used = 0;
  EqualityReport report;
};

/// Escalate the extension degree until the curve image matches the given
/// variety, the cap is hit, or the enumeration budget is exceeded.
CurveMatchResult match_variety_to_curve(const std::set<Point>& variety,
                                        const ProjectiveCurveParams& cp,
                                        std::uint64_t p, unsigned k_cap,
                                        std::uint64_t point_budget = 2'000'000);

}  // namespace stci
