#include "stci/oracle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace stci {

namespace {

bool all_vanish(const std::vector<SparsePolynomial>& polys, const Point& pt,
                const FieldHandle& field) {
  for (const auto& poly : polys)
    if (!field.is_zero(eval(poly, pt, field))) return false;
  return true;
}

// Scale a projective representative so its first nonzero coordinate is 1.
Point normalize_projective(Point pt, const FieldHandle& field) {
  for (auto& c : pt) {
    if (field.is_zero(c)) continue;
    FieldHandle::Element scale = field.inv(c);
    for (auto& x : pt) x = field.mul(x, scale);
    break;
  }
  return pt;
}

}  // namespace

std::string render_point(const Point& pt, const FieldHandle& field,
                         bool projective) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) out << (projective ? ":" : ",");
    out << field.render(pt[i]);
  }
  out << ")";
  return out.str();
}

std::set<Point> projective_variety(const std::vector<SparsePolynomial>& polys,
                                   const FieldHandle& field) {
  std::size_t n = 4;
  for (const auto& poly : polys) {
    n = poly.vars().count();
    if (!poly.is_homogeneous())
      throw std::invalid_argument(
          "projective variety needs homogeneous polynomials");
  }
  std::set<Point> result;
  std::uint64_t q = field.element_count_u64();
  // Canonical representatives: leading 1 at position l, zeros before it.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::size_t free = n - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Point pt(n, field.zero());
      pt[lead] = field.one();
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < free; ++i) {
        pt[lead + 1 + i] = field.element_at(rest % q);
        rest /= q;
      }
      if (all_vanish(polys, pt, field)) result.insert(pt);
    }
  }
  return result;
}

std::set<Point> affine_variety(const std::vector<SparsePolynomial>& polys,
                               const FieldHandle& field) {
  if (polys.empty())
    throw std::invalid_argument("affine variety needs at least one polynomial");
  std::size_t n = polys.front().vars().count();
  for (const auto& poly : polys)
    if (poly.vars().count() != n)
      throw std::invalid_argument("mixed variable counts");
  std::set<Point> result;
  std::uint64_t q = field.element_count_u64();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Point pt(n);
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      pt[i] = field.element_at(rest % q);
      rest /= q;
    }
    if (all_vanish(polys, pt, field)) result.insert(pt);
  }
  return result;
}

namespace {

CurvePointsResult curve_points_impl(const ProjectiveCurveParams& cp,
                                    std::uint64_t p, unsigned max_ext,
                                    std::uint64_t point_budget,
                                    bool projective) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  CurvePointsResult result;
  FieldHandle base = FieldHandle::build(p, 1);
  for (unsigned k = 1; k <= max_ext; ++k) {
    // q = p^k against the budget, without overflow.
    long double qd = 1;
    for (unsigned i = 0; i < k; ++i) qd *= p;
    if (qd > static_cast<long double>(point_budget)) {
      result.budget_exceeded = true;
      break;
    }
    FieldHandle field = FieldHandle::build(p, k);
    auto to_prime_point = [&](const Point& pt) -> std::optional<Point> {
      Point out;
      for (const auto& c : pt) {
        if (!field.in_prime_subfield(c)) return std::nullopt;
        out.push_back({field.prime_value(c)});
      }
      return out;
    };
    if (projective) {
      // (xi : omega) = (0 : 1) -> (0 : 0 : 0 : 1).
      result.points.insert(
          {base.zero(), base.zero(), base.zero(), base.one()});
      // Representatives xi = 1: image (1, w^phi1, w^phi2, w^delta).
      for (const auto& w : field.elements()) {
        Point img{field.one(), field.pow(w, cp.phi1), field.pow(w, cp.phi2),
                  field.pow(w, cp.delta)};
        if (auto prime_pt = to_prime_point(img))
          result.points.insert(std::move(*prime_pt));
      }
    } else {
      for (const auto& w : field.elements()) {
        Point img{field.pow(w, cp.phi1), field.pow(w, cp.phi2),
                  field.pow(w, cp.delta)};
        if (auto prime_pt = to_prime_point(img))
          result.points.insert(std::move(*prime_pt));
      }
    }
    result.max_ext_done = k;
  }
  return result;
}

}  // namespace

CurvePointsResult curve_points(const ProjectiveCurveParams& cp, std::uint64_t p,
                               unsigned max_ext, std::uint64_t point_budget) {
  return curve_points_impl(cp, p, max_ext, point_budget, true);
}

CurvePointsResult affine_curve_points(const ProjectiveCurveParams& cp,
                                      std::uint64_t p, unsigned max_ext,
                                      std::uint64_t point_budget) {
  return curve_points_impl(cp, p, max_ext, point_budget, false);
}

EqualityReport compare_sets(const std::set<Point>& left,
                            const std::set<Point>& right,
                            const FieldHandle& field, bool projective) {
  EqualityReport report;
  report.left_size = left.size();
  report.right_size = right.size();
  report.field_desc = field.describe();
  std::vector<Point> diff;
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(),
                      std::back_inserter(diff));
  for (const auto& pt : diff)
    report.left_only.push_back(render_point(pt, field, projective));
  diff.clear();
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(),
                      std::back_inserter(diff));
  for (const auto& pt : diff)
    report.right_only.push_back(render_point(pt, field, projective));
  report.equal = report.left_only.empty() && report.right_only.empty();
  return report;
}

CurveMatchResult match_variety_to_curve(const std::set<Point>& variety,
                                        const ProjectiveCurveParams& cp,
                                        std::uint64_t p, unsigned k_cap,
                                        std::uint64_t point_budget) {
  FieldHandle base = FieldHandle::build(p, 1);
  CurveMatchResult result;
  for (unsigned k = 1; k <= k_cap; ++k) {
    CurvePointsResult curve =
        cp.affine ? affine_curve_points(cp, p, k, point_budget)
                  : curve_points(cp, p, k, point_budget);
    result.k_used = curve.max_ext_done;
    result.report =
        compare_sets(variety, curve.points, base, !cp.affine);
    if (!result.report.right_only.empty()) {
      // A parametrized point escaped the variety: containment violated.
      result.status = CurveMatchStatus::mismatch;
      return result;
    }
    if (result.report.equal) {
      result.status = CurveMatchStatus::equal;
      return result;
    }
    if (curve.budget_exceeded || curve.max_ext_done < k) {
      result.status = CurveMatchStatus::inconclusive;
      return result;
    }
  }
  result.status = CurveMatchStatus::inconclusive;
  return result;
}

}  // namespace stci
