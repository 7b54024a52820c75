// SPDX-License-Identifier: MIT
#include "tropfan/intersection.hpp"

#include <algorithm>

namespace tropfan {

namespace {

// Decompositions of a curve ray at the given point with positive u_I
// coefficient (only those converge to the corner).
std::vector<RayDecomposition> converging_decomps(const PlaneFan& fan,
                                                 const Vec& v, int point) {
  std::vector<RayDecomposition> out;
  for (const RayDecomposition& d : fan.decompose_ray(v))
    if (d.cone.point == point && d.rho_I > 0) out.push_back(d);
  return out;
}

}  // namespace

std::vector<CornerRay> corner_rays(const FanCurve& curve, const PlaneFan& fan,
                                   int point, std::pair<int, int> ordering) {
  const auto& I = fan.arrangement().points()[point].indices;
  auto in_I = [&](int x) {
    return std::binary_search(I.begin(), I.end(), x);
  };
  if (!in_I(ordering.first) || !in_I(ordering.second) ||
      ordering.first == ordering.second)
    fail(ErrorKind::NotAtCorner, "ordering indices must be distinct in I");
  std::vector<CornerRay> out;
  for (const Ray& r : curve.rays) {
    auto decomps = converging_decomps(fan, r.direction, point);
    if (decomps.empty()) continue;
    const RayDecomposition* chosen = nullptr;
    for (const auto& d : decomps) {
      if (d.cone.k == ordering.first || d.cone.k == ordering.second) {
        chosen = &d;
        break;
      }
    }
    if (!chosen)
      fail(ErrorKind::OrderingDoesNotCover,
           "ray " + to_string(r.direction) +
               " lies outside the two chosen faces");
    if (!chosen->integral())
      fail(ErrorKind::NonIntegralDecomposition,
           "ray " + to_string(r.direction) +
               " has a non-integral cone decomposition");
    Int a = chosen->rho_k.get_num();
    Int b = chosen->rho_I.get_num();
    Int p, q;
    if (chosen->cone.k == ordering.first) {
      p = b;
      q = a + b;
    } else {
      p = a + b;
      q = b;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    out.push_back(CornerRay{r.weight * g, p / g, q / g});
  }
  return out;
}

std::pair<int, int> choose_ordering(const FanCurve& c1, const FanCurve& c2,
                                    const PlaneFan& fan, int point) {
  const auto& I = fan.arrangement().points()[point].indices;
  // For each converging ray, the set of cone sides it can be read from.
  std::vector<std::vector<int>> side_sets;
  for (const FanCurve* c : {&c1, &c2}) {
    for (const Ray& r : c->rays) {
      auto decomps = converging_decomps(fan, r.direction, point);
      if (decomps.empty()) continue;
      std::vector<int> sides;
      for (const auto& d : decomps) sides.push_back(d.cone.k);
      side_sets.push_back(sides);
    }
  }
  for (std::size_t a = 0; a < I.size(); ++a) {
    for (std::size_t b = a + 1; b < I.size(); ++b) {
      bool covers = true;
      for (const auto& sides : side_sets) {
        if (std::find(sides.begin(), sides.end(), I[a]) == sides.end() &&
            std::find(sides.begin(), sides.end(), I[b]) == sides.end()) {
          covers = false;
          break;
        }
      }
      if (covers) return {I[a], I[b]};
    }
  }
  fail(ErrorKind::OrderingDoesNotCover,
       "no face pair covers all converging rays at this point");
}

Int corner_multiplicity(const FanCurve& c1, const FanCurve& c2,
                        const PlaneFan& fan, int point) {
  auto ordering = choose_ordering(c1, c2, fan, point);
  auto r1 = corner_rays(c1, fan, point, ordering);
  auto r2 = corner_rays(c2, fan, point, ordering);
  Int total = 0;
  for (const CornerRay& r : r1)
    for (const CornerRay& s : r2)
      total += r.weight * s.weight * std::min(r.p * s.q, r.q * s.p);
  return total;
}

Int intersection_number(const FanCurve& c1, const FanCurve& c2,
                        const PlaneFan& fan) {
  Int result = degree(c1, fan) * degree(c2, fan);
  for (std::size_t p = 0; p < fan.arrangement().points().size(); ++p)
    result -= corner_multiplicity(c1, c2, fan, (int)p);
  return result;
}

Int self_intersection(const FanCurve& curve, const PlaneFan& fan) {
  return intersection_number(curve, curve, fan);
}

namespace {

struct NewtonRegions {
  LatticePolygon delta;
  LatticePolygon gamma;
};

NewtonRegions newton_regions(std::vector<CornerRay> rays) {
  // Sort slopes p/q decreasing: r before s iff p_r * q_s > q_r * p_s.
  std::sort(rays.begin(), rays.end(), [](const CornerRay& r, const CornerRay& s) {
    return r.p * s.q > r.q * s.p;
  });
  Int height = 0;
  for (const CornerRay& r : rays) height += r.weight * r.p;
  std::vector<Pt2> chain = {{Int(0), height}};
  Pt2 cur = chain.back();
  for (const CornerRay& r : rays) {
    cur = {cur[0] + r.weight * r.q, cur[1] - r.weight * r.p};
    chain.push_back(cur);
  }
  NewtonRegions out;
  out.delta = LatticePolygon::hull(chain);
  chain.push_back({Int(0), Int(0)});
  out.gamma = LatticePolygon::hull(chain);
  return out;
}

}  // namespace

Int corner_mult_via_newton(const std::vector<CornerRay>& rays1,
                           const std::vector<CornerRay>& rays2) {
  if (rays1.empty() || rays2.empty()) return 0;
  NewtonRegions a = newton_regions(rays1);
  NewtonRegions b = newton_regions(rays2);
  return mixed_area(a.gamma, b.gamma) - mixed_area(a.delta, b.delta);
}

}  // namespace tropfan
