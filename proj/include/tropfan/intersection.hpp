// Corner intersection multiplicities, intersection numbers and the
// Newton-polygon oracle.
//
// SPDX-License-Identifier: MIT
#pragma once

#include "tropfan/curve.hpp"

namespace tropfan {

// Local primitive pair (p, q) toward a corner, gcd(p, q) = 1, with weight.
struct CornerRay {
  Int weight;
  Int p;
  Int q;

  bool operator==(const CornerRay& o) const {
    return weight == o.weight && p == o.p && q == o.q;
  }
};

// Rays of the curve converging to arrangement point `point`, expressed in
// the local coordinates of the ordering (i, j), i, j in I.
std::vector<CornerRay> corner_rays(const FanCurve& curve, const PlaneFan& fan,
                                   int point, std::pair<int, int> ordering);

// Lexicographically first pair (i, j), i < j, from I covering all rays of
// both curves that converge to the point.  Errors: OrderingDoesNotCover.
std::pair<int, int> choose_ordering(const FanCurve& c1, const FanCurve& c2,
                                    const PlaneFan& fan, int point);

Int corner_multiplicity(const FanCurve& c1, const FanCurve& c2,
                        const PlaneFan& fan, int point);

// deg(C1) * deg(C2) - sum of corner multiplicities over all points.
Int intersection_number(const FanCurve& c1, const FanCurve& c2,
                        const PlaneFan& fan);

Int self_intersection(const FanCurve& curve, const PlaneFan& fan);

// Oracle: mixed_area(Gamma1, Gamma2) - mixed_area(Delta1, Delta2) where
// Delta_k is the lattice path with edge vectors w * (q, -p) sorted by p/q
// decreasing starting from (0, sum of w * p), and Gamma_k adds the origin.
Int corner_mult_via_newton(const std::vector<CornerRay>& rays1,
                           const std::vector<CornerRay>& rays2);

}  // namespace tropfan
