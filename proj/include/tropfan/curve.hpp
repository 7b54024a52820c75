// Fan tropical curves and morphisms: balancing, image, degree,
// irreducibility and reducedness.
//
// SPDX-License-Identifier: MIT
#pragma once

#include "tropfan/planefan.hpp"

namespace tropfan {

struct Ray {
  Int weight;     // positive
  Vec direction;  // primitive
};

// Balanced one-dimensional fan cycle with pairwise distinct ray directions.
struct FanCurve {
  std::vector<Ray> rays;

  std::size_t dim() const {
    return rays.empty() ? 0 : rays[0].direction.size();
  }
};

// Parameterized curve: edges with equal directions are permitted.
struct FanMorphism {
  std::vector<Ray> edges;
};

// Primitivizes directions (weight absorbs the content), merges equal
// directions, and checks balancing.  Errors: ZeroVector, UnbalancedCurve,
// InputError (nonpositive weight), DimensionMismatch.
FanCurve make_fan_curve(const std::vector<Ray>& rays);

// Image cycle of a morphism: rays merged by direction with summed weights.
FanCurve image(const FanMorphism& m);

bool contains(const PlaneFan& fan, const FanCurve& curve);

// deg(C) = sum over rays of w_e * r_i(v_e) for the reference line index i;
// independent of i for curves contained in the fan.
Int degree(const FanCurve& curve, const PlaneFan& fan, int ref_index = 0);

// True iff no proper nonzero sub-splitting of the weighted rays is balanced.
// Search bound: at most 24 rays.
bool is_irreducible(const FanCurve& curve);

// True iff no nonzero balanced cycle D satisfies 2D <= C ray-wise.
bool is_reduced(const FanCurve& curve);

}  // namespace tropfan
