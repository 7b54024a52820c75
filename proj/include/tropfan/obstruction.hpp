// Approximability obstructions: adjunction, Hessian, Riemann-Hurwitz, and
// the local Hessian lattice-count bound.
//
// SPDX-License-Identifier: MIT
#pragma once

#include "tropfan/intersection.hpp"

namespace tropfan {

enum class ObstructionKind { Adjunction, Hessian, RiemannHurwitz };

enum class Verdict { Obstructed, NotObstructed };

struct ObstructionReport {
  ObstructionKind kind;
  Int lhs_value;                  // B, H, or d(k-2) - l + 2
  std::optional<Int> genus_bound; // floor(B/2) / ceil(value/2); none for Hessian
  Verdict verdict;
  bool odd_parity = false;        // adjunction only: B odd => equality case impossible
  Int degree;                     // echo of deg(C) where applicable
  int N = 0;
};

// Partition of morphism edges by direction class, plus corner multiplicities.
struct HessianEdgeSets {
  std::vector<std::size_t> bis;      // direction u_I at a point with |I| >= 3
  std::vector<std::size_t> k_w;      // direction u_i, weight > 1
  std::vector<std::size_t> k_1;      // direction u_i, weight = 1
  std::vector<std::size_t> generic;  // everything else
  std::vector<Int> m_I;              // per arrangement point
};

HessianEdgeSets hessian_edge_sets(const FanMorphism& m, const PlaneFan& fan);

// B = C^2 + (N-2) deg - sum w_e - sum (|I|-2) w_I + 2; Obstructed iff B < 0.
ObstructionReport adjunction_bound(const FanCurve& curve, const PlaneFan& fan);

// H = 3C^2 + 2(N-2) deg - sum 2(|I|-2) m_I - sum_{K_w u K_1 u Bis} (3w - 2)
//     - |K_1|;  Obstructed iff H < 0.
ObstructionReport hessian_bound(const FanMorphism& m, const PlaneFan& fan);

// Required genus >= ceil((d(k-2) - l + 2) / 2); Obstructed iff that exceeds
// the supplied target genus.
ObstructionReport rh_bound(const Int& d, const Int& k, const Int& l,
                           const Int& target_genus = 0);

struct LocalHessianCounts {
  Int r0;    // lattice length of the slope -1 boundary edge
  Int v0;    // vertical-axis lattice points of Gamma \ Delta, minus 1
  Int h0;    // horizontal-axis lattice points of Gamma \ Delta, minus 1
  Int area;  // normalized_area(Gamma) - normalized_area(Delta)
  Int bound; // 3 * scale * area + r0 - 2 v0 - 2 h0
};

// Gamma must equal conv(Delta u {origin}).  Errors: MalformedRegion.
LocalHessianCounts local_hessian_bound(const LatticePolygon& gamma,
                                       const LatticePolygon& delta,
                                       const Int& scale = 1);

}  // namespace tropfan
