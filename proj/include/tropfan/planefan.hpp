// Bergman fan of a line arrangement with a chosen degree-1 simplex frame.
//
// SPDX-License-Identifier: MIT
#pragma once

#include "tropfan/arrangement.hpp"
#include "tropfan/lattice.hpp"

namespace tropfan {

// A primitive N-simplex with its outward facet normals and a binding from
// line indices to normal indices (default identity).
struct DegreeOneFrame {
  LatticeSimplexN simplex;
  std::vector<Vec> normals;  // normals[k] is opposite vertex k
  std::vector<int> binding;  // line index -> normal index

  // Validates primitivity and computes normals; empty binding = identity.
  static DegreeOneFrame from_simplex(LatticeSimplexN s,
                                     std::vector<int> binding = {});
};

// Two-dimensional cone spanned by u_k and u_I = sum of u_i over i in I.
struct FanCone {
  int k;      // line index, k in I
  int point;  // index into arrangement points

  bool operator==(const FanCone& o) const {
    return k == o.k && point == o.point;
  }
};

// v = rho_k * u_k + rho_I * u_I, both coefficients nonnegative.
struct RayDecomposition {
  FanCone cone;
  Rat rho_k;
  Rat rho_I;

  bool integral() const { return is_integral(rho_k) && is_integral(rho_I); }
};

class PlaneFan {
 public:
  static PlaneFan build(LineArrangement arr, DegreeOneFrame frame);

  const LineArrangement& arrangement() const { return arr_; }
  const DegreeOneFrame& frame() const { return frame_; }
  int N() const { return arr_.N(); }

  // u vector bound to line i.
  const Vec& u(int line) const { return u_[line]; }
  // u_I of arrangement point p.
  const Vec& u_point(int p) const { return u_points_[p]; }

  const std::vector<FanCone>& cones() const { return cones_; }

  // All cones containing v with their coefficients; empty iff v outside the
  // fan.  Boundary rays are reported in every incident cone.
  std::vector<RayDecomposition> decompose_ray(const Vec& v) const;

 private:
  LineArrangement arr_;
  DegreeOneFrame frame_;
  std::vector<Vec> u_;         // per line
  std::vector<Vec> u_points_;  // per arrangement point
  std::vector<FanCone> cones_;
};

}  // namespace tropfan
