// SPDX-License-Identifier: MIT
#include "tropfan/planefan.hpp"

#include <algorithm>
#include <numeric>

namespace tropfan {

DegreeOneFrame DegreeOneFrame::from_simplex(LatticeSimplexN s,
                                            std::vector<int> binding) {
  if (s.vertices.size() < 3)
    fail(ErrorKind::DegenerateSimplex, "need at least 3 vertices");
  if (s.vertices.size() != s.dim() + 1)
    fail(ErrorKind::DegenerateSimplex, "vertex count must be dim + 1");
  if (!is_primitive_simplex(s))
    fail(ErrorKind::DegenerateSimplex, "simplex is not primitive");
  DegreeOneFrame f;
  f.normals = simplex_normals(s);
  f.simplex = std::move(s);
  if (binding.empty()) {
    binding.resize(f.normals.size());
    std::iota(binding.begin(), binding.end(), 0);
  }
  std::vector<int> sorted = binding;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != (int)i)
      fail(ErrorKind::InputError, "binding must be a permutation of 0..N");
  if (binding.size() != f.normals.size())
    fail(ErrorKind::DimensionMismatch, "binding size mismatch");
  f.binding = std::move(binding);
  return f;
}

PlaneFan PlaneFan::build(LineArrangement arr, DegreeOneFrame frame) {
  if ((int)frame.normals.size() != arr.n_lines())
    fail(ErrorKind::DimensionMismatch,
         "frame has " + std::to_string(frame.normals.size()) +
             " normals for " + std::to_string(arr.n_lines()) + " lines");
  PlaneFan fan;
  fan.u_.resize(arr.n_lines());
  for (int i = 0; i < arr.n_lines(); ++i)
    fan.u_[i] = frame.normals[frame.binding[i]];
  for (std::size_t p = 0; p < arr.points().size(); ++p) {
    Vec uI(frame.simplex.dim(), Int(0));
    for (int i : arr.points()[p].indices) uI = add(uI, fan.u_[i]);
    fan.u_points_.push_back(uI);
    for (int i : arr.points()[p].indices)
      fan.cones_.push_back(FanCone{i, (int)p});
  }
  fan.arr_ = std::move(arr);
  fan.frame_ = std::move(frame);
  return fan;
}

std::vector<RayDecomposition> PlaneFan::decompose_ray(const Vec& v) const {
  if (v.size() != frame_.simplex.dim())
    fail(ErrorKind::DimensionMismatch, "ray dimension mismatch");
  if (is_zero(v)) fail(ErrorKind::ZeroVector, "cannot decompose zero ray");
  std::vector<RayDecomposition> out;
  for (const FanCone& c : cones_) {
    auto sol = solve_pair(u_[c.k], u_points_[c.point], v);
    if (!sol) continue;
    if (sol->first < 0 || sol->second < 0) continue;
    out.push_back(RayDecomposition{c, sol->first, sol->second});
  }
  return out;
}

}  // namespace tropfan
