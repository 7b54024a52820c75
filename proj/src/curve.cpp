// SPDX-License-Identifier: MIT
#include "tropfan/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tropfan {

FanCurve make_fan_curve(const std::vector<Ray>& rays) {
  if (rays.empty()) fail(ErrorKind::InputError, "empty ray list");
  std::size_t n = rays[0].direction.size();
  std::map<Vec, Int> merged;
  for (const Ray& r : rays) {
    if (r.direction.size() != n)
      fail(ErrorKind::DimensionMismatch, "mixed ray dimensions");
    if (r.weight <= 0) fail(ErrorKind::InputError, "ray weight must be > 0");
    auto [dir, c] = primitive(r.direction);
    merged[dir] += r.weight * c;
  }
  Vec total(n, Int(0));
  FanCurve curve;
  for (const auto& [dir, w] : merged) {
    total = add(total, scaled(w, dir));
    curve.rays.push_back(Ray{w, dir});
  }
  if (!is_zero(total))
    fail(ErrorKind::UnbalancedCurve, "weighted rays sum to " + to_string(total));
  return curve;
}

FanCurve image(const FanMorphism& m) { return make_fan_curve(m.edges); }

bool contains(const PlaneFan& fan, const FanCurve& curve) {
  for (const Ray& r : curve.rays)
    if (fan.decompose_ray(r.direction).empty()) return false;
  return true;
}

Int degree(const FanCurve& curve, const PlaneFan& fan, int ref_index) {
  if (ref_index < 0 || ref_index >= fan.arrangement().n_lines())
    fail(ErrorKind::InputError, "reference index out of range");
  Rat total = 0;
  for (const Ray& r : curve.rays) {
    auto decomps = fan.decompose_ray(r.direction);
    if (decomps.empty())
      fail(ErrorKind::CurveNotInFan,
           "ray " + to_string(r.direction) + " outside the fan");
    const RayDecomposition& d = decomps.front();
    const auto& I = fan.arrangement().points()[d.cone.point].indices;
    Rat ri = 0;
    if (ref_index == d.cone.k)
      ri = d.rho_k + d.rho_I;
    else if (std::binary_search(I.begin(), I.end(), ref_index))
      ri = d.rho_I;
    total += Rat(r.weight) * ri;
  }
  total.canonicalize();
  if (!is_integral(total))
    fail(ErrorKind::NonIntegralDegree, "degree " + total.get_str() +
                                           " is not an integer");
  return total.get_num();
}

namespace {

// DFS for a balanced sub-splitting t with 0 <= t_e <= bound_e, t nonzero,
// and (when proper = true) t != full weight vector.
bool balanced_subcycle_exists(const std::vector<Ray>& rays,
                              const std::vector<Int>& bounds, bool proper) {
  std::size_t n = rays[0].direction.size();
  std::vector<Int> t(rays.size(), Int(0));
  // Recursive lambda over ray index with running partial sum.
  std::function<bool(std::size_t, Vec&, bool, bool)> go =
      [&](std::size_t idx, Vec& sum, bool some_zero, bool some_nonzero) -> bool {
    if (idx == rays.size()) {
      if (!some_nonzero) return false;           // t = 0
      if (proper && !some_zero) return false;    // t = w (full curve)
      return is_zero(sum);
    }
    for (Int c = 0; c <= bounds[idx]; ++c) {
      Vec next = add(sum, scaled(c, rays[idx].direction));
      bool sz = some_zero || (proper ? c < rays[idx].weight : false);
      bool sn = some_nonzero || c > 0;
      if (go(idx + 1, next, sz, sn)) return true;
    }
    return false;
  };
  Vec zero(n, Int(0));
  return go(0, zero, false, false);
}

}  // namespace

bool is_irreducible(const FanCurve& curve) {
  if (curve.rays.size() > 24)
    fail(ErrorKind::TooManyRays, "irreducibility search capped at 24 rays");
  if (curve.rays.empty()) return false;
  std::vector<Int> bounds;
  for (const Ray& r : curve.rays) bounds.push_back(r.weight);
  return !balanced_subcycle_exists(curve.rays, bounds, /*proper=*/true);
}

bool is_reduced(const FanCurve& curve) {
  if (curve.rays.size() > 24)
    fail(ErrorKind::TooManyRays, "reducedness search capped at 24 rays");
  if (curve.rays.empty()) return true;
  std::vector<Int> bounds;
  for (const Ray& r : curve.rays) bounds.push_back(r.weight / 2);
  return !balanced_subcycle_exists(curve.rays, bounds, /*proper=*/false);
}

}  // namespace tropfan
