// Lattice polygons and simplices: normalized areas, Minkowski sums, mixed
// areas, facet normals and primitivity tests.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <array>

#include "tropfan/base.hpp"

namespace tropfan {

using Pt2 = std::array<Int, 2>;

// 2D cross product (b - a) x (c - a).
Int cross3(const Pt2& a, const Pt2& b, const Pt2& c);

// Convex 2D lattice polygon.  Vertices are stored counterclockwise and are
// exactly the extreme points; degenerate cases (point, segment) are allowed.
class LatticePolygon {
 public:
  LatticePolygon() = default;

  // Convex hull of an arbitrary nonempty point set.
  static LatticePolygon hull(std::vector<Pt2> points);

  const std::vector<Pt2>& vertices() const { return verts_; }
  bool empty() const { return verts_.empty(); }

  // Twice the Euclidean area (integer shoelace).  The 2x convention makes the
  // corner self-intersection identity hold verbatim.
  Int normalized_area() const;

  // Exact point membership (boundary counts as inside).
  bool contains(const Pt2& p) const;

  bool operator==(const LatticePolygon& o) const { return verts_ == o.verts_; }

 private:
  std::vector<Pt2> verts_;
};

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q);

// (normalized_area(P+Q) - normalized_area(P) - normalized_area(Q)) / 2.
Int mixed_area(const LatticePolygon& p, const LatticePolygon& q);

// Number of lattice points on the closed segment [a, b] minus 1.
Int lattice_length(const Pt2& a, const Pt2& b);

// N-simplex in Z^N given by N+1 affinely independent vertices.
struct LatticeSimplexN {
  std::vector<Vec> vertices;

  std::size_t dim() const { return vertices.empty() ? 0 : vertices[0].size(); }
};

// Outward primitive facet normals; normals[k] is opposite vertex k.
std::vector<Vec> simplex_normals(const LatticeSimplexN& s);

// |det(v_1 - v_0, ..., v_N - v_0)| (the normalized volume).
Int simplex_volume(const LatticeSimplexN& s);

bool is_primitive_simplex(const LatticeSimplexN& s);

}  // namespace tropfan
