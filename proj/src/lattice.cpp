// SPDX-License-Identifier: MIT
#include "tropfan/lattice.hpp"

#include <algorithm>

namespace tropfan {

Int cross3(const Pt2& a, const Pt2& b, const Pt2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

LatticePolygon LatticePolygon::hull(std::vector<Pt2> pts) {
  if (pts.empty()) fail(ErrorKind::MalformedRegion, "empty point set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  LatticePolygon out;
  if (pts.size() == 1) {
    out.verts_ = pts;
    return out;
  }
  // Andrew's monotone chain; strict turns only, so no collinear triples.
  std::vector<Pt2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.pop_back();
  out.verts_ = h;
  return out;
}

Int LatticePolygon::normalized_area() const {
  Int a = 0;
  std::size_t n = verts_.size();
  if (n < 3) return 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Pt2& p = verts_[i];
    const Pt2& q = verts_[(i + 1) % n];
    a += p[0] * q[1] - q[0] * p[1];
  }
  return a < 0 ? -a : a;
}

bool LatticePolygon::contains(const Pt2& p) const {
  std::size_t n = verts_.size();
  if (n == 0) return false;
  if (n == 1) return verts_[0] == p;
  if (n == 2) {
    // Segment membership.
    if (cross3(verts_[0], verts_[1], p) != 0) return false;
    for (int c = 0; c < 2; ++c) {
      Int lo = std::min(verts_[0][c], verts_[1][c]);
      Int hi = std::max(verts_[0][c], verts_[1][c]);
      if (p[c] < lo || p[c] > hi) return false;
    }
    return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cross3(verts_[i], verts_[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
  std::vector<Pt2> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const Pt2& a : p.vertices())
    for (const Pt2& b : q.vertices()) sums.push_back({a[0] + b[0], a[1] + b[1]});
  return LatticePolygon::hull(sums);
}

Int mixed_area(const LatticePolygon& p, const LatticePolygon& q) {
  Int defect = minkowski_sum(p, q).normalized_area() - p.normalized_area() -
               q.normalized_area();
  if (defect % 2 != 0)
    fail(ErrorKind::Internal, "odd mixed-area defect");
  return defect / 2;
}

Int lattice_length(const Pt2& a, const Pt2& b) {
  Vec d = {b[0] - a[0], b[1] - a[1]};
  if (is_zero(d)) return 0;
  return content(d);
}

std::vector<Vec> simplex_normals(const LatticeSimplexN& s) {
  std::size_t n = s.dim();
  if (s.vertices.size() != n + 1 || n < 2)
    fail(ErrorKind::DegenerateSimplex, "need N+1 vertices in Z^N");
  if (simplex_volume(s) == 0)
    fail(ErrorKind::DegenerateSimplex, "affinely dependent vertices");
  std::vector<Vec> normals;
  normals.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    // Facet opposite vertex k: directions spanned by the other vertices.
    std::vector<Vec> edges;
    std::size_t base = (k == 0) ? 1 : 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k || j == base) continue;
      edges.push_back(sub(s.vertices[j], s.vertices[base]));
    }
    Vec normal = kernel_direction(edges);
    if (is_zero(normal))
      fail(ErrorKind::DegenerateSimplex, "degenerate facet");
    normal = primitive(normal).first;
    // Orient away from the opposite vertex.
    Int pairing = dot(normal, sub(s.vertices[k], s.vertices[base]));
    if (pairing > 0) normal = neg(normal);
    if (pairing == 0)
      fail(ErrorKind::DegenerateSimplex, "vertex on its opposite facet");
    normals.push_back(normal);
  }
  return normals;
}

Int simplex_volume(const LatticeSimplexN& s) {
  std::size_t n = s.dim();
  if (s.vertices.size() != n + 1)
    fail(ErrorKind::DegenerateSimplex, "need N+1 vertices in Z^N");
  std::vector<Vec> rows;
  rows.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    rows.push_back(sub(s.vertices[i], s.vertices[0]));
  Int d = det(rows);
  return d < 0 ? -d : d;
}

bool is_primitive_simplex(const LatticeSimplexN& s) {
  return simplex_volume(s) == 1;
}

}  // namespace tropfan
