// SPDX-License-Identifier: MIT
#include "tropfan/surface.hpp"

#include <algorithm>
#include <map>

#include "tropfan/intersection.hpp"

namespace tropfan {

namespace {

// Facet functionals of Delta_d: x, y, z and d - x - y - z.
Int facet_value(int facet, const Vec& p, const Int& d) {
  switch (facet) {
    case 0: return p[0];
    case 1: return p[1];
    case 2: return p[2];
    default: return d - p[0] - p[1] - p[2];
  }
}

bool edge_in_facet(int facet, const Vec& a, const Vec& b, const Int& d) {
  return facet_value(facet, a, d) == 0 && facet_value(facet, b, d) == 0;
}

Int cell_volume(const LatticeSimplexN& c) { return simplex_volume(c); }

}  // namespace

std::vector<Vec> delta_d_lattice_points(const Int& d) {
  if (d <= 0) fail(ErrorKind::InputError, "d must be positive");
  long dl = d.get_si();
  std::vector<Vec> pts;
  for (long x = 0; x <= dl; ++x)
    for (long y = 0; x + y <= dl; ++y)
      for (long z = 0; x + y + z <= dl; ++z)
        pts.push_back({Int(x), Int(y), Int(z)});
  return pts;
}

bool Triangulation3::unimodular() const {
  for (const auto& c : cells)
    if (cell_volume(c) != 1) return false;
  return true;
}

Triangulation3 make_triangulation(const Int& d,
                                  std::vector<LatticeSimplexN> cells) {
  if (d <= 0) fail(ErrorKind::InputError, "d must be positive");
  Int total = 0;
  for (const auto& c : cells) {
    if (c.vertices.size() != 4 || c.dim() != 3)
      fail(ErrorKind::InvalidTriangulation, "cells must be 3-simplices");
    for (const Vec& v : c.vertices)
      for (int f = 0; f < 4; ++f)
        if (facet_value(f, v, d) < 0)
          fail(ErrorKind::InvalidTriangulation,
               "vertex " + to_string(v) + " outside the degree-" +
                   d.get_str() + " simplex");
    Int vol = cell_volume(c);
    if (vol <= 0)
      fail(ErrorKind::InvalidTriangulation, "degenerate cell");
    total += vol;
  }
  if (total != d * d * d)
    fail(ErrorKind::InvalidTriangulation,
         "cell volumes sum to " + total.get_str() + ", expected " +
             Int(d * d * d).get_str());
  return Triangulation3{d, std::move(cells)};
}

Triangulation3 regular_subdivision(
    const Int& d, const std::vector<std::pair<Vec, Rat>>& lifts) {
  if (lifts.empty()) fail(ErrorKind::EmptySupport, "no lifted points");
  for (const auto& [p, h] : lifts) {
    if (p.size() != 3) fail(ErrorKind::InputError, "points must be in Z^3");
    for (int f = 0; f < 4; ++f)
      if (facet_value(f, p, d) < 0)
        fail(ErrorKind::InputError,
             "lift point " + to_string(p) + " outside the simplex");
  }
  std::size_t n = lifts.size();
  std::vector<LatticeSimplexN> cells;
  // Brute-force lower-facet enumeration over 4-subsets.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = c + 1; e < n; ++e) {
          LatticeSimplexN cand{{lifts[a].first, lifts[b].first,
                                lifts[c].first, lifts[e].first}};
          if (cell_volume(cand) == 0) continue;
          // Affine functional through the four lifted points.
          std::vector<QVec> rows;
          QVec rhs;
          for (std::size_t t : {a, b, c, e}) {
            const Vec& p = lifts[t].first;
            rows.push_back({Rat(p[0]), Rat(p[1]), Rat(p[2]), Rat(1)});
            rhs.push_back(lifts[t].second);
          }
          auto sol = solve_square(rows, rhs);
          if (!sol) continue;  // vertical support plane
          bool lower = true;
          for (std::size_t q = 0; q < n; ++q) {
            if (q == a || q == b || q == c || q == e) continue;
            const Vec& p = lifts[q].first;
            Rat val = (*sol)[0] * Rat(p[0]) + (*sol)[1] * Rat(p[1]) +
                      (*sol)[2] * Rat(p[2]) + (*sol)[3];
            if (lifts[q].second < val) {
              lower = false;
              break;
            }
            if (lifts[q].second == val)
              fail(ErrorKind::NonGenericLifts,
                   "five lifted points on one lower support plane");
          }
          if (lower) cells.push_back(std::move(cand));
        }
  if (cells.empty())
    fail(ErrorKind::EmptySupport, "support is affinely degenerate");
  // When the support is the full set of lattice points the cells must tile
  // Delta_d exactly.
  if ((long)n == (long)delta_d_lattice_points(d).size()) {
    Int total = 0;
    for (const auto& c : cells) total += cell_volume(c);
    if (total != d * d * d)
      fail(ErrorKind::NonGenericLifts,
           "lower hull does not tile the simplex (volume " + total.get_str() +
               " of " + Int(d * d * d).get_str() + ")");
  }
  return Triangulation3{d, std::move(cells)};
}

std::optional<PathologicalSimplex> match_pathological(
    const LatticeSimplexN& cell, const Int& d) {
  if (cell.vertices.size() != 4 || cell.dim() != 3) return std::nullopt;
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    // Barycentric permutation: b = (x, y, z, d-x-y-z) -> reordered by perm.
    std::vector<Vec> mapped;
    for (const Vec& v : cell.vertices) {
      std::array<Int, 4> bary = {v[0], v[1], v[2], d - v[0] - v[1] - v[2]};
      mapped.push_back({bary[perm[0]], bary[perm[1]], bary[perm[2]]});
    }
    Vec origin = {0, 0, 0};
    Vec e1 = {1, 0, 0};
    auto has = [&](const Vec& v) {
      return std::find(mapped.begin(), mapped.end(), v) != mapped.end();
    };
    if (!has(origin) || !has(e1)) continue;
    std::vector<Vec> rest;
    for (const Vec& v : mapped)
      if (v != origin && v != e1) rest.push_back(v);
    if (rest.size() != 2) continue;
    for (int swap = 0; swap < 2; ++swap) {
      const Vec& P = rest[swap];       // (0, d-a, a)
      const Vec& Q = rest[1 - swap];   // (d-b-c, b, c)
      if (P[0] != 0 || P[1] + P[2] != d) continue;
      Int alpha = P[2];
      if (!(alpha > 0 && alpha < d)) continue;
      if (Q[0] + Q[1] + Q[2] != d) continue;
      Int beta = Q[1], gamma = Q[2];
      if (!(beta + gamma > 0 && beta + gamma < d)) continue;
      if (gamma * (d - alpha) - alpha * beta != 1) continue;
      return PathologicalSimplex{cell, d, alpha, beta, gamma, perm};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<PathologicalSimplex> find_pathological_simplices(
    const Triangulation3& t) {
  std::vector<PathologicalSimplex> out;
  for (const auto& c : t.cells)
    if (auto m = match_pathological(c, t.d)) out.push_back(*m);
  return out;
}

namespace {

// The 2-face {a, b, c} meets facet f of Delta_d iff the facet functional
// attains 0 at one of the triangle's vertices (it is nonnegative on Delta_d).
bool face_meets_facet(int f, const Vec& a, const Vec& b, const Vec& c,
                      const Int& d) {
  return facet_value(f, a, d) == 0 || facet_value(f, b, d) == 0 ||
         facet_value(f, c, d) == 0;
}

}  // namespace

namespace {

// Tries the role assignment Delta = A, Delta' = B for one shared edge and
// one requested pair kind.
bool pair_roles_match(const LatticeSimplexN& A, const LatticeSimplexN& B,
                      const Vec& e0, const Vec& e1,
                      const std::vector<Vec>& a_rest,
                      const std::vector<Vec>& b_rest, const Int& d,
                      PairKind want) {
  // Candidate edges of A distinct from e: the opposite edge plus the four
  // mixed edges.
  std::vector<std::pair<Vec, Vec>> a_edges = {
      {a_rest[0], a_rest[1]}, {e0, a_rest[0]}, {e0, a_rest[1]},
      {e1, a_rest[0]},        {e1, a_rest[1]}};
  for (int fi = 0; fi < 4; ++fi) {
    for (int fj = 0; fj < 4; ++fj) {
      if (fi == fj) continue;
      bool hosted = false;
      for (std::size_t s = 0; s < a_edges.size() && !hosted; ++s)
        for (std::size_t r = 0; r < a_edges.size() && !hosted; ++r)
          if (s != r &&
              edge_in_facet(fi, a_edges[s].first, a_edges[s].second, d) &&
              edge_in_facet(fj, a_edges[r].first, a_edges[r].second, d))
            hosted = true;
      if (!hosted) continue;
      int fk = -1, fl = -1;
      for (int f = 0; f < 4; ++f)
        if (f != fi && f != fj) (fk < 0 ? fk : fl) = f;
      for (int swap = 0; swap < 2; ++swap) {
        int k = swap ? fl : fk;
        int l = swap ? fk : fl;
        if (want == PairKind::TypeI) {
          // Type I: e in F_k, opposite edge of B in F_l.
          if (edge_in_facet(k, e0, e1, d) &&
              edge_in_facet(l, b_rest[0], b_rest[1], d))
            return true;
        } else {
          // Type II: a 2-face of B containing e meets both F_k and F_l.
          for (const Vec& extra : b_rest)
            if (face_meets_facet(k, e0, e1, extra, d) &&
                face_meets_facet(l, e0, e1, extra, d))
              return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::vector<PathologicalPair> find_pathological_pairs(const Triangulation3& t) {
  std::vector<PathologicalPair> out;
  const Int& d = t.d;
  // Each unordered pair of cells is reported at most once; Type I takes
  // precedence over Type II across both role assignments.
  for (std::size_t ai = 0; ai < t.cells.size(); ++ai) {
    for (std::size_t bi = ai + 1; bi < t.cells.size(); ++bi) {
      const auto& A = t.cells[ai];
      const auto& B = t.cells[bi];
      if (cell_volume(A) != 1 || cell_volume(B) != 1) continue;
      // Shared edge: exactly two common vertices.
      std::vector<Vec> common, a_rest, b_rest;
      for (const Vec& v : A.vertices) {
        if (std::find(B.vertices.begin(), B.vertices.end(), v) !=
            B.vertices.end())
          common.push_back(v);
        else
          a_rest.push_back(v);
      }
      for (const Vec& v : B.vertices)
        if (std::find(A.vertices.begin(), A.vertices.end(), v) ==
            A.vertices.end())
          b_rest.push_back(v);
      if (common.size() != 2) continue;
      const Vec& e0 = common[0];
      const Vec& e1 = common[1];
      if (pair_roles_match(A, B, e0, e1, a_rest, b_rest, d, PairKind::TypeI))
        out.push_back(PathologicalPair{PairKind::TypeI, ai, bi, {e0, e1}});
      else if (pair_roles_match(B, A, e0, e1, b_rest, a_rest, d,
                                PairKind::TypeI))
        out.push_back(PathologicalPair{PairKind::TypeI, bi, ai, {e0, e1}});
      else if (pair_roles_match(A, B, e0, e1, a_rest, b_rest, d,
                                PairKind::TypeII))
        out.push_back(PathologicalPair{PairKind::TypeII, ai, bi, {e0, e1}});
      else if (pair_roles_match(B, A, e0, e1, b_rest, a_rest, d,
                                PairKind::TypeII))
        out.push_back(PathologicalPair{PairKind::TypeII, bi, ai, {e0, e1}});
    }
  }
  return out;
}

VigelandStar vigeland_star(const Int& d, const Int& alpha, const Int& beta,
                           const Int& gamma) {
  if (!(alpha > 0 && alpha < d && beta + gamma > 0 && beta + gamma < d &&
        beta >= 0 && gamma >= 0))
    fail(ErrorKind::BadParameters, "parameter ranges violated");
  if (gamma * (d - alpha) - alpha * beta != 1)
    fail(ErrorKind::BadParameters,
         "primitivity identity gamma(d-alpha) - alpha beta = 1 violated");
  VigelandStar s;
  s.d = d;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = gamma;
  Int m = d - beta - gamma;
  s.u[0] = {0, alpha, alpha - d};
  s.u[1] = {0, -gamma, beta};
  s.u[2] = {-1, -alpha * m, (d - alpha) * m};
  s.u[3] = {1, gamma + alpha * (m - 1), -beta - (d - alpha) * (m - 1)};
  // The five relations the family lines rely on.
  auto comb = [&](const Int& c0, int i0, const Int& c1, int i1) {
    return add(scaled(c0, s.u[i0]), scaled(c1, s.u[i1]));
  };
  if (comb(beta + gamma, 0, d, 1) != Vec{0, -1, -1} ||
      comb(m, 0, Int(1), 2) != Vec{-1, 0, 0} ||
      comb(d - 1, 2, d, 3) != Vec{1, 1, 1} ||
      comb(beta, 0, d - alpha, 1) != Vec{0, -1, 0} ||
      comb(gamma, 0, alpha, 1) != Vec{0, 0, -1})
    fail(ErrorKind::Internal, "star ray relations failed");
  return s;
}

PlaneFan vigeland_plane_fan(const VigelandStar& star) {
  const Int& d = star.d;
  Int m = d - star.beta - star.gamma;
  LatticeSimplexN simplex;
  simplex.vertices = {Vec{m, star.beta, star.gamma},
                      Vec{0, d - star.alpha, star.alpha}, Vec{1, 0, 0},
                      Vec{0, 0, 0}};
  DegreeOneFrame frame = DegreeOneFrame::from_simplex(simplex);
  for (int k = 0; k < 4; ++k)
    if (frame.normals[k] != star.u[k])
      fail(ErrorKind::Internal, "frame normals disagree with the star rays");
  LineArrangement arr = LineArrangement::from_incidence(4, {});
  return PlaneFan::build(std::move(arr), std::move(frame));
}

FanCurve vigeland_line() {
  return make_fan_curve({Ray{1, {-1, 0, 0}}, Ray{1, {1, 1, 1}},
                         Ray{1, {0, -1, 0}}, Ray{1, {0, 0, -1}}});
}

LineVerdict verdict_for(const PathologicalSimplex& s, const Rat& l) {
  LineVerdict v;
  v.is_family = true;
  v.l = l;
  v.anchor = 0;
  v.approximable = (l == 0 && s.d == 3 && s.alpha == 2 && s.beta == 0 &&
                    s.gamma == 1);
  return v;
}

std::vector<LineVerdict> line_verdicts(const Triangulation3& t) {
  std::vector<LineVerdict> out;
  auto simplices = find_pathological_simplices(t);
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    for (int l = 0; l <= 1; ++l) {
      LineVerdict v = verdict_for(simplices[s], Rat(l));
      v.anchor = s;
      out.push_back(v);
    }
  }
  if (t.d >= 4) {
    auto pairs = find_pathological_pairs(t);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      LineVerdict v;
      v.is_family = false;
      v.l = 0;
      v.approximable = false;
      v.anchor = p;
      out.push_back(v);
    }
  }
  return out;
}

bool singularity_flag(const FanCurve& line, const PlaneFan& fan,
                      const Int& d) {
  // A tropical line has at most four rays, all of weight 1.  Its degree in
  // the star fan of a surface vertex is the surface degree d, so the line
  // shape is checked instead of deg = 1.
  if (line.rays.size() > 4)
    fail(ErrorKind::DegreeNotOne, "singularity flag needs a tropical line");
  for (const auto& r : line.rays)
    if (r.weight != 1)
      fail(ErrorKind::DegreeNotOne, "singularity flag needs a tropical line");
  return self_intersection(line, fan) != 2 - d;
}

}  // namespace tropfan
