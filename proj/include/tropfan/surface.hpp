// Degree-d simplex triangulations, pathological cells and pairs, Vigeland
// star fans, and tropical-line verdicts on surfaces.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <array>

#include "tropfan/curve.hpp"

namespace tropfan {

// All lattice points of Delta_d = conv{0, d e1, d e2, d e3}.
std::vector<Vec> delta_d_lattice_points(const Int& d);

struct Triangulation3 {
  Int d;
  std::vector<LatticeSimplexN> cells;

  bool unimodular() const;
};

// Validates an explicit cell list: 3-simplices inside Delta_d with positive
// volume summing to d^3.  Errors: InvalidTriangulation.
Triangulation3 make_triangulation(const Int& d,
                                  std::vector<LatticeSimplexN> cells);

// Lower-hull regular subdivision of the lifted lattice points of Delta_d.
// Errors: EmptySupport, NonGenericLifts.
Triangulation3 regular_subdivision(const Int& d,
                                   const std::vector<std::pair<Vec, Rat>>& lifts);

struct PathologicalSimplex {
  LatticeSimplexN cell;
  Int d, alpha, beta, gamma;
  std::array<int, 4> perm;  // barycentric coordinate permutation used
};

// Normal-form test for one cell: vertices (0,0,0), (1,0,0), (0,d-a,a),
// (d-b-c,b,c) with 0<a<d, 0<b+c<d, c(d-a)-ab = 1, up to the 24 coordinate
// permutations of Delta_d.
std::optional<PathologicalSimplex> match_pathological(
    const LatticeSimplexN& cell, const Int& d);

std::vector<PathologicalSimplex> find_pathological_simplices(
    const Triangulation3& t);

enum class PairKind { TypeI, TypeII };

struct PathologicalPair {
  PairKind kind;
  std::size_t cell_a, cell_b;  // indices into the triangulation
  std::array<Vec, 2> edge;     // shared edge endpoints
};

std::vector<PathologicalPair> find_pathological_pairs(const Triangulation3& t);

struct VigelandStar {
  Int d, alpha, beta, gamma;
  std::array<Vec, 4> u;  // rays of the dual surface vertex
};

// Star fan of the vertex dual to a pathological simplex.
// Errors: BadParameters.
VigelandStar vigeland_star(const Int& d, const Int& alpha, const Int& beta,
                           const Int& gamma);

// The star as a combinatorial plane fan (uniform 4-line arrangement framed
// by the pathological simplex itself).
PlaneFan vigeland_plane_fan(const VigelandStar& star);

// The l = 0 member of the line family at the star vertex.
FanCurve vigeland_line();

struct LineVerdict {
  bool is_family;            // family member vs isolated line
  Rat l;                     // family parameter (representatives 0 and 1)
  bool approximable;
  std::size_t anchor;        // pathological simplex / pair index
};

// Verdict for one family member of a star.
LineVerdict verdict_for(const PathologicalSimplex& s, const Rat& l);

// Family verdicts (representatives l = 0, 1 per pathological simplex) plus
// isolated-line verdicts for pathological pairs when d >= 4.
std::vector<LineVerdict> line_verdicts(const Triangulation3& t);

// True iff the line's self-intersection differs from the classical 2 - d.
bool singularity_flag(const FanCurve& line, const PlaneFan& fan, const Int& d);

}  // namespace tropfan
