// Projective line arrangements over Q and their incidence combinatorics.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <variant>

#include "tropfan/base.hpp"

namespace tropfan {

// A projective line ax + by + cz = 0 stored in canonical primitive-integer
// form (gcd 1, first nonzero entry positive).
struct ProjLine {
  Vec coeffs;  // length 3

  static ProjLine from_rationals(const QVec& abc);
  static ProjLine from_ints(Int a, Int b, Int c);
  bool operator==(const ProjLine& o) const { return coeffs == o.coeffs; }
};

// Projective point in canonical primitive form.
struct ProjPoint {
  Vec coords;  // length 3

  static ProjPoint canonical(const Vec& xyz);
  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
};

// Exact intersection of two distinct lines.
ProjPoint intersect_lines(const ProjLine& a, const ProjLine& b);

bool point_on_line(const ProjPoint& p, const ProjLine& l);

struct ArrangementPoint {
  std::vector<int> indices;          // sorted, |I| >= 2, maximal
  std::optional<ProjPoint> location; // coordinate mode only
};

class LineArrangement {
 public:
  // Coordinate mode: N+1 distinct lines, not all concurrent.
  static LineArrangement from_lines(const std::vector<ProjLine>& lines);

  // Combinatorial mode: explicit point sets (|I| >= 3 or |I| = 2); pairs not
  // covered are completed as double points.
  static LineArrangement from_incidence(int n_lines,
                                        const std::vector<std::vector<int>>& point_sets);

  int n_lines() const { return n_lines_; }
  int N() const { return n_lines_ - 1; }
  bool coordinate_mode() const { return !lines_.empty(); }
  const std::vector<ProjLine>& lines() const { return lines_; }
  const std::vector<ArrangementPoint>& points() const { return points_; }

  // Index of the arrangement point containing both i and j.
  int point_of_pair(int i, int j) const;

  bool is_uniform() const;

  struct PencilInfo {
    bool has_uniform_quadruple = false;
    std::vector<int> quadruple;         // when found
    int pencil_point = -1;              // index into points() otherwise
    int odd_line = -1;
  };
  PencilInfo pencil_structure() const;

  // Coordinate mode only: are the named arrangement points collinear?
  bool collinear_point_sets(const std::vector<std::vector<int>>& sets) const;

 private:
  int n_lines_ = 0;
  std::vector<ProjLine> lines_;
  std::vector<ArrangementPoint> points_;

  void validate();
};

}  // namespace tropfan
