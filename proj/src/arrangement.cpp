// SPDX-License-Identifier: MIT
#include "tropfan/arrangement.hpp"

#include <algorithm>
#include <map>

namespace tropfan {

namespace {

// Scale to integers, divide by gcd, make the first nonzero entry positive.
Vec canonicalize_triple(const Vec& v) {
  if (is_zero(v)) fail(ErrorKind::ZeroVector, "zero projective triple");
  Vec p = primitive(v).first;
  for (const Int& x : p) {
    if (x != 0) {
      if (x < 0) p = neg(p);
      break;
    }
  }
  return p;
}

}  // namespace

ProjLine ProjLine::from_rationals(const QVec& abc) {
  if (abc.size() != 3) fail(ErrorKind::InputError, "line needs 3 coefficients");
  Int l = 1;
  for (const Rat& r : abc) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  Vec v(3);
  for (int i = 0; i < 3; ++i) {
    Rat scaled = abc[i] * Rat(l);
    scaled.canonicalize();
    v[i] = scaled.get_num();
  }
  return ProjLine{canonicalize_triple(v)};
}

ProjLine ProjLine::from_ints(Int a, Int b, Int c) {
  return ProjLine{canonicalize_triple(Vec{a, b, c})};
}

ProjPoint ProjPoint::canonical(const Vec& xyz) {
  return ProjPoint{canonicalize_triple(xyz)};
}

ProjPoint intersect_lines(const ProjLine& a, const ProjLine& b) {
  const Vec& u = a.coeffs;
  const Vec& v = b.coeffs;
  Vec c = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
           u[0] * v[1] - u[1] * v[0]};
  if (is_zero(c)) fail(ErrorKind::DuplicateLine, "identical lines");
  return ProjPoint::canonical(c);
}

bool point_on_line(const ProjPoint& p, const ProjLine& l) {
  return dot(p.coords, l.coeffs) == 0;
}

void LineArrangement::validate() {
  if (n_lines_ < 3)
    fail(ErrorKind::InputError, "an arrangement needs at least 3 lines");
  // Every unordered pair in exactly one point; two points share <= 1 index.
  std::map<std::pair<int, int>, int> pair_count;
  for (std::size_t a = 0; a < points_.size(); ++a) {
    const auto& I = points_[a].indices;
    for (std::size_t s = 0; s < I.size(); ++s)
      for (std::size_t t = s + 1; t < I.size(); ++t)
        if (++pair_count[{I[s], I[t]}] > 1)
          fail(ErrorKind::InconsistentIncidence,
               "two points share two line indices");
  }
  for (int i = 0; i < n_lines_; ++i)
    for (int j = i + 1; j < n_lines_; ++j)
      if (!pair_count.count({i, j}))
        fail(ErrorKind::InconsistentIncidence, "uncovered line pair");
  // Standing assumption: some 3 lines form a uniform subarrangement, i.e.
  // not all lines pass through one point.
  for (const auto& p : points_) {
    if ((int)p.indices.size() == n_lines_)
      fail(ErrorKind::AllConcurrent, "all lines concurrent");
  }
}

LineArrangement LineArrangement::from_lines(const std::vector<ProjLine>& lines) {
  LineArrangement arr;
  arr.n_lines_ = (int)lines.size();
  arr.lines_ = lines;
  if (lines.size() < 3)
    fail(ErrorKind::InputError, "need at least 3 lines");
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines[i] == lines[j])
        fail(ErrorKind::DuplicateLine, "duplicate line " + std::to_string(i) +
                                           "/" + std::to_string(j));
  // Group pairwise intersections by location.
  std::map<Vec, std::vector<int>> groups;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      ProjPoint p = intersect_lines(lines[i], lines[j]);
      auto& g = groups[p.coords];
      for (int idx : {(int)i, (int)j})
        if (std::find(g.begin(), g.end(), idx) == g.end()) g.push_back(idx);
    }
  }
  for (auto& [coords, idxs] : groups) {
    std::sort(idxs.begin(), idxs.end());
    arr.points_.push_back(
        ArrangementPoint{idxs, ProjPoint{coords}});
  }
  arr.validate();
  return arr;
}

LineArrangement LineArrangement::from_incidence(
    int n_lines, const std::vector<std::vector<int>>& point_sets) {
  LineArrangement arr;
  arr.n_lines_ = n_lines;
  std::vector<std::vector<int>> sets;
  for (auto s : point_sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() < 2)
      fail(ErrorKind::InconsistentIncidence, "point set needs >= 2 lines");
    for (int i : s)
      if (i < 0 || i >= n_lines)
        fail(ErrorKind::InputError, "line index out of range");
    sets.push_back(s);
  }
  // Complete uncovered pairs as double points.
  std::vector<std::vector<bool>> covered(n_lines, std::vector<bool>(n_lines));
  for (const auto& s : sets)
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        covered[s[a]][s[b]] = true;
  for (int i = 0; i < n_lines; ++i)
    for (int j = i + 1; j < n_lines; ++j)
      if (!covered[i][j]) sets.push_back({i, j});
  for (auto& s : sets)
    arr.points_.push_back(ArrangementPoint{s, std::nullopt});
  arr.validate();
  return arr;
}

int LineArrangement::point_of_pair(int i, int j) const {
  for (std::size_t a = 0; a < points_.size(); ++a) {
    const auto& I = points_[a].indices;
    if (std::binary_search(I.begin(), I.end(), i) &&
        std::binary_search(I.begin(), I.end(), j))
      return (int)a;
  }
  fail(ErrorKind::Internal, "uncovered pair");
}

bool LineArrangement::is_uniform() const {
  for (const auto& p : points_)
    if (p.indices.size() != 2) return false;
  return true;
}

LineArrangement::PencilInfo LineArrangement::pencil_structure() const {
  PencilInfo info;
  // A quadruple is uniform iff no arrangement point contains 3 of its lines.
  int n = n_lines_;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          bool ok = true;
          for (const auto& p : points_) {
            int hits = 0;
            for (int x : {a, b, c, d})
              if (std::binary_search(p.indices.begin(), p.indices.end(), x))
                ++hits;
            if (hits >= 3) {
              ok = false;
              break;
            }
          }
          if (ok) {
            info.has_uniform_quadruple = true;
            info.quadruple = {a, b, c, d};
            return info;
          }
        }
  // Otherwise all lines but one pass through one point (the pencil).
  for (std::size_t a = 0; a < points_.size(); ++a) {
    if ((int)points_[a].indices.size() == n - 1) {
      info.pencil_point = (int)a;
      const auto& I = points_[a].indices;
      for (int i = 0; i < n; ++i)
        if (!std::binary_search(I.begin(), I.end(), i)) info.odd_line = i;
      return info;
    }
  }
  // Tiny arrangements (3 lines) have no quadruple at all; report the first
  // point as the pencil with the remaining line as odd.
  if (n == 3 && !points_.empty()) {
    info.pencil_point = 0;
    for (int i = 0; i < n; ++i) {
      const auto& I = points_[0].indices;
      if (!std::binary_search(I.begin(), I.end(), i)) {
        info.odd_line = i;
        break;
      }
    }
    return info;
  }
  fail(ErrorKind::Internal, "pencil dichotomy failed");
}

bool LineArrangement::collinear_point_sets(
    const std::vector<std::vector<int>>& sets) const {
  if (!coordinate_mode())
    fail(ErrorKind::CombinatorialModeOnly, "no coordinates available");
  std::vector<ProjPoint> pts;
  for (auto s : sets) {
    std::sort(s.begin(), s.end());
    bool found = false;
    for (const auto& p : points_) {
      if (p.indices == s) {
        pts.push_back(*p.location);
        found = true;
        break;
      }
    }
    if (!found)
      fail(ErrorKind::InputError, "not an arrangement point index set");
  }
  if (pts.size() <= 2) return true;
  for (std::size_t c = 2; c < pts.size(); ++c) {
    std::vector<Vec> rows = {pts[0].coords, pts[1].coords, pts[c].coords};
    if (det(rows) != 0) return false;
  }
  return true;
}

}  // namespace tropfan
