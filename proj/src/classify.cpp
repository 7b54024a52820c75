// SPDX-License-Identifier: MIT
#include "tropfan/classify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

namespace tropfan {

const char* class_status_name(ClassStatus s) {
  switch (s) {
    case ClassStatus::FinelyApproximable: return "FinelyApproximable";
    case ClassStatus::NotApproximable: return "NotApproximable";
    case ClassStatus::ConditionallyApproximable:
      return "ConditionallyApproximable";
    case ClassStatus::OutOfClassification: return "OutOfClassification";
  }
  return "Unknown";
}

const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::None: return "None";
    case CaseTag::DegreeOneLine: return "DegreeOneLine";
    case CaseTag::ExceptionalConic1: return "ExceptionalConic1";
    case CaseTag::ExceptionalConic2: return "ExceptionalConic2";
    case CaseTag::ExceptionalConic3: return "ExceptionalConic3";
    case CaseTag::NonUniformR3: return "NonUniformR3";
    case CaseTag::StableIntersection: return "StableIntersection";
    case CaseTag::ConicChain: return "ConicChain";
    case CaseTag::PlaneCyclesRule: return "PlaneCyclesRule";
  }
  return "Unknown";
}

namespace {

Vec weighted(const Ray& r) { return scaled(r.weight, r.direction); }

// Sorted multiset of the curve's weighted ray vectors.
std::vector<Vec> weighted_multiset(const FanCurve& c) {
  std::vector<Vec> out;
  for (const Ray& r : c.rays) out.push_back(weighted(r));
  std::sort(out.begin(), out.end());
  return out;
}

// Merge a list of weighted vectors by primitive direction and return the
// sorted multiset; nullopt if any vector is zero.
std::optional<std::vector<Vec>> merged_multiset(std::vector<Vec> vs) {
  std::vector<std::pair<Vec, Vec>> by_dir;  // (primitive dir, total)
  for (const Vec& v : vs) {
    if (is_zero(v)) return std::nullopt;
    Vec dir = primitive(v).first;
    bool found = false;
    for (auto& [d, total] : by_dir) {
      if (d == dir) {
        total = add(total, v);
        found = true;
        break;
      }
    }
    if (!found) by_dir.push_back({dir, v});
  }
  std::vector<Vec> out;
  for (auto& [d, total] : by_dir) out.push_back(total);
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe_points(const LineArrangement& arr,
                            const std::vector<int>& pts) {
  std::ostringstream os;
  for (std::size_t t = 0; t < pts.size(); ++t) {
    if (t) os << ", ";
    os << "p_{";
    const auto& I = arr.points()[pts[t]].indices;
    for (std::size_t s = 0; s < I.size(); ++s) {
      if (s) os << ",";
      os << I[s];
    }
    os << "}";
  }
  return os.str();
}

}  // namespace

ClassificationVerdict classify_line(const FanCurve& line, const PlaneFan& fan) {
  if (degree(line, fan) != 1)
    fail(ErrorKind::DegreeNotOne, "classify_line needs a degree-1 curve");
  const auto& arr = fan.arrangement();
  int n = arr.n_lines();
  // Candidates per ray: singleton skeleton directions and corner directions.
  struct Cand {
    std::uint64_t mask;
    int point;  // -1 for a skeleton ray u_i
  };
  std::vector<std::vector<Cand>> cands(line.rays.size());
  for (std::size_t e = 0; e < line.rays.size(); ++e) {
    Vec wv = weighted(line.rays[e]);
    for (int i = 0; i < n; ++i)
      if (wv == fan.u(i)) cands[e].push_back({std::uint64_t(1) << i, -1});
    for (std::size_t p = 0; p < arr.points().size(); ++p) {
      if (wv == fan.u_point((int)p)) {
        std::uint64_t m = 0;
        for (int i : arr.points()[p].indices) m |= std::uint64_t(1) << i;
        cands[e].push_back({m, (int)p});
      }
    }
  }
  std::uint64_t full = (n >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  std::vector<int> chosen_points;
  std::function<bool(std::size_t, std::uint64_t)> go =
      [&](std::size_t e, std::uint64_t used) -> bool {
    if (e == line.rays.size()) return used == full;
    for (const Cand& c : cands[e]) {
      if (used & c.mask) continue;
      if (c.point >= 0) chosen_points.push_back(c.point);
      if (go(e + 1, used | c.mask)) return true;
      if (c.point >= 0) chosen_points.pop_back();
    }
    return false;
  };
  ClassificationVerdict v;
  v.case_tag = CaseTag::DegreeOneLine;
  if (!go(0, 0)) {
    v.status = ClassStatus::NotApproximable;
    v.reasons.push_back(
        "rays do not split the line indices into corner sets and singletons");
    return v;
  }
  if (chosen_points.size() >= 3) {
    if (!arr.coordinate_mode()) {
      v.status = ClassStatus::ConditionallyApproximable;
      v.reasons.push_back("collinearity of " +
                          describe_points(arr, chosen_points) +
                          " is unverifiable without coordinates");
      return v;
    }
    std::vector<std::vector<int>> sets;
    for (int p : chosen_points) sets.push_back(arr.points()[p].indices);
    if (!arr.collinear_point_sets(sets)) {
      v.status = ClassStatus::NotApproximable;
      v.reasons.push_back("required points " +
                          describe_points(arr, chosen_points) +
                          " are not collinear");
      return v;
    }
  }
  v.status = ClassStatus::FinelyApproximable;
  v.witness = chosen_points.empty()
                  ? "a generic line in the plane"
                  : "the line through " + describe_points(arr, chosen_points);
  return v;
}

std::optional<LemmaListMatch> match_lemma_list(const FanCurve& curve,
                                               const PlaneFan& fan) {
  if (fan.N() != 3 || fan.arrangement().n_lines() != 4) return std::nullopt;
  Int dz = degree(curve, fan);
  if (dz < 1 || dz > 100) return std::nullopt;
  long d = dz.get_si();
  std::vector<Vec> target = weighted_multiset(curve);
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  auto u = [&](const std::array<int, 4>& s, int k) { return fan.u(s[k]); };
  auto lin = [&](const std::array<int, 4>& s, long c0, long c1, long c2,
                 long c3) {
    Vec v = scaled(Int(c0), u(s, 0));
    v = add(v, scaled(Int(c1), u(s, 1)));
    v = add(v, scaled(Int(c2), u(s, 2)));
    v = add(v, scaled(Int(c3), u(s, 3)));
    return v;
  };
  for (int pattern = 1; pattern <= 3; ++pattern) {
    for (long a = 0; a <= d; ++a) {
      for (long b = 0; b <= d; ++b) {
        if (pattern == 1) {
          if (a + b > d) continue;
          Int g;
          mpz_gcd(g.get_mpz_t(), Int(d).get_mpz_t(), Int(a).get_mpz_t());
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(b).get_mpz_t());
          if (g != 1) continue;
        }
        if (pattern == 3 && !(a < b)) continue;
        std::array<int, 4> s = {0, 1, 2, 3};
        do {
          std::vector<Vec> pat;
          if (pattern == 1) {
            pat = {lin(s, d, a, 0, 0), lin(s, 0, b, d, 0),
                   lin(s, 0, d - a - b, 0, d)};
          } else if (pattern == 2) {
            pat = {lin(s, d, a, 0, 0), lin(s, 0, d - a, d - b, 0),
                   lin(s, 0, 0, b, d)};
          } else {
            pat = {lin(s, a, b, 0, 0), lin(s, d - a, d - b, 0, 0),
                   lin(s, 0, 0, d, d)};
          }
          auto merged = merged_multiset(pat);
          if (merged && *merged == target)
            return LemmaListMatch{pattern, Int(d), Int(a), Int(b)};
        } while (std::next_permutation(s.begin(), s.end()));
      }
    }
  }
  return std::nullopt;
}

namespace {

bool has_point_containing(const LineArrangement& arr,
                          const std::vector<int>& set) {
  for (const auto& p : arr.points()) {
    bool all = true;
    for (int i : set)
      if (!std::binary_search(p.indices.begin(), p.indices.end(), i))
        all = false;
    if (all) return true;
  }
  return false;
}

bool base_uniform(const LineArrangement& arr, std::array<int, 4> base) {
  for (const auto& p : arr.points()) {
    int hits = 0;
    for (int i : base)
      if (std::binary_search(p.indices.begin(), p.indices.end(), i)) ++hits;
    if (hits >= 3) return false;
  }
  return true;
}

// Tangency of line `tangent_line` to the unique conic through p_{i,j} that
// is tangent to L_k at p_{i,k} and to L_l at p_{j,l}.  nullopt when the
// conic is not unique.
std::optional<bool> conic_tangency(const LineArrangement& arr, int i, int j,
                                   int k, int l, int tangent_line) {
  auto loc = [&](int a, int b) {
    return arr.points()[arr.point_of_pair(a, b)].location->coords;
  };
  Vec p_ik = loc(i, k), p_jl = loc(j, l), p_ij = loc(i, j);
  const Vec& l_k = arr.lines()[k].coeffs;
  const Vec& l_l = arr.lines()[l].coeffs;
  const Vec& l_t = arr.lines()[tangent_line].coeffs;
  // Unknowns q0..q5: M = [[q0,q1,q2],[q1,q3,q4],[q2,q4,q5]].
  // Row coefficients of (M p)_r over q.
  auto mp_row = [](const Vec& p, int r) {
    QVec row(6, Rat(0));
    if (r == 0) {
      row[0] = p[0];
      row[1] = p[1];
      row[2] = p[2];
    } else if (r == 1) {
      row[1] = p[0];
      row[3] = p[1];
      row[4] = p[2];
    } else {
      row[2] = p[0];
      row[4] = p[1];
      row[5] = p[2];
    }
    return row;
  };
  auto cross_rows = [&](const Vec& p, const Vec& line) {
    std::vector<QVec> rows;
    // (Mp) x line = 0, three coordinates.
    int idx[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (auto& c : idx) {
      QVec r1 = mp_row(p, c[0]);
      QVec r2 = mp_row(p, c[1]);
      QVec row(6, Rat(0));
      for (int t = 0; t < 6; ++t)
        row[t] = r1[t] * Rat(line[c[1]]) - r2[t] * Rat(line[c[0]]);
      rows.push_back(row);
    }
    return rows;
  };
  std::vector<QVec> rows = cross_rows(p_ik, l_k);
  for (auto& r : cross_rows(p_jl, l_l)) rows.push_back(r);
  // p_ij^T M p_ij = 0.
  QVec qrow(6, Rat(0));
  qrow[0] = Rat(p_ij[0] * p_ij[0]);
  qrow[1] = Rat(2 * p_ij[0] * p_ij[1]);
  qrow[2] = Rat(2 * p_ij[0] * p_ij[2]);
  qrow[3] = Rat(p_ij[1] * p_ij[1]);
  qrow[4] = Rat(2 * p_ij[1] * p_ij[2]);
  qrow[5] = Rat(p_ij[2] * p_ij[2]);
  rows.push_back(qrow);
  auto basis = nullspace(rows, 6);
  if (basis.size() != 1) return std::nullopt;
  const QVec& q = basis[0];
  // Tangent direction of the conic at p_ij is M p_ij.
  QVec t(3);
  t[0] = q[0] * Rat(p_ij[0]) + q[1] * Rat(p_ij[1]) + q[2] * Rat(p_ij[2]);
  t[1] = q[1] * Rat(p_ij[0]) + q[3] * Rat(p_ij[1]) + q[4] * Rat(p_ij[2]);
  t[2] = q[2] * Rat(p_ij[0]) + q[4] * Rat(p_ij[1]) + q[5] * Rat(p_ij[2]);
  if (t[0] == 0 && t[1] == 0 && t[2] == 0) return std::nullopt;
  // t parallel to l_t <=> cross product vanishes.
  return t[1] * Rat(l_t[2]) == t[2] * Rat(l_t[1]) &&
         t[2] * Rat(l_t[0]) == t[0] * Rat(l_t[2]) &&
         t[0] * Rat(l_t[1]) == t[1] * Rat(l_t[0]);
}

// Search the three exceptional-conic patterns.  Returns nullopt when no
// pattern matches combinatorially.
std::optional<ClassificationVerdict> try_exceptional_conics(
    const FanCurve& curve, const PlaneFan& fan) {
  const auto& arr = fan.arrangement();
  int n = arr.n_lines();
  std::vector<Vec> target = weighted_multiset(curve);
  auto pattern_eq = [&](std::initializer_list<Vec> vs) {
    auto merged = merged_multiset(std::vector<Vec>(vs));
    return merged && *merged == target;
  };
  auto uvec = [&](int a) { return fan.u(a); };
  auto sum2 = [&](const Vec& x, const Vec& y) { return add(x, y); };
  bool combinatorial_hit = false;
  bool geometric_fail = false;
  CaseTag hit_tag = CaseTag::None;
  std::string hit_reason;

  std::vector<int> roles(n);
  std::iota(roles.begin(), roles.end(), 0);
  std::sort(roles.begin(), roles.end());
  do {
    if (n == 5) {
      int i = roles[0], j = roles[1], k = roles[2], l = roles[3], m = roles[4];
      // Case 1: u_i+u_j, u_i+2u_k+u_m, u_j+2u_l+u_m; L_m through p_ik, p_jl.
      if (pattern_eq({sum2(uvec(i), uvec(j)),
                      add(uvec(i), add(scaled(2, uvec(k)), uvec(m))),
                      add(uvec(j), add(scaled(2, uvec(l)), uvec(m)))}) &&
          base_uniform(arr, {i, j, k, l}) &&
          has_point_containing(arr, {i, k, m}) &&
          has_point_containing(arr, {j, l, m})) {
        ClassificationVerdict v;
        v.status = ClassStatus::FinelyApproximable;
        v.case_tag = CaseTag::ExceptionalConic1;
        v.witness = "the restriction of the tangent conic to the conic-chain "
                    "plane through the added line";
        return v;
      }
      // Case 2: u_i+u_j+2u_m, u_i+2u_k, u_j+2u_l; L_m tangent at p_ij.
      if (pattern_eq({add(sum2(uvec(i), uvec(j)), scaled(2, uvec(m))),
                      add(uvec(i), scaled(2, uvec(k))),
                      add(uvec(j), scaled(2, uvec(l)))}) &&
          base_uniform(arr, {i, j, k, l}) &&
          has_point_containing(arr, {i, j, m})) {
        if (arr.coordinate_mode()) {
          auto tan = conic_tangency(arr, i, j, k, l, m);
          if (tan && *tan) {
            ClassificationVerdict v;
            v.status = ClassStatus::FinelyApproximable;
            v.case_tag = CaseTag::ExceptionalConic2;
            v.witness = "the conic tangent to the added line at the double "
                        "point of the base pair";
            return v;
          }
          geometric_fail = true;
          hit_tag = CaseTag::ExceptionalConic2;
          hit_reason = tan ? "added line is not tangent to the conic"
                           : "tangent conic is not unique";
        } else {
          combinatorial_hit = true;
          hit_tag = CaseTag::ExceptionalConic2;
          hit_reason =
              "tangency of the added line is unverifiable without coordinates";
        }
      }
    } else if (n == 6) {
      int i = roles[0], j = roles[1], k = roles[2], l = roles[3], m = roles[4],
          nn = roles[5];
      // Case 3: u_i+u_j+2u_m, u_i+2u_k+u_n, u_j+2u_l+u_n;
      // L_n through p_ik, p_jl and L_m tangent at p_ij.
      if (pattern_eq({add(sum2(uvec(i), uvec(j)), scaled(2, uvec(m))),
                      add(uvec(i), add(scaled(2, uvec(k)), uvec(nn))),
                      add(uvec(j), add(scaled(2, uvec(l)), uvec(nn)))}) &&
          base_uniform(arr, {i, j, k, l}) &&
          has_point_containing(arr, {i, j, m}) &&
          has_point_containing(arr, {i, k, nn}) &&
          has_point_containing(arr, {j, l, nn})) {
        if (arr.coordinate_mode()) {
          auto tan = conic_tangency(arr, i, j, k, l, m);
          if (tan && *tan) {
            ClassificationVerdict v;
            v.status = ClassStatus::FinelyApproximable;
            v.case_tag = CaseTag::ExceptionalConic3;
            v.witness = "the conic meeting both added lines as required";
            return v;
          }
          geometric_fail = true;
          hit_tag = CaseTag::ExceptionalConic3;
          hit_reason = tan ? "tangent line of the conic misses the added line"
                           : "tangent conic is not unique";
        } else {
          combinatorial_hit = true;
          hit_tag = CaseTag::ExceptionalConic3;
          hit_reason =
              "tangency of the added line is unverifiable without coordinates";
        }
      }
    }
  } while (std::next_permutation(roles.begin(), roles.end()));

  if (combinatorial_hit || geometric_fail) {
    ClassificationVerdict v;
    v.case_tag = hit_tag;
    v.status = combinatorial_hit ? ClassStatus::ConditionallyApproximable
                                 : ClassStatus::NotApproximable;
    v.reasons.push_back(hit_reason);
    return v;
  }
  return std::nullopt;
}

int direction_rank(const FanCurve& c) {
  // Rank of the ray-direction span (at most 3 rays).
  if (c.rays.size() <= 1) return (int)c.rays.size();
  if (c.rays.size() == 2) return 2;  // distinct primitive directions
  std::vector<Vec> rows;
  for (const Ray& r : c.rays) rows.push_back(r.direction);
  if (rows[0].size() == 3 && det(rows) != 0) return 3;
  return 2;
}

}  // namespace

ClassificationVerdict classify_trivalent(const FanCurve& curve,
                                         const PlaneFan& fan) {
  if (curve.rays.size() < 2 || curve.rays.size() > 3)
    fail(ErrorKind::NotTrivalent, "curve must have 2 or 3 rays");
  if (!is_irreducible(curve))
    fail(ErrorKind::ReducibleCurve, "curve must be irreducible");
  Int d = degree(curve, fan);
  if (d == 1) return classify_line(curve, fan);
  const auto& arr = fan.arrangement();
  int N = fan.N();
  ClassificationVerdict v;
  if (N == 3) {
    if (!arr.is_uniform()) {
      v.status = ClassStatus::FinelyApproximable;
      v.case_tag = CaseTag::NonUniformR3;
      v.witness = "any irreducible trivalent curve in a non-uniform plane";
      return v;
    }
    if (direction_rank(curve) == 3) {
      v.status = ClassStatus::OutOfClassification;
      v.reasons.push_back(
          "ray span has rank 3; outside the affine-plane classification");
      return v;
    }
    Int c2 = self_intersection(curve, fan);
    if (c2 == 0) {
      v.status = ClassStatus::FinelyApproximable;
      v.case_tag = CaseTag::StableIntersection;
      v.witness = "a stable intersection of the supporting plane with the "
                  "affine span of the curve";
    } else if (c2 == -1) {
      v.status = ClassStatus::FinelyApproximable;
      v.case_tag = CaseTag::ConicChain;
      v.witness = "a rational curve with degree-plus-one punctures";
    } else {
      v.status = ClassStatus::NotApproximable;
      v.case_tag = CaseTag::PlaneCyclesRule;
      v.reasons.push_back("self-intersection " + c2.get_str() +
                          " is neither 0 nor -1");
    }
    return v;
  }
  if (N == 4 || N == 5) {
    if (auto ec = try_exceptional_conics(curve, fan)) return *ec;
    v.status = ClassStatus::NotApproximable;
    v.case_tag = CaseTag::PlaneCyclesRule;
    v.reasons.push_back(
        "no exceptional conic pattern matches this curve and arrangement");
    return v;
  }
  v.status = ClassStatus::NotApproximable;
  v.case_tag = CaseTag::PlaneCyclesRule;
  v.reasons.push_back("degree at least 2 with 7 or more lines");
  return v;
}

ClassificationVerdict plane_cycles_check(const FanCurve& curve,
                                         const PlaneFan& fan) {
  if (curve.rays.size() < 2 || curve.rays.size() > 3)
    fail(ErrorKind::NotTrivalent, "curve must have 2 or 3 rays");
  if (!is_reduced(curve))
    fail(ErrorKind::ReducibleCurve, "curve must be reduced");
  Int d = degree(curve, fan);
  int N = fan.N();
  ClassificationVerdict v;
  v.case_tag = CaseTag::PlaneCyclesRule;
  if (N == 3 && fan.arrangement().is_uniform()) {
    Int c2 = self_intersection(curve, fan);
    if (c2 == 0 || c2 == -1) {
      v.status = ClassStatus::FinelyApproximable;
      v.witness = "self-intersection in {0, -1}";
    } else {
      v.status = ClassStatus::NotApproximable;
      v.reasons.push_back("self-intersection " + c2.get_str() +
                          " is neither 0 nor -1");
    }
    return v;
  }
  if (N >= 6 && d >= 2) {
    v.status = ClassStatus::NotApproximable;
    v.reasons.push_back("degree at least 2 with 7 or more lines");
    return v;
  }
  v.status = ClassStatus::OutOfClassification;
  v.reasons.push_back("screen inconclusive; full classification required");
  return v;
}

}  // namespace tropfan
