// Shared fixtures for the test suite.
#pragma once

#include <random>

#include "tropfan/classify.hpp"
#include "tropfan/obstruction.hpp"
#include "tropfan/surface.hpp"

namespace tropfan::testing {

// Standard primitive N-simplex 0, e1, ..., eN.
inline LatticeSimplexN standard_simplex(int n) {
  LatticeSimplexN s;
  s.vertices.push_back(Vec(n, Int(0)));
  for (int i = 0; i < n; ++i) {
    Vec v(n, Int(0));
    v[i] = 1;
    s.vertices.push_back(v);
  }
  return s;
}

// Uniform plane fan on N+1 lines framed by the standard simplex:
// u_0 = (1,...,1), u_k = -e_k.
inline PlaneFan uniform_fan(int n) {
  return PlaneFan::build(LineArrangement::from_incidence(n + 1, {}),
                         DegreeOneFrame::from_simplex(standard_simplex(n)));
}

// Linear combination of the fan's u vectors.
inline Vec ucomb(const PlaneFan& f, const std::vector<std::pair<Int, int>>& t) {
  Vec v(f.frame().simplex.dim(), Int(0));
  for (const auto& [c, i] : t) v = add(v, scaled(c, f.u(i)));
  return v;
}

// The line L with rays u_0 + u_3 and u_1 + u_2 (uniform R^3).
inline FanCurve line_L(const PlaneFan& f) {
  return make_fan_curve({Ray{1, ucomb(f, {{1, 0}, {1, 3}})},
                         Ray{1, ucomb(f, {{1, 1}, {1, 2}})}});
}

// Trivalent degree-d curve with rays u_0+u_1, (d-1)u_0 + d u_3,
// (d-1)u_1 + d u_2, all weight 1.
inline FanCurve curve_Cd(const PlaneFan& f, long d) {
  return make_fan_curve({Ray{1, ucomb(f, {{1, 0}, {1, 1}})},
                         Ray{1, ucomb(f, {{d - 1, 0}, {d, 3}})},
                         Ray{1, ucomb(f, {{d - 1, 1}, {d, 2}})}});
}

// 4-valent curve: u_1+(d-1)u_2, (d-1)u_1+u_0, d u_3+(d-1)u_0, u_2.
inline FanCurve four_valent(const PlaneFan& f, long d) {
  return make_fan_curve({Ray{1, ucomb(f, {{1, 1}, {d - 1, 2}})},
                         Ray{1, ucomb(f, {{d - 1, 1}, {1, 0}})},
                         Ray{1, ucomb(f, {{d, 3}, {d - 1, 0}})},
                         Ray{1, ucomb(f, {{1, 2}})}});
}

inline FanMorphism embed_as_morphism(const FanCurve& c) {
  FanMorphism m;
  m.edges = c.rays;
  return m;
}

// Lemma-list normal form curves (uniform R^3); zero rays dropped.
inline FanCurve lemma_list_curve(const PlaneFan& f, int pattern, long d,
                                 long a, long b) {
  std::vector<std::pair<Int, std::vector<std::pair<Int, int>>>> raw;
  if (pattern == 1)
    raw = {{1, {{d, 0}, {a, 1}}}, {1, {{b, 1}, {d, 2}}},
           {1, {{d - a - b, 1}, {d, 3}}}};
  else if (pattern == 2)
    raw = {{1, {{d, 0}, {a, 1}}}, {1, {{d - a, 1}, {d - b, 2}}},
           {1, {{b, 2}, {d, 3}}}};
  else
    raw = {{1, {{a, 0}, {b, 1}}}, {1, {{d - a, 0}, {d - b, 1}}},
           {1, {{d, 2}, {d, 3}}}};
  std::vector<Ray> rays;
  for (auto& [w, combo] : raw) {
    Vec v = ucomb(f, combo);
    if (!is_zero(v)) rays.push_back(Ray{w, v});
  }
  return make_fan_curve(rays);
}

// All pathological parameter tuples (alpha, beta, gamma) for a given d.
inline std::vector<std::array<long, 3>> pathological_params(long d) {
  std::vector<std::array<long, 3>> out;
  for (long a = 1; a < d; ++a)
    for (long b = 0; b < d; ++b)
      for (long g = 0; b + g < d; ++g)
        if (b + g > 0 && g * (d - a) - a * b == 1) out.push_back({a, b, g});
  return out;
}

// Random GL_3(Z) matrix as a product of elementary shears and swaps.
inline std::vector<Vec> random_unimodular(std::mt19937& rng) {
  std::vector<Vec> m = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  std::uniform_int_distribution<int> pick(0, 2), coef(-2, 2), op(0, 1);
  for (int step = 0; step < 6; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (op(rng)) {
      Int c = coef(rng);
      for (int t = 0; t < 3; ++t) m[i][t] += c * m[j][t];  // row shear
    } else {
      std::swap(m[i], m[j]);
      for (int t = 0; t < 3; ++t) m[i][t] = -m[i][t];  // keep det = +1
    }
  }
  return m;
}

inline Vec mat_apply(const std::vector<Vec>& m, const Vec& v) {
  Vec out(m.size(), Int(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline std::vector<Vec> mat_mul(const std::vector<Vec>& a,
                                const std::vector<Vec>& b) {
  std::size_t n = a.size();
  std::vector<Vec> out(n, Vec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Inverse transpose of a matrix with det +-1.
inline std::vector<Vec> inverse_transpose(const std::vector<Vec>& m) {
  Int dt = det(m);
  std::size_t n = m.size();
  std::vector<Vec> out(n, Vec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Vec> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Vec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      Int cof = det(minor);
      if ((i + j) % 2) cof = -cof;
      // adj^T / det = inverse transpose (cofactor matrix / det).
      out[i][j] = cof / dt;
    }
  }
  return out;
}

// Applies M to curve directions and M^{-T} to the frame simplex so that
// normals transform by M.
inline PlaneFan transformed_uniform_fan(const std::vector<Vec>& m) {
  std::vector<Vec> mit = inverse_transpose(m);
  LatticeSimplexN s = standard_simplex(3);
  for (Vec& v : s.vertices) v = mat_apply(mit, v);
  return PlaneFan::build(LineArrangement::from_incidence(4, {}),
                         DegreeOneFrame::from_simplex(s));
}

inline FanCurve transformed_curve(const std::vector<Vec>& m,
                                  const FanCurve& c) {
  std::vector<Ray> rays;
  for (const Ray& r : c.rays) rays.push_back(Ray{r.weight, mat_apply(m, r.direction)});
  return make_fan_curve(rays);
}

}  // namespace tropfan::testing
