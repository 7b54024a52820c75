// SPDX-License-Identifier: MIT
#include "tropfan/base.hpp"

#include <sstream>

namespace tropfan {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::DuplicateLine: return "DuplicateLine";
    case ErrorKind::AllConcurrent: return "AllConcurrent";
    case ErrorKind::InconsistentIncidence: return "InconsistentIncidence";
    case ErrorKind::CombinatorialModeOnly: return "CombinatorialModeOnly";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CurveNotInFan: return "CurveNotInFan";
    case ErrorKind::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorKind::TooManyRays: return "TooManyRays";
    case ErrorKind::UnbalancedCurve: return "UnbalancedCurve";
    case ErrorKind::OrderingDoesNotCover: return "OrderingDoesNotCover";
    case ErrorKind::NotAtCorner: return "NotAtCorner";
    case ErrorKind::NonIntegralDecomposition: return "NonIntegralDecomposition";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::ReducibleImage: return "ReducibleImage";
    case ErrorKind::MalformedRegion: return "MalformedRegion";
    case ErrorKind::DegreeNotOne: return "DegreeNotOne";
    case ErrorKind::NotTrivalent: return "NotTrivalent";
    case ErrorKind::ReducibleCurve: return "ReducibleCurve";
    case ErrorKind::NonGenericLifts: return "NonGenericLifts";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind k) {
  return k == ErrorKind::InputError;
}

bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec neg(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec scaled(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int content(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

std::pair<Vec, Int> primitive(const Vec& v) {
  if (is_zero(v)) fail(ErrorKind::ZeroVector, "primitive of the zero vector");
  Int g = content(v);
  Vec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return {p, g};
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

Int det(const std::vector<Vec>& rows) {
  // Bareiss fraction-free elimination.
  std::size_t n = rows.size();
  std::vector<Vec> m = rows;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<QVec> nullspace(const std::vector<QVec>& rows_in, std::size_t n) {
  std::vector<QVec> rows = rows_in;
  std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[r], rows[piv]);
    Rat p = rows[r][c];
    for (std::size_t j = 0; j < n; ++j) rows[r][j] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    QVec v(n, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = -rows[i][c];
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<std::pair<Rat, Rat>> solve_pair(const Vec& x, const Vec& y,
                                              const Vec& v) {
  std::size_t n = x.size();
  // Find a pair of coordinates with an invertible 2x2 minor.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Int d = x[i] * y[j] - x[j] * y[i];
      if (d == 0) continue;
      Rat a = Rat(v[i] * y[j] - v[j] * y[i]) / Rat(d);
      Rat b = Rat(x[i] * v[j] - x[j] * v[i]) / Rat(d);
      a.canonicalize();
      b.canonicalize();
      for (std::size_t t = 0; t < n; ++t) {
        if (a * Rat(x[t]) + b * Rat(y[t]) != Rat(v[t])) return std::nullopt;
      }
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;  // x, y dependent
}

std::optional<QVec> solve_square(const std::vector<QVec>& rows_in,
                                 const QVec& rhs_in) {
  std::size_t n = rows_in.size();
  std::vector<QVec> a = rows_in;
  QVec b = rhs_in;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    Rat p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) a[c][j] /= p;
    b[c] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

Vec kernel_direction(const std::vector<Vec>& rows) {
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  Vec out(n, Int(0));
  // out[j] = (-1)^j * det(rows with column j removed)
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> minor;
    minor.reserve(rows.size());
    for (const Vec& row : rows) {
      Vec r;
      r.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(r);
    }
    Int d = det(minor);
    out[j] = (j % 2 == 0) ? d : -d;
  }
  return out;
}

}  // namespace tropfan
