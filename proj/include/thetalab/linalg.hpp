#pragma once

// Dense real linear algebra for symmetric problems: packed symmetric storage,
// a Householder + implicit QL eigensolver, traces of powers, numeric rank and
// projection onto the PSD cone.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "thetalab/error.hpp"
#include "thetalab/graph.hpp"

namespace thetalab {

/// Row-major dense matrix used as scratch space by the numerical routines.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::kDimensionMismatch, "matrix product shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Real symmetric matrix; only the upper triangle is stored.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), packed_(n * (n + 1) / 2, 0.0) {}

  static SymMatrix identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
  }
  static SymMatrix ones(std::size_t n) {
    SymMatrix m(n);
    std::fill(m.packed_.begin(), m.packed_.end(), 1.0);
    return m;
  }
  static SymMatrix diagonal(const std::vector<double>& d) {
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
  }
  /// Throws DimensionMismatch unless `rows` is square and exactly symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error(ErrorKind::kDimensionMismatch, "matrix rows must be square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (rows[i][j] != rows[j][i]) {
          throw Error(ErrorKind::kDimensionMismatch, "matrix is not symmetric");
        }
        m.set(i, j, rows[i][j]);
      }
    }
    return m;
  }
  /// Symmetrizes (A + A^T) / 2.
  static SymMatrix from_dense(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::kDimensionMismatch, "matrix must be square");
    SymMatrix m(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = i; j < a.rows(); ++j) m.set(i, j, 0.5 * (a(i, j) + a(j, i)));
    }
    return m;
  }

  std::size_t n() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return packed_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, double v) noexcept { packed_[index(i, j)] = v; }
  void add(std::size_t i, std::size_t j, double v) noexcept { packed_[index(i, j)] += v; }

  /// True when every entry is an integer, so integer-valued identities can be checked exactly.
  bool is_exact() const noexcept {
    return std::all_of(packed_.begin(), packed_.end(),
                       [](double x) { return std::isfinite(x) && x == std::nearbyint(x); });
  }

  Matrix dense() const {
    Matrix a(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) a(i, j) = a(j, i) = (*this)(i, j);
    }
    return a;
  }

  std::vector<std::vector<double>> rows() const {
    std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
  }

  double trace() const noexcept {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }
  /// 1^T M 1.
  double sum() const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) s += (i == j ? 1.0 : 2.0) * (*this)(i, j);
    }
    return s;
  }
  double max_abs() const noexcept {
    double m = 0.0;
    for (double x : packed_) m = std::max(m, std::abs(x));
    return m;
  }
  /// <A, B> = tr(AB).
  double inner(const SymMatrix& o) const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) s += (i == j ? 1.0 : 2.0) * (*this)(i, j) * o(i, j);
    }
    return s;
  }
  double frobenius_distance(const SymMatrix& o) const noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i; j < n_; ++j) {
        const double d = (*this)(i, j) - o(i, j);
        s += (i == j ? 1.0 : 2.0) * d * d;
      }
    }
    return std::sqrt(s);
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + j;
  }

  std::size_t n_ = 0;
  std::vector<double> packed_;
};

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.n());
  for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

struct Spectrum {
  std::vector<double> eigenvalues;     // descending
  std::optional<Matrix> eigenvectors;  // column i pairs with eigenvalues[i]
  double residual = 0.0;               // max_i ||M v_i - lambda_i v_i||, 0 without vectors

  double lambda_max() const { return eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }
};

namespace detail {

// Householder reduction to tridiagonal form (d: diagonal, e: off-diagonal);
// v accumulates the orthogonal transformation.
inline void tridiagonalize(Matrix& v, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = v.rows();
  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);
  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal form; total sweeps capped at 30 n.
inline void tridiagonal_ql(Matrix& v, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = v.rows();
  const std::size_t max_iterations = 30 * n;
  std::size_t iterations = 0;
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
    if (m > l) {
      do {
        if (++iterations > max_iterations) {
          throw Error(ErrorKind::kConvergenceFailure,
                      "QL iteration exceeded " + std::to_string(max_iterations) + " sweeps");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;
        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (std::size_t k = 0; k < n; ++k) {
            h = v(k, i + 1);
            v(k, i + 1) = s * v(k, i) + c * h;
            v(k, i) = c * v(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace detail

/// Full eigendecomposition, eigenvalues sorted descending.
/// Throws ConvergenceFailure if QL needs more than 30 n sweeps.
inline Spectrum eigen_sym(const SymMatrix& m, bool with_vectors = true) {
  const std::size_t n = m.n();
  if (n == 0) throw Error(ErrorKind::kPreconditionViolated, "empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!std::isfinite(m(i, j))) throw Error(ErrorKind::kPreconditionViolated, "non-finite entry");
    }
  }
  Matrix v = m.dense();
  std::vector<double> d(n), e(n);
  detail::tridiagonalize(v, d, e);
  detail::tridiagonal_ql(v, d, e);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });

  Spectrum spec;
  spec.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.eigenvalues[i] = d[order[i]];
  if (!with_vectors) return spec;

  Matrix vecs(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) vecs(r, c) = v(r, order[c]);
  }
  const Matrix a = m.dense();
  double residual = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double norm2 = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double av = 0.0;
      for (std::size_t k = 0; k < n; ++k) av += a(r, k) * vecs(k, c);
      const double diff = av - spec.eigenvalues[c] * vecs(r, c);
      norm2 += diff * diff;
    }
    residual = std::max(residual, std::sqrt(norm2));
  }
  spec.residual = residual;
  spec.eigenvectors = std::move(vecs);
  return spec;
}

inline double lambda_max(const SymMatrix& m) { return eigen_sym(m, false).lambda_max(); }
inline double lambda_min(const SymMatrix& m) { return eigen_sym(m, false).lambda_min(); }

/// sum_i lambda_i^k from the spectrum.
inline double trace_power(const SymMatrix& m, unsigned k) {
  if (k < 1 || k > 64) throw Error(ErrorKind::kPreconditionViolated, "trace power must be in [1, 64]");
  double s = 0.0;
  for (double lam : eigen_sym(m, false).eigenvalues) s += std::pow(lam, static_cast<double>(k));
  return s;
}

inline double default_rank_tolerance(const std::vector<double>& eigenvalues) {
  double max_abs = 0.0;
  for (double lam : eigenvalues) max_abs = std::max(max_abs, std::abs(lam));
  return static_cast<double>(eigenvalues.size()) * max_abs * std::ldexp(1.0, -40);
}

/// Number of eigenvalues with |lambda| > tol (default n * max|lambda| * 2^-40).
inline std::size_t numeric_rank(const SymMatrix& m, std::optional<double> tol = std::nullopt) {
  const auto eigenvalues = eigen_sym(m, false).eigenvalues;
  const double cut = tol.value_or(default_rank_tolerance(eigenvalues));
  return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                [&](double lam) { return std::abs(lam) > cut; }));
}

/// Rebuilds sum_i w(lambda_i) v_i v_i^T from a spectrum with eigenvectors.
template <typename Weight>
SymMatrix spectral_rebuild(const Spectrum& spec, Weight&& weight) {
  const Matrix& v = *spec.eigenvectors;
  const std::size_t n = v.rows();
  SymMatrix out(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double w = weight(spec.eigenvalues[c]);
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = w * v(i, c);
      for (std::size_t j = i; j < n; ++j) out.add(i, j, vi * v(j, c));
    }
  }
  return out;
}

/// Frobenius-nearest PSD matrix: negative eigenvalues clamped to zero.
inline SymMatrix psd_project(const SymMatrix& m) {
  return spectral_rebuild(eigen_sym(m), [](double lam) { return std::max(lam, 0.0); });
}

/// Cholesky factor L (lower) of a symmetric positive definite matrix, or nullopt.
inline std::optional<Matrix> cholesky(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > 0.0)) return std::nullopt;
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

/// Solves L L^T x = b.
inline std::vector<double> cholesky_solve(const Matrix& l, std::vector<double> b) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) b[i] -= l(i, k) * b[k];
    b[i] /= l(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k < n; ++k) b[i] -= l(k, i) * b[k];
    b[i] /= l(i, i);
  }
  return b;
}

/// Inverse of a symmetric positive definite matrix via its Cholesky factor.
inline std::optional<Matrix> spd_inverse(const Matrix& a) {
  auto l = cholesky(a);
  if (!l) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix inv(n, n);
  std::vector<double> unit(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(unit.begin(), unit.end(), 0.0);
    unit[c] = 1.0;
    const auto col = cholesky_solve(*l, unit);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) inv(i, j) = inv(j, i) = 0.5 * (inv(i, j) + inv(j, i));
  }
  return inv;
}

}  // namespace thetalab
