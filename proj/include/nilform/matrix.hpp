#ifndef NILFORM_MATRIX_HPP
#define NILFORM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/rational.hpp"

namespace nilform {

using Vec = std::vector<Rational>;

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw validation_error("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw validation_error("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw validation_error("vector size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = Rational(1);
  return v;
}

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw validation_error("ragged initializer");
      for (long x : row) a_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw validation_error("ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  Vec col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw validation_error("row size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    if (rows_ != cols_) throw validation_error("trace of non-square matrix");
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw validation_error("matrix-vector size mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational s;
      for (std::size_t j = 0; j < cols_; ++j) {
        const Rational& m = (*this)(i, j);
        if (!m.is_zero() && !x[j].is_zero()) s += m * x[j];
      }
      y[i] = s;
    }
    return y;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator-(const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = -a.a_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw validation_error("matrix product size mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Stacks rows of `o` below this matrix (column counts must agree;
  /// an empty matrix acts as the neutral element).
  Matrix vstack(const Matrix& o) const {
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    if (cols_ != o.cols_) throw validation_error("vstack column mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
  }

private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw validation_error("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots; // pivot column per pivot row
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
  RrefResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // prefer a ±1 pivot to keep entries small
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      if (piv == rows) piv = i;
      if (m(i, c).abs().is_one()) { piv = i; break; }
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    const Rational inv = Rational(1) / m(r, c);
    if (!inv.is_one())
      for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.mat = std::move(m);
  return res;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of the null space {x : Mx = 0}, one vector per row, canonicalized.
inline Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  RrefResult e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> rows;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(n, Rational(0));
    v[fc] = Rational(1);
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
      v[e.pivots[pr]] = -e.mat(pr, fc);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix(0, n);
  RrefResult canon = rref(Matrix::from_rows(rows));
  Matrix out(canon.rank, n);
  for (std::size_t i = 0; i < canon.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = canon.mat(i, j);
  return out;
}

inline Rational det(Matrix m) {
  if (m.rows() != m.cols()) throw validation_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(c, j), m(piv, j));
      d = -d;
    }
    d *= m(c, c);
    const Rational inv = Rational(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw validation_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  RrefResult e = rref(std::move(aug));
  if (e.rank < n || e.pivots.back() >= n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.mat(i, n + j);
  return inv;
}

/// Incremental reduced echelon over Q: insert rows one at a time, keep the
/// reduced basis. Suited to large sparse constraint systems where most rows
/// reduce to zero quickly.
class IncrementalEchelon {
public:
  explicit IncrementalEchelon(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row extended the span.
  bool insert(Vec row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& x = row[pivots_[r]];
      if (x.is_zero()) continue;
      const Rational f = x;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
    }
    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) { piv = j; break; }
    if (piv == cols_) return false;
    const Rational inv = Rational(1) / row[piv];
    if (!inv.is_one())
      for (auto& x : row) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& x = rows_[r][piv];
      if (x.is_zero()) continue;
      const Rational f = x;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) rows_[r][j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Matrix matrix() const {
    Matrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) m.set_row(r, rows_[r]);
    return m;
  }

private:
  std::size_t cols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Affine solution set of Ax = b: a particular solution plus a kernel basis.
struct LinearSolution {
  Vec particular;
  Matrix kernel; // rows span the homogeneous solutions
};

/// Solves Ax = b exactly. Inconsistent systems yield nullopt (not an error).
inline std::optional<LinearSolution> solve_linear(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw validation_error("solve_linear: rhs size mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RrefResult e = rref(std::move(aug));
  for (std::size_t r = 0; r < e.rank; ++r)
    if (e.pivots[r] == n) return std::nullopt; // pivot in the rhs column
  LinearSolution sol;
  sol.particular.assign(n, Rational(0));
  for (std::size_t r = 0; r < e.rank; ++r) sol.particular[e.pivots[r]] = e.mat(r, n);
  sol.kernel = kernel_basis(a);
  return sol;
}

} // namespace nilform

#endif
