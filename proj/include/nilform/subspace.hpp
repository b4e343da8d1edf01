#ifndef NILFORM_SUBSPACE_HPP
#define NILFORM_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/matrix.hpp"

namespace nilform {

/// Linear subspace of Q^n. The basis is kept in reduced row echelon form
/// (one vector per row, no zero rows), so equal subspaces have identical
/// basis matrices and equality is a data comparison.
class Subspace {
public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix::identity(ambient);
    return s;
  }

  /// Span of the rows of `m` inside Q^ambient.
  static Subspace span_rows(std::size_t ambient, const Matrix& m) {
    if (m.rows() != 0 && m.cols() != ambient)
      throw validation_error("subspace: ambient dimension mismatch");
    Subspace s;
    s.ambient_ = ambient;
    RrefResult e = rref(m);
    Matrix b(e.rank, ambient);
    for (std::size_t i = 0; i < e.rank; ++i)
      for (std::size_t j = 0; j < ambient; ++j) b(i, j) = e.mat(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return zero(ambient);
    return span_rows(ambient, Matrix::from_rows(vectors));
  }

  /// Column space of `m`, a subspace of Q^rows.
  static Subspace image(const Matrix& m) {
    return span_rows(m.rows(), m.transpose());
  }

  /// Null space of `m`, a subspace of Q^cols.
  static Subspace kernel(const Matrix& m) {
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = kernel_basis(m);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw validation_error("subspace: vector dimension mismatch");
    return coordinates_of(v).has_value();
  }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    if (other.dim() > dim()) return false;
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  /// Coordinates of `v` in this basis, if v lies in the subspace.
  std::optional<Vec> coordinates_of(const Vec& v) const {
    if (v.size() != ambient_) throw validation_error("subspace: vector dimension mismatch");
    if (dim() == 0) return is_zero_vec(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    // The basis is in RREF: coordinates read off at pivot columns, then verify.
    Vec coords(dim());
    Vec rem = v;
    for (std::size_t r = 0; r < dim(); ++r) {
      std::size_t p = pivot_col(r);
      coords[r] = rem[p];
      if (!coords[r].is_zero())
        for (std::size_t j = 0; j < ambient_; ++j)
          if (!basis_(r, j).is_zero()) rem[j] -= coords[r] * basis_(r, j);
    }
    if (!is_zero_vec(rem)) return std::nullopt;
    return coords;
  }

  Vec from_coordinates(const Vec& coords) const {
    if (coords.size() != dim()) throw validation_error("subspace: coordinate size mismatch");
    Vec v(ambient_, Rational(0));
    for (std::size_t r = 0; r < dim(); ++r)
      if (!coords[r].is_zero())
        for (std::size_t j = 0; j < ambient_; ++j)
          if (!basis_(r, j).is_zero()) v[j] += coords[r] * basis_(r, j);
    return v;
  }

  Subspace sum(const Subspace& other) const {
    check_ambient(other);
    return span_rows(ambient_, basis_.vstack(other.basis_));
  }

  /// Annihilator {y : <y, u> = 0 for all u in this} under the standard dot
  /// product; the duality engine behind intersections.
  Subspace annihilator() const {
    if (dim() == 0) return full(ambient_);
    return kernel(basis_);
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other);
    return annihilator().sum(other.annihilator()).annihilator();
  }

  /// Complement of this subspace inside `w` (this must be contained in w):
  /// deterministic greedy extension of the basis by w's basis vectors.
  Subspace complement_in(const Subspace& w) const {
    check_ambient(w);
    if (!w.contains(*this))
      throw validation_error("complement_in: subspace is not contained in the ambient one");
    std::vector<Vec> acc;
    for (std::size_t i = 0; i < dim(); ++i) acc.push_back(basis_vector(i));
    std::vector<Vec> picked;
    std::size_t have = dim();
    for (std::size_t i = 0; i < w.dim() && have < w.dim(); ++i) {
      Vec cand = w.basis_vector(i);
      acc.push_back(cand);
      if (rank(Matrix::from_rows(acc)) > have) {
        picked.push_back(cand);
        ++have;
      } else {
        acc.pop_back();
      }
    }
    return span(ambient_, picked);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t pivot_col(std::size_t r) const {
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(r, j).is_zero()) return j;
    throw internal_error("zero row in subspace basis");
  }

  void check_ambient(const Subspace& other) const {
    if (ambient_ != other.ambient_)
      throw validation_error("subspace: ambient dimension mismatch");
  }

  std::size_t ambient_;
  Matrix basis_;
};

} // namespace nilform

#endif
