#ifndef NILFORM_LIE_ALGEBRA_HPP
#define NILFORM_LIE_ALGEBRA_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/matrix.hpp"
#include "nilform/subspace.hpp"

namespace nilform {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
public:
  LieAlgebra() : LieAlgebra(0) {}
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {})
      : dim_(dim), labels_(std::move(labels)), c_(dim * dim * dim) {
    if (labels_.empty()) {
      labels_.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    }
    if (labels_.size() != dim_) throw validation_error("label count does not match dimension");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets [e_i, e_j] = coeffs and the antisymmetric counterpart.
  void set_bracket(std::size_t i, std::size_t j, const Vec& coeffs) {
    if (coeffs.size() != dim_) throw validation_error("bracket coefficient size mismatch");
    if (i == j) {
      if (!is_zero_vec(coeffs)) throw validation_error("[x,x] must vanish");
      return;
    }
    for (std::size_t k = 0; k < dim_; ++k) {
      c_[(i * dim_ + j) * dim_ + k] = coeffs[k];
      c_[(j * dim_ + i) * dim_ + k] = -coeffs[k];
    }
  }

  void set_bracket_entry(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    c_[(i * dim_ + j) * dim_ + k] = v;
    c_[(j * dim_ + i) * dim_ + k] = -v;
  }

  /// Raw single-sided write; leaves antisymmetry to the caller. Used by the
  /// document loader and by tests that construct invalid data on purpose.
  void set_structure_constant_raw(std::size_t i, std::size_t j, std::size_t k,
                                  const Rational& v) {
    c_[(i * dim_ + j) * dim_ + k] = v;
  }

  Vec bracket_basis(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw validation_error("bracket argument dimension mismatch");
    Vec z(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const Rational f = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!c(i, j, k).is_zero()) z[k] += f * c(i, j, k);
      }
    }
    return z;
  }

  /// Matrix of ad(x): column j holds [x, e_j].
  Matrix ad(const Vec& x) const {
    if (x.size() != dim_) throw validation_error("ad argument dimension mismatch");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!c(i, j, k).is_zero()) m(k, j) += x[i] * c(i, j, k);
    }
    return m;
  }

  Matrix ad_basis(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) m(k, j) = c(i, j, k);
    return m;
  }

  /// Span of all [u, w] over basis pairs of U and W.
  Subspace bracket_subspace(const Subspace& u, const Subspace& w) const {
    if (u.ambient_dim() != dim_ || w.ambient_dim() != dim_)
      throw validation_error("bracket_subspace ambient mismatch");
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < u.dim(); ++a) {
      const Vec ua = u.basis_vector(a);
      for (std::size_t b = 0; b < w.dim(); ++b) {
        Vec z = bracket(ua, w.basis_vector(b));
        if (!is_zero_vec(z)) rows.push_back(std::move(z));
      }
    }
    return Subspace::span(dim_, rows);
  }

  struct ValidationIssue {
    enum class Kind { antisymmetry, jacobi } kind;
    std::size_t i = 0, j = 0, k = 0;
    Vec value; // offending sum
    std::string str() const {
      std::ostringstream os;
      if (kind == Kind::antisymmetry)
        os << "antisymmetry violated at basis pair (" << i << "," << j << ")";
      else
        os << "Jacobi identity violated at basis triple (" << i << "," << j << "," << k << ")";
      return os.str();
    }
  };

  /// Confirms antisymmetry and the Jacobi identity exactly, or names the
  /// first violating pair/triple.
  std::optional<ValidationIssue> validate() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (c(i, j, k) != -c(j, i, k)) {
            ValidationIssue issue{ValidationIssue::Kind::antisymmetry, i, j, k, {}};
            return issue;
          }
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k) {
          Vec s = bracket(unit_vec(dim_, i), bracket_basis(j, k));
          s = vec_add(s, bracket(unit_vec(dim_, j), bracket_basis(k, i)));
          s = vec_add(s, bracket(unit_vec(dim_, k), bracket_basis(i, j)));
          if (!is_zero_vec(s)) {
            ValidationIssue issue{ValidationIssue::Kind::jacobi, i, j, k, std::move(s)};
            return issue;
          }
        }
    return std::nullopt;
  }

  void require_valid() const {
    if (auto issue = validate()) throw validation_error(issue->str());
  }

  /// Killing form kappa(x,y) = tr(ad x . ad y) as a Gram matrix.
  Matrix killing_gram() const {
    std::vector<Matrix> ads;
    ads.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
    Matrix k(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        Rational t;
        for (std::size_t a = 0; a < dim_; ++a)
          for (std::size_t b = 0; b < dim_; ++b) {
            const Rational& x = ads[i](a, b);
            if (!x.is_zero() && !ads[j](b, a).is_zero()) t += x * ads[j](b, a);
          }
        k(i, j) = t;
        k(j, i) = t;
      }
    return k;
  }

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
};

/// A subspace of an algebra together with cached structural flags.
struct SubalgebraHandle {
  Subspace space;
  bool is_subalgebra = false;
  bool is_ideal = false;
  bool is_abelian = false;

  static SubalgebraHandle analyze(const LieAlgebra& g, Subspace s) {
    SubalgebraHandle h;
    Subspace ss = g.bracket_subspace(s, s);
    Subspace gs = g.bracket_subspace(Subspace::full(g.dim()), s);
    h.is_subalgebra = s.contains(ss);
    h.is_ideal = s.contains(gs);
    h.is_abelian = ss.is_zero();
    h.space = std::move(s);
    return h;
  }
};

} // namespace nilform

#endif
