#ifndef NILFORM_POLYNOMIAL_HPP
#define NILFORM_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/matrix.hpp"
#include "nilform/rational.hpp"

namespace nilform {

/// Univariate polynomial over Q, coefficients in ascending degree order.
class Poly {
public:
  Poly() = default;
  explicit Poly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static Poly zero() { return Poly(); }
  static Poly constant(const Rational& r) { return Poly(Vec{r}); }
  static Poly x() { return Poly(Vec{Rational(0), Rational(1)}); }
  static Poly monomial(std::size_t deg, const Rational& coeff) {
    Vec v(deg + 1, Rational(0));
    v[deg] = coeff;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& coeff(std::size_t i) const {
    static const Rational kZero(0);
    return i < c_.size() ? c_[i] : kZero;
  }
  const Rational& lead() const {
    if (is_zero()) throw validation_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const Vec& coeffs() const { return c_; }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * Poly::constant(Rational(1) / lead());
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Vec r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Vec r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Vec r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    Vec r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Quotient and remainder with remainder degree < divisor degree.
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw validation_error("polynomial division by zero");
    Poly rem = num;
    if (num.degree() < den.degree()) return {Poly(), rem};
    Vec q(num.degree() - den.degree() + 1, Rational(0));
    const Rational inv_lead = Rational(1) / den.lead();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
      const std::size_t shift = rem.degree() - den.degree();
      const Rational f = rem.lead() * inv_lead;
      q[shift] = f;
      Vec rc = rem.c_;
      for (std::size_t i = 0; i < den.c_.size(); ++i)
        if (!den.c_[i].is_zero()) rc[shift + i] -= f * den.c_[i];
      rem = Poly(std::move(rc));
    }
    return {Poly(std::move(q)), rem};
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    Vec r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(long(i)) * c_[i];
    return Poly(std::move(r));
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Matrix eval_matrix(const Matrix& m) const {
    if (m.rows() != m.cols()) throw validation_error("polynomial of non-square matrix");
    const std::size_t n = m.rows();
    Matrix acc = Matrix::zero(n, n);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * m;
      if (!c_[i].is_zero())
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += c_[i];
    }
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      Rational a = c_[i];
      if (!first) {
        os << (a.sign() > 0 ? " + " : " - ");
        if (a.sign() < 0) a = -a;
      }
      first = false;
      if (i == 0 || !a.is_one()) os << a.str();
      if (i > 0) {
        if (!a.is_one() || i == 0) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Vec c_;
};

/// Monic gcd by the Euclidean algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
struct PolyEgcd {
  Poly g, u, v;
};
inline PolyEgcd poly_egcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(Rational(1)), u1;
  Poly v0, v1 = Poly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r2] = Poly::divmod(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const Poly scale = Poly::constant(Rational(1) / r0.lead());
  return {r0.monic(), scale * u0, scale * v0};
}

/// Product of the distinct irreducible factors: p / gcd(p, p').
inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw validation_error("squarefree part of zero polynomial");
  if (p.degree() == 0) return Poly::constant(Rational(1));
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.monic();
  return Poly::divmod(p, g).first.monic();
}

/// Yun's algorithm: monic squarefree decomposition p ~ prod s_i^i.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw validation_error("squarefree decomposition of zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly f = p.monic();
  if (f.degree() == 0) return out;
  Poly g = poly_gcd(f, f.derivative());
  Poly w = Poly::divmod(f, g).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = poly_gcd(w, g);
    Poly s = Poly::divmod(w, y).first;
    if (s.degree() > 0) out.emplace_back(s.monic(), i);
    w = std::move(y);
    g = Poly::divmod(g, w).first;
    ++i;
  }
  return out;
}

/// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion.
inline Poly charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw validation_error("charpoly of non-square matrix");
  const std::size_t n = m.rows();
  Vec c(n + 1, Rational(0));
  c[n] = Rational(1);
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix tmp = mk;
      for (std::size_t d = 0; d < n; ++d) tmp(d, d) += c[n - k + 1];
      mk = m * tmp;
    }
    c[n - k] = -(mk.trace() / Rational(long(k)));
  }
  return Poly(std::move(c));
}

/// Minimal polynomial via the first linear dependency among vectorized powers.
inline Poly minimal_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw validation_error("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(Rational(1));
  const std::size_t nn = n * n;
  // Augmented echelon rows [vec(M^k) | combination coords] so the dependency
  // coefficients fall out of the reduction.
  std::vector<Vec> echelon;
  std::vector<std::size_t> pivot_of_row;
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0;; ++k) {
    Vec row(nn + n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) row[i * n + j] = power(i, j);
    row[nn + k] = Rational(1);
    // reduce against current echelon
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const std::size_t p = pivot_of_row[r];
      if (row[p].is_zero()) continue;
      const Rational f = row[p];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (!echelon[r][j].is_zero()) row[j] -= f * echelon[r][j];
    }
    std::size_t piv = nn;
    for (std::size_t j = 0; j < nn; ++j)
      if (!row[j].is_zero()) { piv = j; break; }
    if (piv == nn) {
      // dependency found: min poly coefficients are the tracked combination
      Vec coeffs(k + 1);
      for (std::size_t i = 0; i <= k; ++i) coeffs[i] = row[nn + i];
      return Poly(std::move(coeffs)).monic();
    }
    const Rational inv = Rational(1) / row[piv];
    if (!inv.is_one())
      for (auto& x : row) x *= inv;
    echelon.push_back(std::move(row));
    pivot_of_row.push_back(piv);
    if (k == n) throw internal_error("minimal polynomial not found within dimension bound");
    power = power * m;
  }
}

namespace detail {

inline std::optional<mpz_class> sqrt_exact(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  mpz_class r = sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline std::optional<Rational> sqrt_exact(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  auto num = sqrt_exact(q.numerator());
  auto den = sqrt_exact(q.denominator());
  if (!num || !den) return std::nullopt;
  return Rational(mpq_class(*num, *den));
}

/// Clears denominators and content: primitive integer polynomial with the
/// same roots (up to positive scaling), returned as mpz coefficients.
inline std::vector<mpz_class> primitive_integer(const Poly& p) {
  mpz_class lcm_den(1);
  for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.denominator());
  std::vector<mpz_class> z;
  z.reserve(p.coeffs().size());
  mpz_class content(0);
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.numerator() * (lcm_den / c.denominator());
    z.push_back(v);
    content = gcd(content, v);
  }
  if (content == 0) content = 1;
  for (auto& v : z) v /= content;
  return z;
}

inline std::vector<mpz_class> divisors_of(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  for (mpz_class d(1); d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  return divs;
}

/// All rational roots of p (rational root theorem on the primitive form).
inline std::vector<Rational> rational_roots(const Poly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  auto z = primitive_integer(p);
  // strip trailing zero coefficients => root 0
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const mpz_class a0 = z[low];
  const mpz_class an = z.back();
  for (const auto& pnum : divisors_of(a0)) {
    for (const auto& qden : divisors_of(an)) {
      for (int s : {1, -1}) {
        Rational cand(mpq_class(s * pnum, qden));
        if (p.eval(cand).is_zero()) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || (r == cand);
          if (!seen) roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

// --- finite-field degree-pattern sieve (irreducibility certificate) ---

using ZpPoly = std::vector<std::uint64_t>; // ascending coefficients mod p

inline void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  zp_trim(r);
  return r;
}

inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, std::uint64_t p) {
  // f monic
  while (a.size() >= f.size() && !f.empty()) {
    std::uint64_t c = a.back();
    std::size_t shift = a.size() - f.size();
    if (c != 0)
      for (std::size_t i = 0; i < f.size(); ++i)
        a[shift + i] = (a[shift + i] + (p - f[i]) % p * c) % p;
    a.pop_back();
    zp_trim(a);
    if (a.size() < f.size()) break;
  }
  zp_trim(a);
  return a;
}

inline std::uint64_t zp_inv(std::uint64_t a, std::uint64_t p) {
  // Fermat inverse, p prime
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline ZpPoly zp_monic(ZpPoly f, std::uint64_t p) {
  zp_trim(f);
  if (f.empty() || f.back() == 1) return f;
  std::uint64_t inv = zp_inv(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  a = zp_monic(std::move(a), p);
  b = zp_monic(std::move(b), p);
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = zp_monic(std::move(r), p);
  }
  return a;
}

inline ZpPoly zp_powmod(const ZpPoly& base, std::uint64_t e, const ZpPoly& f,
                        std::uint64_t p) {
  ZpPoly result{1};
  ZpPoly b = zp_mod(base, f, p);
  while (e) {
    if (e & 1) result = zp_mod(zp_mul(result, b, p), f, p);
    b = zp_mod(zp_mul(b, b, p), f, p);
    e >>= 1;
  }
  return result;
}

inline ZpPoly zp_divide_exact(ZpPoly num, const ZpPoly& den, std::uint64_t p) {
  ZpPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  const std::uint64_t inv = zp_inv(den.back(), p);
  while (num.size() >= den.size() && !num.empty()) {
    std::uint64_t c = num.back() * inv % p;
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    if (c != 0)
      for (std::size_t i = 0; i < den.size(); ++i)
        num[shift + i] = (num[shift + i] + p - den[i] * c % p) % p;
    zp_trim(num);
  }
  zp_trim(quot);
  return quot;
}

/// Multiset of irreducible-factor degrees of q mod p via distinct-degree
/// factorization; empty result means the prime is unusable (leading
/// coefficient vanishes or q is not squarefree mod p).
inline std::vector<std::size_t> zp_degree_pattern(const Poly& q, std::uint64_t p) {
  auto z = primitive_integer(q);
  ZpPoly f(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    mpz_class m = z[i] % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    f[i] = m.get_ui();
  }
  zp_trim(f);
  if (f.size() != z.size()) return {};
  f = zp_monic(std::move(f), p);
  ZpPoly df(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * (i % p) % p;
  zp_trim(df);
  if (df.empty() || zp_gcd(f, df, p).size() > 1) return {};

  std::vector<std::size_t> degrees;
  ZpPoly work = f;
  ZpPoly h{0, 1}; // x
  std::size_t d = 0;
  while (work.size() > 1) {
    ++d;
    if (work.size() - 1 < 2 * d) {
      degrees.push_back(work.size() - 1);
      break;
    }
    h = zp_powmod(h, p, work, p); // x^{p^d} mod work
    ZpPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    zp_trim(hx);
    ZpPoly g = zp_gcd(work, hx, p);
    if (g.size() > 1) {
      for (std::size_t i = 0; i < (g.size() - 1) / d; ++i) degrees.push_back(d);
      work = zp_monic(zp_divide_exact(work, g, p), p);
      h = zp_mod(h, work, p);
    }
  }
  return degrees;
}

} // namespace detail

struct PolyFactor {
  Poly factor; // monic irreducible
  int multiplicity = 1;
};

namespace detail {

inline void factor_squarefree(const Poly& q, std::vector<Poly>& out);

/// deg-4, monic, squarefree, no rational roots: try a rational split into
/// two monic quadratics via the resolvent cubic; verified by multiplication.
inline bool quartic_split(const Poly& q, Poly& f1, Poly& f2) {
  const Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1), d = q.coeff(0);
  // resolvent for y = q + s in (x^2+px+q)(x^2+rx+s):
  //   y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2) = 0
  Poly resolvent(Vec{-(a * a * d - Rational(4) * b * d + c * c), a * c - Rational(4) * d, -b,
                     Rational(1)});
  for (const Rational& y : rational_roots(resolvent)) {
    // p + r = a, p r = b - y
    const Rational disc = a * a - Rational(4) * (b - y);
    auto root = sqrt_exact(disc);
    if (!root) continue;
    const Rational p = (a + *root) / Rational(2);
    const Rational r = (a - *root) / Rational(2);
    // q + s = y, p s + q r = c, q s = d
    Rational qq, ss;
    if (p != r) {
      ss = (c - r * y) / (p - r);
      qq = y - ss;
    } else {
      // p == r: s and q symmetric; solve q s = d with q + s = y
      const Rational disc2 = y * y - Rational(4) * d;
      auto root2 = sqrt_exact(disc2);
      if (!root2) continue;
      qq = (y + *root2) / Rational(2);
      ss = y - qq;
    }
    Poly cand1(Vec{qq, p, Rational(1)});
    Poly cand2(Vec{ss, r, Rational(1)});
    if (cand1 * cand2 == q) {
      f1 = cand1;
      f2 = cand2;
      return true;
    }
  }
  return false;
}

/// Substitution trick for even polynomials f(x) = g(x^2).
inline bool even_substitution_split(const Poly& q, std::vector<Poly>& out) {
  if (q.degree() < 4 || q.degree() % 2 != 0) return false;
  for (long i = 1; i <= q.degree(); i += 2)
    if (!q.coeff(i).is_zero()) return false;
  Vec g(q.degree() / 2 + 1);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = q.coeff(2 * i);
  std::vector<Poly> gfactors;
  factor_squarefree(Poly(std::move(g)).monic(), gfactors);
  if (gfactors.size() == 1 && gfactors.front().degree() == q.degree() / 2)
    return false; // g irreducible of full degree: nothing learned
  for (const Poly& gf : gfactors) {
    Vec lifted(2 * gf.degree() + 1, Rational(0));
    for (long i = 0; i <= gf.degree(); ++i) lifted[2 * i] = gf.coeff(i);
    factor_squarefree(Poly(std::move(lifted)), out);
  }
  return true;
}

/// Finite-field certificate: true when some set of primes proves that no
/// proper rational factor degree is consistent with every mod-p pattern.
inline bool certify_irreducible_modp(const Poly& q) {
  static const std::uint64_t primes[] = {101, 103, 107, 109, 113, 127, 131, 137,
                                         139, 149, 151, 157, 163, 167, 173, 179};
  const std::size_t n = q.degree();
  std::vector<bool> feasible(n, true); // feasible[k]: factor of degree k possible
  feasible[0] = false;
  int used = 0;
  for (std::uint64_t p : primes) {
    auto pattern = zp_degree_pattern(q, p);
    if (pattern.empty()) continue;
    ++used;
    // subset sums of the degree multiset
    std::vector<bool> reachable(n + 1, false);
    reachable[0] = true;
    for (std::size_t d : pattern)
      for (std::size_t s = n; s + 1 > d; --s)
        if (s >= d && reachable[s - d]) reachable[s] = true;
    for (std::size_t k = 1; k < n; ++k)
      if (!reachable[k]) feasible[k] = false;
    bool any = false;
    for (std::size_t k = 1; k < n; ++k) any = any || feasible[k];
    if (!any) return true;
    if (used >= 8) break;
  }
  return false;
}

inline void factor_squarefree(const Poly& q, std::vector<Poly>& out) {
  Poly f = q.monic();
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(f);
    return;
  }
  auto roots = rational_roots(f);
  if (!roots.empty()) {
    for (const Rational& r : roots) {
      Poly lin(Vec{-r, Rational(1)});
      out.push_back(lin);
      f = Poly::divmod(f, lin).first;
    }
    factor_squarefree(f, out);
    return;
  }
  switch (f.degree()) {
    case 0: return;
    case 1: out.push_back(f); return;
    case 2: {
      // no rational roots => irreducible (discriminant is a non-square)
      out.push_back(f);
      return;
    }
    case 3: {
      // a rational factorization of a cubic has a linear factor
      out.push_back(f);
      return;
    }
    default: break;
  }
  {
    std::vector<Poly> sub;
    if (even_substitution_split(f, sub)) {
      for (auto& s : sub) out.push_back(std::move(s));
      return;
    }
  }
  if (f.degree() == 4) {
    Poly f1, f2;
    if (quartic_split(f, f1, f2)) {
      factor_squarefree(f1, out);
      factor_squarefree(f2, out);
    } else {
      out.push_back(f); // no rational roots and no quadratic split
    }
    return;
  }
  if (certify_irreducible_modp(f)) {
    out.push_back(f);
    return;
  }
  throw validation_error("polynomial factorization beyond supported desk-scale methods: " +
                         f.str());
}

} // namespace detail

/// Factors p into monic irreducible factors over Q with multiplicities
/// (desk-scale degrees; unsupported inputs raise validation_error).
inline std::vector<PolyFactor> factor_poly(const Poly& p) {
  if (p.is_zero()) throw validation_error("factorization of zero polynomial");
  std::vector<PolyFactor> out;
  for (const auto& [sf, mult] : squarefree_decomposition(p)) {
    std::vector<Poly> irr;
    detail::factor_squarefree(sf, irr);
    std::sort(irr.begin(), irr.end(), [](const Poly& a, const Poly& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      for (long i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
      }
      return false;
    });
    for (auto& f : irr) out.push_back(PolyFactor{std::move(f), mult});
  }
  return out;
}

inline std::vector<PolyFactor> factor_charpoly(const Matrix& m) {
  return factor_poly(charpoly(m));
}

} // namespace nilform

#endif
