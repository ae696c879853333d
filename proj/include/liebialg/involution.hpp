#pragma once

// Sesquilinear Lie algebra involutions of g stored as v -> M conj(v), the
// canonical forms varsigma_mu and omega_{mu,J}, normalization of a
// Cartan-preserving involution to canonical form, and real bases of the
// fixed-point algebra g^sigma.

#include "liebialg/bdtriple.hpp"
#include "liebialg/core/linalg.hpp"
#include "liebialg/core/tensor.hpp"
#include "liebialg/rootsystem.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liebialg {

enum class InvolutionKind { varsigma, omega, general };

inline const char* to_string(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::varsigma: return "varsigma";
    case InvolutionKind::omega: return "omega";
    case InvolutionKind::general: return "general";
  }
  return "?";
}

/// A (semi)linear map v -> M conj(v) (semilinear) or v -> M v (linear).
struct Involution {
  GMatrix linear_part;
  bool semilinear = true;
  InvolutionKind kind = InvolutionKind::general;
  DiagramAutomorphism mu;
  std::vector<std::size_t> J;

  std::size_t dim() const { return linear_part.rows(); }

  Vector apply(const Vector& v) const {
    StructureConstants::require(v.size() == dim(), "Involution::apply: dimension mismatch");
    return semilinear ? linear_part * conj(v) : linear_part * v;
  }

  bool is_canonical() const { return kind != InvolutionKind::general; }
};

/// (a o b)(v) = a(b(v)).
inline Involution compose(const Involution& a, const Involution& b) {
  StructureConstants::require(a.dim() == b.dim(), "compose: dimension mismatch");
  GMatrix rhs = b.linear_part;
  if (a.semilinear) {
    GMatrix c(rhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < rhs.rows(); ++i)
      for (std::size_t j = 0; j < rhs.cols(); ++j) c(i, j) = rhs(i, j).conj();
    rhs = std::move(c);
  }
  Involution out;
  out.linear_part = a.linear_part * rhs;
  out.semilinear = a.semilinear != b.semilinear;
  out.kind = InvolutionKind::general;
  out.mu = DiagramAutomorphism::identity(0);
  return out;
}

inline bool squares_to_identity(const Involution& s) {
  Involution sq = compose(s, s);
  return !sq.semilinear && sq.linear_part == GMatrix::identity(s.dim());
}

/// s[b_i, b_j] = [s b_i, s b_j] on all basis pairs (the basis is real, so
/// conjugation plays no role here).
inline bool is_lie_homomorphism(const RootSystem& rs, const Involution& s) {
  const auto& sc = rs.structure();
  std::size_t n = rs.dim();
  std::vector<Vector> cols(n);
  for (std::size_t k = 0; k < n; ++k) cols[k] = s.linear_part.column(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs(n);
      for (const auto& t : sc.bracket(i, j)) lhs = lhs + GR(t.coeff) * cols[t.index];
      if (lhs != sc.bracket(cols[i], cols[j])) return false;
    }
  return true;
}

/// Linear (or semilinear) map determined by the images of x_{alpha_i} and
/// x_{-alpha_i}, extended to g through brackets. Basis vectors are real, so
/// the same column construction serves both cases.
inline GMatrix extend_from_generators(const RootSystem& rs, const std::vector<Vector>& pos_images,
                                      const std::vector<Vector>& neg_images) {
  std::size_t n = rs.dim(), r = rs.rank(), np = rs.num_positive();
  const auto& sc = rs.structure();
  std::vector<Vector> img(n);
  for (std::size_t i = 0; i < r; ++i) {
    img[rs.root_vector_index(i)] = pos_images[i];
    img[rs.root_vector_index(rs.negative(i))] = neg_images[i];
    img[rs.cartan_index(i)] = sc.bracket(pos_images[i], neg_images[i]);
  }
  // roots are ordered by height, so every proper decomposition is already known
  for (std::size_t k = r; k < np; ++k) {
    for (std::size_t sign = 0; sign < 2; ++sign) {
      std::size_t target = sign == 0 ? k : rs.negative(k);
      for (std::size_t i = 0; i < r; ++i) {
        std::size_t si = sign == 0 ? i : rs.negative(i);
        RootCoords rest = rs.root(target);
        for (std::size_t q = 0; q < r; ++q) rest[q] -= rs.root(si)[q];
        std::size_t g = rs.find_root(rest);
        if (g == RootSystem::npos) continue;
        const auto& terms = sc.bracket(rs.root_vector_index(si), rs.root_vector_index(g));
        if (terms.empty()) continue;
        Rational c = terms.front().coeff;
        Vector v = sc.bracket(img[rs.root_vector_index(si)], img[rs.root_vector_index(g)]);
        Rational inv = 1 / c;
        img[rs.root_vector_index(target)] = GR(inv) * v;
        break;
      }
    }
  }
  GMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (img[k].empty()) throw std::logic_error("extend_from_generators: basis vector not reached");
    m.set_column(k, img[k]);
  }
  return m;
}

/// Simple roots fixed by mu.
inline std::vector<std::size_t> fixed_simple_roots(const DiagramAutomorphism& mu) { return mu.fixed_points(); }

/// varsigma_mu (kind varsigma) or omega_{mu,J} (kind omega).
inline Involution canonical_involution(const RootSystem& rs, InvolutionKind kind, const DiagramAutomorphism& mu,
                                       std::vector<std::size_t> J = {}) {
  std::size_t n = rs.dim(), r = rs.rank();
  if (kind == InvolutionKind::general) throw std::invalid_argument("canonical_involution: kind must be varsigma or omega");
  if (!preserves_diagram(rs, mu) || mu.order() > 2)
    throw std::invalid_argument("canonical_involution: mu is not a diagram automorphism of order <= 2");
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  if (kind == InvolutionKind::varsigma && !J.empty())
    throw std::invalid_argument("canonical_involution: J applies only to omega kinds");
  for (std::size_t j : J)
    if (j >= r || mu(j) != j) throw std::invalid_argument("canonical_involution: J must be a subset of the mu-fixed simple roots");
  std::vector<Vector> pos(r), neg(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t m = mu(i);
    if (kind == InvolutionKind::varsigma) {
      pos[i] = basis_vector(n, rs.root_vector_index(m));
      neg[i] = basis_vector(n, rs.root_vector_index(rs.negative(m)));
    } else {
      GR s = std::binary_search(J.begin(), J.end(), i) ? GR(-1) : GR(1);
      pos[i] = basis_vector(n, rs.root_vector_index(rs.negative(m)), s);
      neg[i] = basis_vector(n, rs.root_vector_index(m), s);
    }
  }
  Involution out;
  out.linear_part = extend_from_generators(rs, pos, neg);
  out.semilinear = true;
  out.kind = kind;
  out.mu = mu;
  out.J = std::move(J);
  return out;
}

/// The Chevalley involution omega = omega_{id, Delta}.
inline Involution chevalley_involution(const RootSystem& rs) {
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < rs.rank(); ++i) all.push_back(i);
  return canonical_involution(rs, InvolutionKind::omega, DiagramAutomorphism::identity(rs.rank()), all);
}

/// Every canonical involution: varsigma_mu for each mu, omega_{mu,J} for each
/// mu and J subset of Delta^mu. Ordered by (kind, mu, J).
inline std::vector<Involution> all_canonical_involutions(const RootSystem& rs) {
  std::vector<Involution> out;
  auto autos = diagram_automorphisms(rs);
  for (const auto& mu : autos) out.push_back(canonical_involution(rs, InvolutionKind::varsigma, mu));
  for (const auto& mu : autos) {
    auto fixed = fixed_simple_roots(mu);
    std::size_t f = fixed.size();
    std::vector<std::vector<std::size_t>> subsets;
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
      std::vector<std::size_t> J;
      for (std::size_t q = 0; q < f; ++q)
        if (mask & (1u << q)) J.push_back(fixed[q]);
      subsets.push_back(J);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();  // omega (J = Delta^mu) first
      return a < b;
    });
    for (const auto& J : subsets) out.push_back(canonical_involution(rs, InvolutionKind::omega, mu, J));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization to canonical form

/// Positive rational square root, if it exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

/// Rational a, b with a^2 + b^2 = q, found by searching integer
/// representations of num*den. nullopt when none exists.
inline std::optional<GR> sum_of_two_squares(const Rational& q) {
  if (sgn(q) <= 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class target = num * den;  // a^2 + b^2 = num/den  <=>  (a den)^2 + (b den)^2 = num den
  // largest real part first, so real solutions are preferred
  for (mpz_class x = sqrt(target); x >= 0; --x) {
    mpz_class rest = target - x * x;
    mpz_class y = sqrt(rest);
    if (y * y == rest) {
      Rational a(x, den), b(y, den);
      a.canonicalize();
      b.canonicalize();
      return GR(a, b);
    }
  }
  return std::nullopt;
}

struct NormalizedInvolution {
  bool solved = false;
  InvolutionKind kind = InvolutionKind::general;
  DiagramAutomorphism mu;
  std::vector<std::size_t> J;
  std::vector<GR> d;          // one scalar per simple root; x~_a = d_a x_a, x~_{-a} = x_{-a} / d_a
  std::vector<GR> c;          // sigma(x_a) = c_a x_{sigma* a}
  std::string certificate;    // the unsolved condition when solved = false
};

/// The Cartan-preserving automorphism x_beta -> prod d_i^{beta_i} x_beta.
inline GMatrix rescaling_matrix(const RootSystem& rs, const std::vector<GR>& d) {
  std::size_t n = rs.dim();
  GMatrix m = GMatrix::identity(n);
  for (std::size_t k = 0; k < rs.num_roots(); ++k) {
    GR f(1);
    const auto& c = rs.root(k);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      for (int e = 0; e < c[i]; ++e) f *= d[i];
      for (int e = 0; e > c[i]; --e) f /= d[i];
    }
    m(rs.root_vector_index(k), rs.root_vector_index(k)) = f;
  }
  return m;
}

/// phi^{-1} sigma phi for the rescaling phi given by d; equals the canonical
/// involution when d comes from normalize_involution.
inline Involution conjugate_by_rescaling(const RootSystem& rs, const Involution& sigma, const std::vector<GR>& d) {
  GMatrix phi = rescaling_matrix(rs, d);
  std::vector<GR> dinv;
  for (const auto& x : d) dinv.push_back(GR(1) / x);
  GMatrix phi_inv = rescaling_matrix(rs, dinv);
  Involution p{phi, false, InvolutionKind::general, DiagramAutomorphism::identity(0), {}};
  Involution pi{phi_inv, false, InvolutionKind::general, DiagramAutomorphism::identity(0), {}};
  return compose(pi, compose(sigma, p));
}

/// Brings a Cartan-preserving involution with sigma*(Delta) = +-Delta to the
/// form varsigma_mu or omega_{mu,J} by rescaling the simple root vectors.
inline NormalizedInvolution normalize_involution(const RootSystem& rs, const Involution& sigma) {
  std::size_t r = rs.rank(), n = rs.dim();
  if (!sigma.semilinear || sigma.dim() != n) throw std::invalid_argument("normalize_involution: expected a semilinear map on g");
  const auto& m = sigma.linear_part;
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t row = r; row < n; ++row)
      if (!m(row, c).is_zero()) throw std::invalid_argument("normalize_involution: sigma does not preserve h");

  auto image_of_root_vector = [&](std::size_t root) -> std::pair<std::size_t, GR> {
    std::size_t col = rs.root_vector_index(root);
    std::size_t found = RootSystem::npos;
    GR value;
    for (std::size_t row = 0; row < n; ++row) {
      if (m(row, col).is_zero()) continue;
      if (found != RootSystem::npos || rs.is_cartan_index(row))
        throw std::invalid_argument("normalize_involution: sigma does not map root spaces to root spaces");
      found = rs.root_of_basis(row);
      value = m(row, col);
    }
    if (found == RootSystem::npos) throw std::invalid_argument("normalize_involution: sigma is singular");
    return {found, value};
  };

  NormalizedInvolution out;
  std::vector<std::size_t> star(r);
  std::vector<GR> cpos(r), cneg(r);
  bool all_pos = true, all_neg = true;
  for (std::size_t i = 0; i < r; ++i) {
    auto [img, c] = image_of_root_vector(i);
    auto [nimg, cn] = image_of_root_vector(rs.negative(i));
    star[i] = img;
    cpos[i] = c;
    cneg[i] = cn;
    all_pos = all_pos && img < r;
    all_neg = all_neg && rs.negative(img) < r && !rs.is_positive(img);
  }
  if (!all_pos && !all_neg) throw std::invalid_argument("normalize_involution: sigma*(Delta) is neither Delta nor -Delta");
  out.mu = DiagramAutomorphism::identity(r);
  for (std::size_t i = 0; i < r; ++i) out.mu.perm[i] = all_pos ? star[i] : rs.negative(star[i]);
  if (!preserves_diagram(rs, out.mu) || out.mu.order() > 2)
    throw std::invalid_argument("normalize_involution: induced permutation is not a diagram involution");
  out.kind = all_pos ? InvolutionKind::varsigma : InvolutionKind::omega;
  out.c = cpos;
  out.d.assign(r, GR(1));
  out.solved = true;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t j = out.mu(i);
    if (j < i) continue;
    const GR& c = cpos[i];
    if (out.kind == InvolutionKind::varsigma) {
      // c_a = d_{mu a} / conj(d_a)
      if (j != i) {
        out.d[j] = c;
      } else {
        out.d[i] = c == GR(-1) ? GR::i() : GR(1) + c;
      }
    } else {
      // c_a = 1 / (conj(d_a) d_{mu a})
      if (j != i) {
        out.d[j] = GR(1) / c;
      } else {
        if (!c.is_real()) throw std::invalid_argument("normalize_involution: c_a not real on a fixed root");
        if (sgn(c.re()) < 0) out.J.push_back(i);
        Rational target = 1 / abs(c.re());  // |d|^2
        auto d = sum_of_two_squares(target);
        if (!d) {
          out.solved = false;
          out.certificate += "alpha_" + std::to_string(i + 1) + ": |d|^2 = " + target.get_str() +
                             " has no solution in Q(i); ";
        } else {
          out.d[i] = *d;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Real form g^sigma

/// Coordinates (re_0..re_{n-1}, im_0..im_{n-1}).
inline std::vector<Rational> realify(const Vector& v) {
  std::size_t n = v.size();
  std::vector<Rational> out(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = v[k].re();
    out[n + k] = v[k].im();
  }
  return out;
}

inline Vector complexify(const std::vector<Rational>& v) {
  std::size_t n = v.size() / 2;
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = GR(v[k], v[n + k]);
  return out;
}

/// Incremental echelon basis over Q; reports whether a vector is new.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v if independent of the stored vectors; returns true when added.
  bool add(std::vector<Rational> v) {
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.emplace(p, std::move(v));
    return true;
  }
  bool contains(std::vector<Rational> v) const {
    reduce(v);
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(std::vector<Rational>& v) const {
    for (const auto& [p, row] : rows_) {
      if (sgn(v[p]) == 0) continue;
      Rational f = v[p];
      for (std::size_t k = p; k < dim_; ++k)
        if (sgn(row[k]) != 0) v[k] -= f * row[k];
    }
  }
  std::size_t dim_;
  std::map<std::size_t, std::vector<Rational>> rows_;
};

struct RealFormBasis {
  std::vector<Vector> vectors;          // sigma-fixed, real-independent; first cartan_count span h_0
  std::size_t cartan_count = 0;
  StructureConstants real_structure;    // real structure constants (empty unless requested)
  bool has_structure = false;

  std::size_t dim() const { return vectors.size(); }
};

/// Real coordinates of a sigma-fixed vector in a real basis of g^sigma.
class RealCoordinates {
 public:
  explicit RealCoordinates(const std::vector<Vector>& basis) : basis_(basis) {
    std::size_t m = basis.size();
    if (m == 0) return;
    std::size_t rows = 2 * basis.front().size();
    QMatrix b(rows, m);
    for (std::size_t c = 0; c < m; ++c) {
      auto rv = realify(basis[c]);
      for (std::size_t r = 0; r < rows; ++r) b(r, c) = rv[r];
    }
    QMatrix bt = b.transpose();
    auto piv = rref(bt);  // pivots of B^T are independent rows of B
    if (piv.size() != m) throw std::invalid_argument("RealCoordinates: basis is not independent");
    rows_ = piv;
    QMatrix s(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < m; ++c) s(i, c) = b(rows_[i], c);
    auto inv = inverse(s);
    if (!inv) throw std::logic_error("RealCoordinates: singular selection");
    inv_ = *inv;
  }

  /// Real coordinates, or nullopt if v is not in the real span.
  std::optional<std::vector<Rational>> coordinates(const Vector& v) const {
    std::size_t m = basis_.size();
    auto rv = realify(v);
    std::vector<Rational> sel(m), x(m);
    for (std::size_t i = 0; i < m; ++i) sel[i] = rv[rows_[i]];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(inv_(i, j)) != 0 && sgn(sel[j]) != 0) x[i] += inv_(i, j) * sel[j];
    Vector back(v.size());
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(x[i]) != 0) back = back + GR(x[i]) * basis_[i];
    if (back != v) return std::nullopt;
    return x;
  }

 private:
  std::vector<Vector> basis_;
  std::vector<std::size_t> rows_;
  QMatrix inv_;
};

namespace detail {
/// Scales v by a positive rational so that its first nonzero entry has a
/// real or imaginary part equal to +-1.
inline Vector tidy(Vector v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    Rational s = sgn(x.re()) != 0 ? abs(x.re()) : abs(x.im());
    Rational inv = 1 / s;
    for (auto& y : v) y *= GR(inv);
    break;
  }
  return v;
}
}  // namespace detail

/// Real basis of g^sigma built from v + sigma(v) and iv + sigma(iv) over the
/// structure basis, Cartan part first.
inline RealFormBasis fixed_point_basis(const RootSystem& rs, const Involution& sigma, bool with_structure = true) {
  if (!sigma.semilinear) throw std::invalid_argument("fixed_point_basis: sigma must be semilinear");
  std::size_t n = rs.dim();
  RealFormBasis out;
  EchelonBasis ech(2 * n);
  auto consider = [&](std::size_t k) {
    for (int part = 0; part < 2; ++part) {
      Vector v = basis_vector(n, k, part == 0 ? GR(1) : GR::i());
      Vector f = detail::tidy(v + sigma.apply(v));
      if (is_zero(f)) continue;
      if (ech.add(realify(f))) out.vectors.push_back(f);
    }
  };
  for (std::size_t k = 0; k < rs.rank(); ++k) consider(k);
  out.cartan_count = out.vectors.size();
  for (std::size_t k = rs.rank(); k < n; ++k) consider(k);
  if (out.vectors.size() != n || out.cartan_count != rs.rank())
    throw std::logic_error("fixed_point_basis: wrong real dimension; sigma is not an involution preserving h");
  if (with_structure) {
    RealCoordinates coords(out.vectors);
    out.real_structure = StructureConstants(n);
    const auto& sc = rs.structure();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        Vector br = sc.bracket(out.vectors[a], out.vectors[b]);
        auto x = coords.coordinates(br);
        if (!x) throw std::logic_error("fixed_point_basis: bracket leaves the real form");
        std::vector<StructureConstants::Term> terms;
        for (std::size_t k = 0; k < n; ++k)
          if (sgn((*x)[k]) != 0) terms.push_back({k, (*x)[k]});
        out.real_structure.set(a, b, std::move(terms));
      }
    out.has_structure = true;
  }
  return out;
}

/// Coordinates of a tensor of g (x) g in the real basis: X = sum c_ab v_a (x) v_b.
/// nullopt when X is not in g^sigma (x) g^sigma.
inline std::optional<QMatrix> real_tensor_coordinates(const RealFormBasis& basis, const Tensor2& x) {
  std::size_t n = basis.dim();
  // X = V C V^T with V the matrix of basis vectors
  GMatrix v(n, n);
  for (std::size_t a = 0; a < n; ++a) v.set_column(a, basis.vectors[a]);
  auto vinv = inverse(v);
  if (!vinv) return std::nullopt;
  GMatrix c = *vinv * x.as_matrix() * vinv->transpose();
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!c(i, j).is_real()) return std::nullopt;
      out(i, j) = c(i, j).re();
    }
  return out;
}

}  // namespace liebialg
