#pragma once

// Manin triples of almost-factorizable real bialgebras. Factorizable case
// (sigma = varsigma_mu, t real): (l + l, diag l, l^r) with
// <(x,u)|(y,v)> = (x|y) - (u|v). Imaginary case (sigma = omega_{mu,J}, t
// imaginary): (l^R, l_0, r_+(l_0^*)) with the form 2 Re( | ). Here (|) is the
// form induced by r + r^21 = t Omega, i.e. (x|y) = kappa(x, y) / t.

#include "liebialg/rmatrix.hpp"

#include <stdexcept>
#include <vector>

namespace liebialg {

enum class ManinCase { factorizable, imaginary_factorizable };

inline const char* to_string(ManinCase c) {
  return c == ManinCase::factorizable ? "factorizable" : "imaginary_factorizable";
}

struct ManinTriple {
  ManinCase kind = ManinCase::factorizable;
  std::size_t double_dim = 0;
  StructureConstants bracket;  // real structure constants of the double
  QMatrix pairing;
  QMatrix sub1;                // columns span sub1
  QMatrix sub2;                // columns span sub2
};

/// r_+(mu) = (mu (x) id) r, r_-(mu) = -(id (x) mu) r, I = r_+ - r_-, as
/// matrices acting on coordinate vectors of l^* in the dual basis.
struct FactorizationMaps {
  GMatrix r_plus, r_minus, I;
};

inline FactorizationMaps factorization_maps(const Tensor2& r) {
  GMatrix m = r.as_matrix();
  FactorizationMaps f;
  f.r_plus = m.transpose();
  f.r_minus = m.scaled(GR(-1));
  f.I = f.r_plus - f.r_minus;
  return f;
}

/// (I mu | I tau) = <tau, I mu> for all dual basis vectors, with (x|y) = kappa(x,y)/t.
inline bool factorization_form_identity(const RootSystem& rs, const FactorizationMaps& f, const GR& t) {
  GMatrix lhs = f.I.transpose() * rs.killing_matrix() * f.I;
  GMatrix rhs = f.I.transpose().scaled(t);
  return lhs == rhs;
}

/// Structure constants of l^* dual to delta(x) = [x (x) 1 + 1 (x) x, r]:
/// [e^a, e^b]_* = sum_c delta(x_c)^{ab} e^c.
inline StructureConstants dual_bracket(const RootSystem& rs, const Tensor2& r) {
  std::size_t n = rs.dim();
  std::vector<Tensor2> delta;
  for (std::size_t c = 0; c < n; ++c) delta.push_back(ad_tensor(basis_vector(n, c), r, rs.structure()));
  // coefficients may be Gaussian; split into real structure constants only when real
  StructureConstants out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<StructureConstants::Term> terms;
      for (std::size_t c = 0; c < n; ++c) {
        const GR& v = delta[c](a, b);
        if (v.is_zero()) continue;
        if (!v.is_real()) throw std::domain_error("dual_bracket: cobracket not rational in this basis");
        terms.push_back({c, v.re()});
      }
      out.set(a, b, std::move(terms));
    }
  return out;
}

/// m [u, v]_src = [m u, m v]_dst on all basis pairs.
inline bool is_lie_map(const GMatrix& m, const StructureConstants& src, const StructureConstants& dst) {
  std::size_t n = src.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector lhs = m * src.bracket(basis_vector(n, a), basis_vector(n, b));
      Vector rhs = dst.bracket(m.column(a), m.column(b));
      if (lhs != rhs) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

namespace detail {
inline QMatrix real_part(const GMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).re();
  return out;
}
inline QMatrix imag_part(const GMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).im();
  return out;
}
inline GMatrix to_gaussian(const QMatrix& m) {
  GMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = GR(m(i, j));
  return out;
}
inline bool is_real_matrix(const GMatrix& m) {
  for (const auto& x : m.data())
    if (!x.is_real()) return false;
  return true;
}

/// Real form l_0 in a basis v_a: Gram matrix of kappa, coordinates of r.
struct RealFormData {
  RealFormBasis basis;
  GMatrix v;      // columns v_a in structure coordinates
  QMatrix kappa;  // kappa(v_a, v_b)
  GMatrix r;      // r = sum r_ab v_a (x) v_b
  GMatrix r0;
};

inline RealFormData real_form_data(const RootSystem& rs, const BialgebraDatum& d) {
  RealFormData out;
  out.basis = fixed_point_basis(rs, d.sigma, true);
  std::size_t n = rs.dim();
  out.v = GMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) out.v.set_column(a, out.basis.vectors[a]);
  GMatrix k = out.v.transpose() * rs.killing_matrix() * out.v;
  if (!is_real_matrix(k)) throw std::logic_error("real_form_data: Killing form not real on g_0");
  out.kappa = real_part(k);
  auto vinv = inverse(out.v);
  if (!vinv) throw std::logic_error("real_form_data: singular real basis");
  out.r = *vinv * d.r.as_matrix() * vinv->transpose();
  out.r0 = *vinv * d.r0.as_matrix() * vinv->transpose();
  return out;
}

inline void copy_terms(StructureConstants& dst, std::size_t a, std::size_t b, const std::vector<StructureConstants::Term>& src,
                       std::size_t shift, const Rational& scale) {
  std::vector<StructureConstants::Term> terms;
  for (const auto& t : src) terms.push_back({t.index + shift, t.coeff * scale});
  dst.set(a, b, std::move(terms));
}
}  // namespace detail

/// (g_0 + g_0, diag g_0, {(r_+ mu, r_- mu)}) for sigma = varsigma_mu and t > 0.
inline ManinTriple double_factorizable(const RootSystem& rs, const BialgebraDatum& d) {
  if (d.sigma.kind != InvolutionKind::varsigma || d.t_class != TClass::real_positive)
    throw std::domain_error("double_factorizable: datum is not factorizable (needs varsigma_mu and real t)");
  auto rf = detail::real_form_data(rs, d);
  if (!detail::is_real_matrix(rf.r)) throw std::logic_error("double_factorizable: r not real on g_0");
  std::size_t n = rs.dim();
  Rational t = d.t_value.re();
  ManinTriple m;
  m.kind = ManinCase::factorizable;
  m.double_dim = 2 * n;
  m.bracket = StructureConstants(2 * n);
  const auto& sc = rf.basis.real_structure;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      detail::copy_terms(m.bracket, a, b, sc.bracket(a, b), 0, Rational(1));
      detail::copy_terms(m.bracket, n + a, n + b, sc.bracket(a, b), n, Rational(1));
    }
  m.pairing = QMatrix(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      m.pairing(a, b) = rf.kappa(a, b) / t;
      m.pairing(n + a, n + b) = -rf.kappa(a, b) / t;
    }
  QMatrix r = detail::real_part(rf.r);
  m.sub1 = QMatrix(2 * n, n);
  m.sub2 = QMatrix(2 * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    m.sub1(a, a) = 1;
    m.sub1(n + a, a) = 1;
    for (std::size_t b = 0; b < n; ++b) {
      m.sub2(b, a) = r(a, b);       // r_+(v^a) = sum_b r_ab v_b
      m.sub2(n + b, a) = -r(b, a);  // r_-(v^a) = -sum_b r_ba v_b
    }
  }
  return m;
}

/// (g^R, g_0, r_+(g_0^*)) for sigma = omega_{mu,J} and t in iR_{>0}. Basis of
/// g^R: v_a then v_a' = i v_a.
inline ManinTriple double_imaginary(const RootSystem& rs, const BialgebraDatum& d) {
  if (d.sigma.kind != InvolutionKind::omega || d.t_class != TClass::imaginary_positive)
    throw std::domain_error("double_imaginary: datum is not imaginary factorizable (needs omega_{mu,J} and imaginary t)");
  auto rf = detail::real_form_data(rs, d);
  std::size_t n = rs.dim();
  Rational tau = d.t_value.im();
  ManinTriple m;
  m.kind = ManinCase::imaginary_factorizable;
  m.double_dim = 2 * n;
  m.bracket = StructureConstants(2 * n);
  const auto& sc = rf.basis.real_structure;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& terms = sc.bracket(a, b);
      detail::copy_terms(m.bracket, a, b, terms, 0, Rational(1));           // [x, y]
      detail::copy_terms(m.bracket, a, n + b, terms, n, Rational(1));       // [x, y'] = [x, y]'
      detail::copy_terms(m.bracket, n + a, b, terms, n, Rational(1));       // [x', y] = [x, y]'
      detail::copy_terms(m.bracket, n + a, n + b, terms, 0, Rational(-1));  // [x', y'] = -[x, y]
    }
  // 2 Re(kappa(u, v) / (i tau)): only the mixed blocks survive
  m.pairing = QMatrix(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Rational v = 2 * rf.kappa(a, b) / tau;
      m.pairing(a, n + b) = v;
      m.pairing(n + a, b) = v;
    }
  m.sub1 = QMatrix(2 * n, n);
  m.sub2 = QMatrix(2 * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    m.sub1(a, a) = 1;
    for (std::size_t b = 0; b < n; ++b) {  // r_+(v^a) = sum_b r_ab v_b realified
      m.sub2(b, a) = rf.r(a, b).re();
      m.sub2(n + b, a) = rf.r(a, b).im();
    }
  }
  return m;
}

inline ManinTriple manin_triple(const RootSystem& rs, const BialgebraDatum& d) {
  return d.sigma.kind == InvolutionKind::varsigma ? double_factorizable(rs, d) : double_imaginary(rs, d);
}

// ---------------------------------------------------------------------------
// Verification

struct ManinReport {
  bool nondegenerate = false;
  bool invariant = false;
  bool sub1_isotropic = false;
  bool sub2_isotropic = false;
  bool sub1_subalgebra = false;
  bool sub2_subalgebra = false;
  bool half_dimensions = false;
  bool complementary = false;
  bool cobracket_matches = false;  // induced cobracket on sub1 equals [x (x) 1 + 1 (x) x, r_0]
  bool all() const {
    return nondegenerate && invariant && sub1_isotropic && sub2_isotropic && sub1_subalgebra && sub2_subalgebra &&
           half_dimensions && complementary && cobracket_matches;
  }
};

namespace detail {
inline QMatrix ad_matrix(const StructureConstants& sc, std::size_t a) {
  QMatrix m(sc.dim(), sc.dim());
  for (std::size_t b = 0; b < sc.dim(); ++b)
    for (const auto& t : sc.bracket(a, b)) m(t.index, b) += t.coeff;
  return m;
}

inline std::vector<Rational> bracket_q(const StructureConstants& sc, const std::vector<Rational>& x,
                                       const std::vector<Rational>& y) {
  std::vector<Rational> out(sc.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational xy = x[i] * y[j];
      for (const auto& t : sc.bracket(i, j)) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

/// Columns of s span a subalgebra.
inline bool spans_subalgebra(const StructureConstants& sc, const QMatrix& s) {
  auto annihilators = nullspace(s.transpose());
  for (std::size_t a = 0; a < s.cols(); ++a)
    for (std::size_t b = a + 1; b < s.cols(); ++b) {
      auto br = bracket_q(sc, s.column(a), s.column(b));
      for (const auto& w : annihilators) {
        Rational dot;
        for (std::size_t k = 0; k < br.size(); ++k) dot += w[k] * br[k];
        if (sgn(dot) != 0) return false;
      }
    }
  return true;
}

inline QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}
}  // namespace detail

/// Cobracket induced on sub1 by the triple, in the sub1 basis:
/// delta(s_c)^{ab} with <delta(s_c), f_i (x) f_j> = <s_c, [f_i, f_j]>.
inline std::vector<QMatrix> induced_cobracket(const ManinTriple& m) {
  std::size_t n = m.sub1.cols();
  QMatrix pairing12 = m.sub1.transpose() * m.pairing * m.sub2;
  auto inv = inverse(pairing12);
  if (!inv) throw std::domain_error("induced_cobracket: sub1 and sub2 are not in duality");
  QMatrix inv_t = inv->transpose();
  std::vector<std::vector<std::vector<Rational>>> brackets(n, std::vector<std::vector<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) brackets[i][j] = detail::bracket_q(m.bracket, m.sub2.column(i), m.sub2.column(j));
  std::vector<QMatrix> out;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> sc = m.sub1.column(c);
    std::vector<Rational> psc(m.double_dim);  // P s_c
    for (std::size_t i = 0; i < m.double_dim; ++i)
      for (std::size_t k = 0; k < m.double_dim; ++k)
        if (sgn(m.pairing(i, k)) != 0 && sgn(sc[k]) != 0) psc[i] += m.pairing(i, k) * sc[k];
    QMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational dot;
        for (std::size_t k = 0; k < m.double_dim; ++k) dot += psc[k] * brackets[i][j][k];
        w(i, j) = dot;
      }
    out.push_back(inv_t * w * *inv);
  }
  return out;
}

/// [v_c (x) 1 + 1 (x) v_c, r_0] in the real basis of g_0.
inline std::vector<QMatrix> cobracket_from_r0(const RootSystem& rs, const BialgebraDatum& d) {
  auto rf = detail::real_form_data(rs, d);
  if (!detail::is_real_matrix(rf.r0)) throw std::logic_error("cobracket_from_r0: r0 not real on g_0");
  QMatrix r0 = detail::real_part(rf.r0);
  std::vector<QMatrix> out;
  for (std::size_t c = 0; c < rs.dim(); ++c) {
    QMatrix ad = detail::ad_matrix(rf.basis.real_structure, c);
    out.push_back(ad * r0 + r0 * ad.transpose());
  }
  return out;
}

inline ManinReport verify_manin(const RootSystem& rs, const BialgebraDatum& d, const ManinTriple& m) {
  ManinReport rep;
  std::size_t dim = m.double_dim, n = dim / 2;
  rep.nondegenerate = determinant(m.pairing) != 0;
  rep.invariant = true;
  for (std::size_t a = 0; a < dim && rep.invariant; ++a) {
    QMatrix ad = detail::ad_matrix(m.bracket, a);
    rep.invariant = (ad.transpose() * m.pairing + m.pairing * ad).is_zero();
  }
  rep.sub1_isotropic = (m.sub1.transpose() * m.pairing * m.sub1).is_zero();
  rep.sub2_isotropic = (m.sub2.transpose() * m.pairing * m.sub2).is_zero();
  rep.sub1_subalgebra = detail::spans_subalgebra(m.bracket, m.sub1);
  rep.sub2_subalgebra = detail::spans_subalgebra(m.bracket, m.sub2);
  rep.half_dimensions = rank(m.sub1) == n && rank(m.sub2) == n;
  rep.complementary = rank(detail::hstack(m.sub1, m.sub2)) == dim;
  if (rep.complementary && rep.half_dimensions) {
    auto induced = induced_cobracket(m);
    auto expected = cobracket_from_r0(rs, d);
    rep.cobracket_matches = induced == expected;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Psi : l + l -> (l^R)^C and Phi = Psi^-1, imaginary case

struct PsiPhi {
  GMatrix psi;  // columns: Psi(v_a, 0), Psi(0, v_a) in the basis v_a, v_a' of (l^R)^C
  GMatrix phi;  // columns: Phi(v_a), Phi(v_a') in the basis (v_a, 0), (0, v_a)
};

/// Psi(x, y) = (x + sigma y)/2 + (i/2)(-x' + (sigma y)'), Phi(u + iv) = (u + iv, sigma(u - iv)),
/// written in a real basis v_a of l_0, where sigma v_a = v_a.
inline PsiPhi psi_phi(std::size_t n) {
  PsiPhi p{GMatrix(2 * n, 2 * n), GMatrix(2 * n, 2 * n)};
  GR half(Rational(1, 2)), ihalf(Rational(0), Rational(1, 2));
  for (std::size_t a = 0; a < n; ++a) {
    p.psi(a, a) = half;           // Psi(v_a, 0) = v_a/2 - (i/2) v_a'
    p.psi(n + a, a) = -ihalf;
    p.psi(a, n + a) = half;       // Psi(0, v_a) = v_a/2 + (i/2) v_a'
    p.psi(n + a, n + a) = ihalf;
    p.phi(a, a) = GR(1);          // Phi(v_a) = (v_a, v_a)
    p.phi(n + a, a) = GR(1);
    p.phi(a, n + a) = GR::i();    // Phi(v_a') = (i v_a, -i v_a)
    p.phi(n + a, n + a) = -GR::i();
  }
  return p;
}

struct PsiPhiReport {
  bool mutually_inverse = false;
  bool psi_is_homomorphism = false;
  bool claim_diag = false;       // Psi(diag l) = l_0 + i l_0
  bool claim_lr = false;         // Psi(l^r) = l_0^r + i l_0^r
  bool claim_pairing = false;    // <Phi u | Phi w> = 2 Re(u | w)
  bool realpart_identity = false;  // 2 Re(u|v) = (u|v) - (sigma u | sigma v)
  bool realification_rules = false;
  bool all() const {
    return mutually_inverse && psi_is_homomorphism && claim_diag && claim_lr && claim_pairing && realpart_identity &&
           realification_rules;
  }
};

namespace detail {
inline bool same_span(const GMatrix& a, const GMatrix& b) {
  GMatrix both(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) both(i, a.cols() + j) = b(i, j);
  }
  std::size_t r = rank(both);
  return rank(a) == r && rank(b) == r;
}
}  // namespace detail

inline PsiPhiReport verify_psi_phi(const RootSystem& rs, const BialgebraDatum& d, const ManinTriple& m) {
  if (m.kind != ManinCase::imaginary_factorizable) throw std::domain_error("verify_psi_phi: imaginary case only");
  PsiPhiReport rep;
  auto rf = detail::real_form_data(rs, d);
  std::size_t n = rs.dim();
  auto pp = psi_phi(n);
  GMatrix id = GMatrix::identity(2 * n);
  rep.mutually_inverse = pp.phi * pp.psi == id && pp.psi * pp.phi == id;

  // l + l with the bracket of l on each summand (real basis v_a of l_0 used over C)
  const auto& sc = rf.basis.real_structure;
  StructureConstants ll(2 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      detail::copy_terms(ll, a, b, sc.bracket(a, b), 0, Rational(1));
      detail::copy_terms(ll, n + a, n + b, sc.bracket(a, b), n, Rational(1));
    }
  rep.psi_is_homomorphism = is_lie_map(pp.psi, ll, m.bracket);

  GMatrix diag(2 * n, n), lr(2 * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    diag(a, a) = GR(1);
    diag(n + a, a) = GR(1);
    for (std::size_t b = 0; b < n; ++b) {
      lr(b, a) = rf.r(a, b);        // r_+(v^a)
      lr(n + b, a) = -rf.r(b, a);   // r_-(v^a)
    }
  }
  rep.claim_diag = detail::same_span(pp.psi * diag, detail::to_gaussian(m.sub1));
  rep.claim_lr = detail::same_span(pp.psi * lr, detail::to_gaussian(m.sub2));

  GMatrix form_ll(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      GR k = GR(rf.kappa(a, b)) / d.t_value;
      form_ll(a, b) = k;
      form_ll(n + a, n + b) = -k;
    }
  rep.claim_pairing = pp.phi.transpose() * form_ll * pp.phi == detail::to_gaussian(m.pairing);

  // realification basis vectors inside l: v_a and i v_a
  std::vector<Vector> vecs;
  for (std::size_t a = 0; a < n; ++a) vecs.push_back(rf.v.column(a));
  for (std::size_t a = 0; a < n; ++a) vecs.push_back(GR::i() * rf.v.column(a));
  rep.realpart_identity = true;
  for (std::size_t a = 0; a < 2 * n && rep.realpart_identity; ++a)
    for (std::size_t b = 0; b < 2 * n; ++b) {
      GR uv = killing_form(rs, vecs[a], vecs[b]) / d.t_value;
      GR su = killing_form(rs, d.sigma.apply(vecs[a]), d.sigma.apply(vecs[b])) / d.t_value;
      if (GR(2 * uv.re()) != uv - su || GR(m.pairing(a, b)) != GR(2 * uv.re())) {
        rep.realpart_identity = false;
        break;
      }
    }

  // x'' = -x, [x, y'] = [x, y]', [x', y'] = -[x, y], sigma(x') = -sigma(x)'
  QMatrix jm(2 * n, 2 * n), sig(2 * n, 2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    jm(n + a, a) = 1;
    jm(a, n + a) = -1;
    sig(a, a) = 1;
    sig(n + a, n + a) = -1;
  }
  bool ok = (jm * jm + QMatrix::identity(2 * n)).is_zero() && (sig * jm + jm * sig).is_zero();
  for (std::size_t a = 0; a < 2 * n && ok; ++a) {
    QMatrix ad = detail::ad_matrix(m.bracket, a);
    std::vector<Rational> ja = jm.column(a);
    QMatrix adj(2 * n, 2 * n);  // ad of J e_a
    for (std::size_t k = 0; k < 2 * n; ++k)
      if (sgn(ja[k]) != 0) adj = adj + detail::ad_matrix(m.bracket, k).scaled(ja[k]);
    ok = adj == jm * ad && (adj * jm + ad).is_zero();
  }
  rep.realification_rules = ok;
  return rep;
}

}  // namespace liebialg
