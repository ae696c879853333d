#pragma once

// Continuous parameters: lambda in h (x) h with lambda + lambda^21 = Omega_0 and
// (T(alpha) (x) 1) lambda + (1 (x) alpha) lambda = 0 for alpha in Gamma_1, and
// the reality conditions cutting out the parameters of a real form.

#include "liebialg/bdtriple.hpp"
#include "liebialg/involution.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace liebialg {

/// lambda = sum lambda(i, j) h_i (x) h_j in the simple-coroot basis.
struct ContinuousParameter {
  GMatrix lambda;

  /// Coefficients l_{ab} of lambda - lambda^21 = sum_{a,b} l_{ab} h_a ^ h_b
  /// (sum over ordered pairs, l antisymmetric): l = (lambda - lambda^T) / 2.
  GMatrix antisymmetric_part() const {
    return (lambda - lambda.transpose()).scaled(GR(Rational(1, 2)));
  }
  friend bool operator==(const ContinuousParameter&, const ContinuousParameter&) = default;
};

enum class RealityKind { complex, real, conjugate_mu, imaginary, anti_conjugate_mu };

inline const char* to_string(RealityKind k) {
  switch (k) {
    case RealityKind::complex: return "complex";
    case RealityKind::real: return "real";
    case RealityKind::conjugate_mu: return "conjugate-mu";
    case RealityKind::imaginary: return "imaginary";
    case RealityKind::anti_conjugate_mu: return "anti-conjugate-mu";
  }
  return "?";
}

/// Row of the classification an involution belongs to.
inline RealityKind reality_kind_of(const Involution& sigma) {
  if (sigma.kind == InvolutionKind::varsigma)
    return sigma.mu.is_identity() ? RealityKind::real : RealityKind::conjugate_mu;
  if (sigma.kind == InvolutionKind::omega)
    return sigma.mu.is_identity() ? RealityKind::imaginary : RealityKind::anti_conjugate_mu;
  throw std::invalid_argument("reality_kind_of: sigma must be canonical");
}

/// Affine family base_point + sum c_k directions[k]; coefficients are complex
/// for kind complex and real otherwise.
struct ParameterSpace {
  BDTriple bd;
  ContinuousParameter base_point;
  std::vector<GMatrix> directions;  // antisymmetric
  RealityKind reality_kind = RealityKind::complex;
  DiagramAutomorphism mu;

  std::size_t dimension() const { return directions.size(); }
  bool real_coefficients() const { return reality_kind != RealityKind::complex; }

  ContinuousParameter point(const std::vector<GR>& coeffs) const {
    if (coeffs.size() != directions.size()) throw std::invalid_argument("ParameterSpace::point: wrong number of coefficients");
    ContinuousParameter p = base_point;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (real_coefficients() && !coeffs[k].is_real())
        throw std::invalid_argument("ParameterSpace::point: coefficients must be real");
      if (!coeffs[k].is_zero()) p.lambda = p.lambda + directions[k].scaled(coeffs[k]);
    }
    return p;
  }
};

/// Omega_0 as a matrix in the h_i basis: the inverse of the Killing Gram matrix on h.
inline GMatrix omega0_matrix(const RootSystem& rs) {
  std::size_t r = rs.rank();
  GMatrix k(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) k(i, j) = GR(rs.killing_h()(i, j));
  auto inv = inverse(k);
  if (!inv) throw std::logic_error("omega0_matrix: singular Killing form on h");
  return *inv;
}

/// The Tensor2 on g with Cartan block m.
inline Tensor2 cartan_tensor(const RootSystem& rs, const GMatrix& m) {
  Tensor2 t(rs.dim());
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (!m(i, j).is_zero()) t(i, j) = m(i, j);
  return t;
}

namespace detail {
/// beta(h_i) for a simple root index beta.
inline Rational simple_on_coroot(const RootSystem& rs, std::size_t beta, std::size_t i) { return rs.killing_h()(beta, i); }
}  // namespace detail

/// Components of (T(alpha) (x) 1) lambda + (1 (x) alpha) lambda in the h_j basis,
/// concatenated over alpha in Gamma_1 (sorted).
inline std::vector<GR> lambda_residual(const RootSystem& rs, const BDTriple& bd, const GMatrix& lambda) {
  std::size_t r = rs.rank();
  std::vector<GR> out;
  for (auto [a, ta] : bd.tau) {
    for (std::size_t k = 0; k < r; ++k) {
      GR s;
      for (std::size_t i = 0; i < r; ++i) {
        if (!lambda(i, k).is_zero()) s += GR(detail::simple_on_coroot(rs, ta, i)) * lambda(i, k);
        if (!lambda(k, i).is_zero()) s += lambda(k, i) * GR(detail::simple_on_coroot(rs, a, i));
      }
      out.push_back(s);
    }
  }
  return out;
}

/// Both defining equations: lambda + lambda^21 = Omega_0 and the Gamma_1 equations.
inline bool is_continuous_parameter(const RootSystem& rs, const BDTriple& bd, const ContinuousParameter& p) {
  if (p.lambda.rows() != rs.rank() || p.lambda.cols() != rs.rank()) return false;
  if (!(p.lambda + p.lambda.transpose() == omega0_matrix(rs))) return false;
  for (const auto& x : lambda_residual(rs, bd, p.lambda))
    if (!x.is_zero()) return false;
  return true;
}

namespace detail {
/// Antisymmetric matrix with unit entry at (i, j), i < j.
inline GMatrix elementary_wedge(std::size_t r, std::size_t i, std::size_t j) {
  GMatrix m(r, r);
  m(i, j) = GR(1);
  m(j, i) = GR(-1);
  return m;
}
}  // namespace detail

/// lambda = Omega_0 / 2 + A with A antisymmetric, A solving the Gamma_1
/// equations; exact over Q(i).
inline ParameterSpace solve_parameters(const RootSystem& rs, const BDTriple& bd) {
  if (!is_valid_bd_triple(rs, bd)) throw std::invalid_argument("solve_parameters: invalid BD triple");
  std::size_t r = rs.rank();
  GMatrix half_omega = omega0_matrix(rs).scaled(GR(Rational(1, 2)));
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) unknowns.emplace_back(i, j);

  std::vector<GR> rhs = lambda_residual(rs, bd, half_omega);
  GMatrix sys(rhs.size(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    auto col = lambda_residual(rs, bd, detail::elementary_wedge(r, unknowns[u].first, unknowns[u].second));
    sys.set_column(u, col);
  }
  for (auto& x : rhs) x = -x;

  ParameterSpace ps;
  ps.bd = bd;
  ps.mu = DiagramAutomorphism::identity(r);
  ps.reality_kind = RealityKind::complex;
  auto sol = solve(sys, rhs);
  if (!sol) throw std::logic_error("solve_parameters: inconsistent system for a valid BD triple");
  GMatrix lambda = half_omega;
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (!(*sol)[u].is_zero())
      lambda = lambda + detail::elementary_wedge(r, unknowns[u].first, unknowns[u].second).scaled((*sol)[u]);
  ps.base_point.lambda = lambda;
  for (const auto& v : nullspace(sys)) {
    GMatrix d(r, r);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (!v[u].is_zero()) d = d + detail::elementary_wedge(r, unknowns[u].first, unknowns[u].second).scaled(v[u]);
    ps.directions.push_back(d);
  }
  return ps;
}

// ---------------------------------------------------------------------------
// Reality

namespace detail {
/// (mu . m)(i, j) = m(mu i, mu j).
inline GMatrix permuted(const GMatrix& m, const DiagramAutomorphism& mu) {
  GMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(mu(i), mu(j));
  return out;
}
inline GMatrix conj(const GMatrix& m) {
  GMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conj();
  return out;
}

/// Twist l -> eps * conj(l(mu., mu.)) whose fixed points are the admissible l.
struct RealityTwist {
  DiagramAutomorphism mu;
  GR eps;
  GMatrix operator()(const GMatrix& m) const { return conj(permuted(m, mu)).scaled(eps); }
};

inline RealityTwist twist_for(RealityKind kind, const DiagramAutomorphism& mu) {
  std::size_t r = mu.perm.size();
  switch (kind) {
    case RealityKind::real: return {DiagramAutomorphism::identity(r), GR(1)};
    case RealityKind::conjugate_mu: return {mu, GR(1)};
    case RealityKind::imaginary: return {DiagramAutomorphism::identity(r), GR(-1)};
    case RealityKind::anti_conjugate_mu: return {mu, GR(-1)};
    case RealityKind::complex: break;
  }
  throw std::invalid_argument("reality twist: kind must not be complex");
}

inline bool bd_admissible(RealityKind kind, const BDTriple& bd, const DiagramAutomorphism& mu) {
  switch (kind) {
    case RealityKind::real: return true;
    case RealityKind::conjugate_mu: return is_mu_stable(bd, mu);
    case RealityKind::imaginary: return bd.gamma1.empty() && bd.gamma2.empty();
    case RealityKind::anti_conjugate_mu: return is_mu_antistable(bd, mu);
    case RealityKind::complex: return true;
  }
  return false;
}

inline bool t_admissible(RealityKind kind, const GR& t) {
  if (kind == RealityKind::real || kind == RealityKind::conjugate_mu) return t.is_real();
  if (kind == RealityKind::imaginary || kind == RealityKind::anti_conjugate_mu) return t.is_imaginary();
  return true;
}
}  // namespace detail

/// Conditions on (t, lambda, BD triple) under which r_0 lies in Lambda^2(g_0).
inline bool satisfies_reality(RealityKind kind, const DiagramAutomorphism& mu, const BDTriple& bd,
                              const ContinuousParameter& p, const GR& t) {
  if (kind == RealityKind::complex) return true;
  if (!detail::bd_admissible(kind, bd, mu) || !detail::t_admissible(kind, t)) return false;
  GMatrix l = p.antisymmetric_part();
  return l == detail::twist_for(kind, mu)(l);
}

inline bool satisfies_reality(const Involution& sigma, const BDTriple& bd, const ContinuousParameter& p, const GR& t) {
  return satisfies_reality(reality_kind_of(sigma), sigma.mu, bd, p, t);
}

/// chi_J(T a) = chi_J(a) for every a in Gamma_1. For sigma = omega_{mu,J} the
/// image of x_-a ^ x_{Ta} under sigma (x) sigma carries (-1)^{chi_J(a) + chi_J(Ta)},
/// so this parity is needed on top of the conditions above for r_0 to be fixed.
inline bool j_parity_compatible(const BDTriple& bd, const std::vector<std::size_t>& J) {
  auto in_j = [&](std::size_t a) { return std::find(J.begin(), J.end(), a) != J.end(); };
  for (auto [a, ta] : bd.tau)
    if (in_j(a) != in_j(ta)) return false;
  return true;
}

/// satisfies_reality plus the J-parity condition for omega_{mu,J}; equivalent
/// to (sigma (x) sigma) r_0 = r_0.
inline bool satisfies_reality_refined(const Involution& sigma, const BDTriple& bd, const ContinuousParameter& p,
                                      const GR& t) {
  if (!satisfies_reality(sigma, bd, p, t)) return false;
  return reality_kind_of(sigma) != RealityKind::anti_conjugate_mu || j_parity_compatible(bd, sigma.J);
}

/// Human-readable reason why no datum exists for (kind, bd), or empty.
inline std::string reality_obstruction(RealityKind kind, const BDTriple& bd, const DiagramAutomorphism& mu) {
  if (detail::bd_admissible(kind, bd, mu)) return {};
  switch (kind) {
    case RealityKind::conjugate_mu: return "BD triple is not mu-stable";
    case RealityKind::imaginary: return "BD triple must be empty (Gamma_1 = Gamma_2 = {})";
    case RealityKind::anti_conjugate_mu: return "BD triple is not mu-antistable";
    default: return "inadmissible BD triple";
  }
}

/// Real-affine subspace of ps satisfying the reality condition of `kind`.
/// Writes each complex coefficient as x + iy and solves the fixed-point
/// equation of the twist as a real linear system.
inline ParameterSpace apply_reality(const ParameterSpace& ps, RealityKind kind, const DiagramAutomorphism& mu) {
  if (ps.reality_kind != RealityKind::complex) throw std::invalid_argument("apply_reality: parameter space already real");
  if (kind == RealityKind::complex) return ps;
  if (auto why = reality_obstruction(kind, ps.bd, mu); !why.empty()) throw std::domain_error("apply_reality: " + why);
  auto twist = detail::twist_for(kind, mu);
  std::size_t r = ps.base_point.lambda.rows(), m = ps.directions.size();

  // residual map l -> l - twist(l) on antisymmetric parts, split into real equations
  auto residual = [&](const GMatrix& l) { return l - twist(l); };
  auto flatten = [&](const GMatrix& g) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        v.push_back(g(i, j).re());
        v.push_back(g(i, j).im());
      }
    return v;
  };
  std::size_t rows = r * (r - 1);
  QMatrix sys(rows, 2 * m);
  std::vector<GMatrix> gens;  // real generators: d_k, i d_k
  for (std::size_t k = 0; k < m; ++k) {
    gens.push_back(ps.directions[k]);
    gens.push_back(ps.directions[k].scaled(GR::i()));
  }
  for (std::size_t c = 0; c < gens.size(); ++c) {
    auto col = flatten(residual(gens[c]));
    for (std::size_t row = 0; row < rows; ++row) sys(row, c) = col[row];
  }
  auto rhs = flatten(residual(ps.base_point.antisymmetric_part()));
  for (auto& x : rhs) x = -x;

  auto sol = solve(sys, rhs);
  if (!sol) throw std::domain_error("apply_reality: no parameter satisfies the reality condition");
  ParameterSpace out;
  out.bd = ps.bd;
  out.mu = mu;
  out.reality_kind = kind;
  out.base_point = ps.base_point;
  for (std::size_t c = 0; c < gens.size(); ++c)
    if (sgn((*sol)[c]) != 0) out.base_point.lambda = out.base_point.lambda + gens[c].scaled(GR((*sol)[c]));
  for (const auto& v : nullspace(sys)) {
    GMatrix d(r, r);
    for (std::size_t c = 0; c < gens.size(); ++c)
      if (sgn(v[c]) != 0) d = d + gens[c].scaled(GR(v[c]));
    out.directions.push_back(d);  // d_k, i d_k are R-independent, so d != 0
  }
  return out;
}

/// As above, additionally rejecting omega_{mu,J} whose J breaks the parity
/// along T (no fixed r_0 exists then).
inline ParameterSpace apply_reality(const ParameterSpace& ps, const Involution& sigma) {
  auto kind = reality_kind_of(sigma);
  if (kind == RealityKind::anti_conjugate_mu && detail::bd_admissible(kind, ps.bd, sigma.mu) &&
      !j_parity_compatible(ps.bd, sigma.J))
    throw std::domain_error("apply_reality: chi_J(T a) != chi_J(a) for some a in Gamma_1");
  return apply_reality(ps, kind, sigma.mu);
}

}  // namespace liebialg
