#pragma once

// Identification of the real form g^sigma for canonical sigma: the Cartan
// involution theta = sigma omega, dimensions of k and p, the split of h_0
// into compact and noncompact parts, painted simple roots, and the name of
// the real form.

#include "liebialg/involution.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liebialg {

struct RealFormReport {
  std::string name;                         // real-form name, or "unnormalized"
  Involution theta;                         // sigma o omega, linear
  int dim_k = 0;
  int dim_p = 0;
  int character = 0;                        // dim_p - dim_k
  int dc = 0;                               // dim t_0
  int dnc = 0;                              // dim a_0
  std::vector<std::size_t> vogan_painted;   // P, noncompact mu-fixed simple roots
  bool maximally_compact = false;
  int imaginary_roots = 0;                  // roots vanishing on a_0
  int real_roots = 0;                       // roots vanishing on t_0
  bool theta_form_definite = false;         // -kappa(x, theta y) > 0 on g_0
  bool name_consistent = false;             // dim_k agrees with the named algebra
};

/// theta = sigma o omega.
inline Involution cartan_involution(const RootSystem& rs, const Involution& sigma) {
  if (!sigma.is_canonical()) throw std::invalid_argument("cartan_involution: sigma must be canonical");
  return compose(sigma, chevalley_involution(rs));
}

// ---------------------------------------------------------------------------
// Names

struct RealFormEntry {
  std::string name;
  int dim_k;
};

/// Every real form of the given type with dim of its maximal compact subalgebra.
inline std::vector<RealFormEntry> real_form_catalog(const SimpleType& t) {
  int n = t.rank;
  std::vector<RealFormEntry> out;
  auto so_pq = [](int p, int q) { return p * (p - 1) / 2 + q * (q - 1) / 2; };
  auto pair = [](const char* f, int p, int q) {
    return std::string(f) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  switch (t.series) {
    case 'A': {
      int N = n + 1;
      out.push_back({"sl(" + std::to_string(N) + ",R)", N * (N - 1) / 2});
      for (int p = 1; p < N; ++p) out.push_back({pair("su", p, N - p), p * p + (N - p) * (N - p) - 1});
      if (N % 2 == 0) out.push_back({"sl(" + std::to_string(N / 2) + ",H)", (N / 2) * (N + 1)});
      out.push_back({"su(" + std::to_string(N) + ")", N * N - 1});
      break;
    }
    case 'B':
      for (int p = 1; p <= 2 * n; ++p) out.push_back({pair("so", p, 2 * n + 1 - p), so_pq(p, 2 * n + 1 - p)});
      out.push_back({"so(" + std::to_string(2 * n + 1) + ")", n * (2 * n + 1)});
      break;
    case 'C':
      out.push_back({"sp(" + std::to_string(n) + ",R)", n * n});
      for (int p = 1; p < n; ++p) out.push_back({pair("sp", p, n - p), p * (2 * p + 1) + (n - p) * (2 * (n - p) + 1)});
      out.push_back({"sp(" + std::to_string(n) + ")", n * (2 * n + 1)});
      break;
    case 'D':
      for (int p = 1; p < 2 * n; ++p) out.push_back({pair("so", p, 2 * n - p), so_pq(p, 2 * n - p)});
      out.push_back({"so*(" + std::to_string(2 * n) + ")", n * n});
      out.push_back({"so(" + std::to_string(2 * n) + ")", n * (2 * n - 1)});
      break;
    case 'E':
      if (n == 6) out = {{"EI", 36}, {"EII", 38}, {"EIII", 46}, {"EIV", 52}, {"e6", 78}};
      if (n == 7) out = {{"EV", 63}, {"EVI", 69}, {"EVII", 79}, {"e7", 133}};
      if (n == 8) out = {{"EVIII", 120}, {"EIX", 136}, {"e8", 248}};
      break;
    case 'F': out = {{"FI", 24}, {"FII", 36}, {"f4", 52}}; break;
    case 'G': out = {{"G", 6}, {"g2", 14}}; break;
  }
  return out;
}

inline std::optional<int> catalog_dim_k(const SimpleType& t, const std::string& name) {
  for (const auto& e : real_form_catalog(t))
    if (e.name == name) return e.dim_k;
  return std::nullopt;
}

inline std::string split_form_name(const SimpleType& t) {
  int n = t.rank;
  switch (t.series) {
    case 'A': return "sl(" + std::to_string(n + 1) + ",R)";
    case 'B': return "so(" + std::to_string(n) + "," + std::to_string(n + 1) + ")";
    case 'C': return "sp(" + std::to_string(n) + ",R)";
    case 'D': return "so(" + std::to_string(n) + "," + std::to_string(n) + ")";
    case 'E': return n == 6 ? "EI" : (n == 7 ? "EV" : "EVIII");
    case 'F': return "FI";
    case 'G': return "G";
  }
  return "";
}

inline std::string compact_form_name(const SimpleType& t) {
  int n = t.rank;
  switch (t.series) {
    case 'A': return "su(" + std::to_string(n + 1) + ")";
    case 'B': return "so(" + std::to_string(2 * n + 1) + ")";
    case 'C': return "sp(" + std::to_string(n) + ")";
    case 'D': return "so(" + std::to_string(2 * n) + ")";
    case 'E': return "e" + std::to_string(n);
    case 'F': return "f4";
    case 'G': return "g2";
  }
  return "";
}

/// Name of g^sigma from (type, kind, mu, painted set) for #P <= 1. For the
/// exceptional types with a single painted vertex the extreme vertices of the
/// branches are listed; nullopt for other vertices.
inline std::optional<std::string> table_name(const SimpleType& t, InvolutionKind kind, bool mu_is_id,
                                             const std::vector<std::size_t>& painted) {
  int n = t.rank;
  auto num = [](int x) { return std::to_string(x); };
  if (painted.size() > 1) return std::nullopt;
  if (kind == InvolutionKind::varsigma) {
    if (mu_is_id) return split_form_name(t);
    switch (t.series) {
      case 'A':
        if (n % 2 == 0) return "su(" + num(n / 2) + "," + num(n / 2 + 1) + ")";
        return "su(" + num((n + 1) / 2) + "," + num((n + 1) / 2) + ")";
      case 'D': return "so(" + num(n - 1) + "," + num(n + 1) + ")";
      case 'E': return "EII";
      default: return std::nullopt;
    }
  }
  if (kind != InvolutionKind::omega) return std::nullopt;
  if (mu_is_id) {
    if (painted.empty()) return compact_form_name(t);
    int j = static_cast<int>(painted.front()) + 1;  // Bourbaki vertex number
    switch (t.series) {
      case 'A': return "su(" + num(j) + "," + num(n + 1 - j) + ")";
      case 'B': return "so(" + num(2 * j) + "," + num(2 * n + 1 - 2 * j) + ")";
      case 'C': return j < n ? "sp(" + num(j) + "," + num(n - j) + ")" : "sp(" + num(n) + ",R)";
      case 'D': return j <= n - 2 ? "so(" + num(2 * j) + "," + num(2 * n - 2 * j) + ")" : "so*(" + num(2 * n) + ")";
      case 'E':
        if (n == 6) {
          if (j == 2) return "EII";
          if (j == 1 || j == 6) return "EIII";
        }
        if (n == 7) {
          if (j == 2) return "EV";
          if (j == 1) return "EVI";
          if (j == 7) return "EVII";
        }
        if (n == 8) {
          if (j == 1) return "EVIII";
          if (j == 8) return "EIX";
        }
        return std::nullopt;
      case 'F':
        if (j == 1) return "FI";   // extreme long vertex
        if (j == 4) return "FII";  // extreme short vertex
        return std::nullopt;
      case 'G': return "G";
    }
    return std::nullopt;
  }
  // omega_{mu,J}, mu != id
  switch (t.series) {
    case 'A':
      if (n % 2 == 0) return painted.empty() ? std::optional<std::string>("sl(" + num(n + 1) + ",R)") : std::nullopt;
      if (painted.empty()) return "sl(" + num((n + 1) / 2) + ",H)";
      return "sl(" + num(n + 1) + ",R)";
    case 'D': {
      if (painted.empty()) return "so(1," + num(2 * n - 1) + ")";
      // position along the mu-fixed chain, counted from its far end; for D4
      // the fixed chain is one leg followed by the centre
      std::size_t v = painted.front();
      int j = n == 4 ? (v == 1 ? 2 : 1) : static_cast<int>(v) + 1;
      return "so(" + num(2 * j + 1) + "," + num(2 * (n - j) - 1) + ")";
    }
    case 'E': return painted.empty() ? "EIV" : "EI";
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

namespace detail {
inline int eigenspace_dim(const GMatrix& m, const GR& eigenvalue) {
  GMatrix a = m - GMatrix::identity(m.rows()).scaled(eigenvalue);
  return static_cast<int>(m.rows() - rank(a));
}

/// Basis of the eigenspace of the Cartan block of theta.
inline std::vector<Vector> cartan_eigenspace(const RootSystem& rs, const GMatrix& theta, const GR& ev) {
  std::size_t r = rs.rank();
  GMatrix block(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) block(i, j) = theta(i, j) - (i == j ? ev : GR(0));
  return nullspace(block);
}

inline bool root_vanishes_on(const RootSystem& rs, std::size_t k, const std::vector<Vector>& hs) {
  for (const auto& h : hs) {
    Vector full(rs.dim());
    for (std::size_t i = 0; i < rs.rank(); ++i) full[i] = h[i];
    if (!root_value(rs, k, full).is_zero()) return false;
  }
  return true;
}
}  // namespace detail

/// -kappa(v_a, theta v_b) on a real basis of g^sigma; real symmetric when theta
/// commutes with sigma.
inline std::optional<QMatrix> theta_twisted_form(const RootSystem& rs, const Involution& theta, const RealFormBasis& basis) {
  std::size_t n = basis.dim();
  GMatrix v(rs.dim(), n);
  for (std::size_t a = 0; a < n; ++a) v.set_column(a, basis.vectors[a]);
  GMatrix b = v.transpose() * rs.killing_matrix() * theta.linear_part * v;
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!b(i, j).is_real()) return std::nullopt;
      out(i, j) = -b(i, j).re();
    }
  return out;
}

inline RealFormReport identify(const RootSystem& rs, const Involution& sigma) {
  if (!sigma.is_canonical()) throw std::invalid_argument("identify: sigma must be canonical");
  RealFormReport rep;
  rep.theta = cartan_involution(rs, sigma);
  const GMatrix& th = rep.theta.linear_part;
  int n = static_cast<int>(rs.dim()), r = static_cast<int>(rs.rank());
  rep.dim_k = detail::eigenspace_dim(th, GR(1));
  rep.dim_p = n - rep.dim_k;
  rep.character = rep.dim_p - rep.dim_k;
  auto t0 = detail::cartan_eigenspace(rs, th, GR(1));
  auto a0 = detail::cartan_eigenspace(rs, th, GR(-1));
  rep.dc = static_cast<int>(t0.size());
  rep.dnc = r - rep.dc;
  for (std::size_t k = 0; k < rs.num_roots(); ++k) {
    if (detail::root_vanishes_on(rs, k, a0)) ++rep.imaginary_roots;
    if (detail::root_vanishes_on(rs, k, t0)) ++rep.real_roots;
  }
  if (sigma.kind == InvolutionKind::omega) {
    rep.maximally_compact = true;
    for (std::size_t a : sigma.mu.fixed_points()) {
      std::size_t col = rs.root_vector_index(a);
      if (th(col, col) == GR(-1)) rep.vogan_painted.push_back(a);
    }
  }
  auto basis = fixed_point_basis(rs, sigma, false);
  auto form = theta_twisted_form(rs, rep.theta, basis);
  rep.theta_form_definite = form && is_positive_definite(*form);

  auto named = table_name(rs.type(), sigma.kind, sigma.mu.is_identity(), rep.vogan_painted);
  if (!named && rep.vogan_painted.size() == 1) {
    // a single painted vertex away from the branch extremes: name by dim k
    for (const auto& e : real_form_catalog(rs.type()))
      if (e.dim_k == rep.dim_k && e.dim_k != n) named = e.name;
  }
  rep.name = named ? *named : "unnormalized";
  if (named) {
    auto expect = catalog_dim_k(rs.type(), *named);
    rep.name_consistent = expect && *expect == rep.dim_k;
  }
  return rep;
}

}  // namespace liebialg
