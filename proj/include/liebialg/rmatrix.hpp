#pragma once

// r-matrices of almost-factorizable Lie bialgebras:
//   r   = t (lambda + sum_{a>0} x_-a (x) x_a + sum_{a < b} x_-a ^ x_b)
//   r_0 = r - (t/2) Omega
// with root vectors normalized so that the extension of T maps x_b to x_{Tb}.
// Also: recovery of (H, BD triple, lambda, t) from r_0, and deduplication of
// data up to diagram automorphisms of order 2.

#include "liebialg/parameter.hpp"
#include "liebialg/realform.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace liebialg {

/// x_b -> sign * x_{T b} for positive roots b in the span of Gamma_1.
struct TExtension {
  struct Image {
    std::size_t root;
    int sign;
  };
  std::map<std::size_t, Image> image;
};

/// Extends T to the subalgebra generated by Gamma_1 through brackets:
/// x_{a_i + g} = [x_{a_i}, x_g] / N(a_i, g) maps to
/// [x_{T a_i}, T(x_g)] / N(a_i, g).
inline TExtension extend_T(const RootSystem& rs, const BDTriple& bd) {
  TExtension ext;
  auto span = span_positive_roots(rs, bd.gamma1);
  std::sort(span.begin(), span.end());  // height order
  for (std::size_t b : span) {
    auto tb = apply_T(bd, rs.root(b));
    std::size_t tidx = tb ? rs.find_root(*tb) : RootSystem::npos;
    if (tidx == RootSystem::npos) throw std::logic_error("extend_T: T(beta) is not a root");
    if (rs.height(b) == 1) {
      ext.image[b] = {tidx, 1};
      continue;
    }
    bool done = false;
    for (std::size_t a : bd.gamma1) {
      RootCoords rest = rs.root(b);
      rest[a] -= 1;
      std::size_t g = rs.find_root(rest);
      if (g == RootSystem::npos || !ext.image.count(g)) continue;
      int n = rs.chevalley_N(a, g);
      if (n == 0) continue;
      int tn = rs.chevalley_N(*bd.T(a), ext.image[g].root);
      if (tn == 0 || (tn != n && tn != -n)) throw std::logic_error("extend_T: structure constants not preserved");
      ext.image[b] = {tidx, ext.image[g].sign * (tn == n ? 1 : -1)};
      done = true;
      break;
    }
    if (!done) throw std::logic_error("extend_T: no decomposition found");
  }
  return ext;
}

/// Rescaling signs s(b) with s(T b) = eps(b) s(b), s = 1 at the start of each
/// T-chain; x'_b = s(b) x_b then satisfies T(x'_b) = x'_{T b}. Roots outside
/// every chain get +1.
inline std::vector<int> chain_signs(const RootSystem& rs, const TExtension& ext) {
  std::vector<int> s(rs.num_positive(), 1);
  std::set<std::size_t> targets;
  for (const auto& [b, im] : ext.image) targets.insert(im.root);
  for (const auto& [b, im] : ext.image) {
    if (targets.count(b)) continue;  // not a chain start
    std::size_t cur = b;
    while (ext.image.count(cur)) {
      const auto& nx = ext.image.at(cur);
      s[nx.root] = s[cur] * nx.sign;
      cur = nx.root;
    }
  }
  return s;
}

/// The off-Cartan part of r / t: sum x_-a (x) x_a + sum_{a<b} s(a)s(b) x_-a ^ x_b.
inline Tensor2 root_part(const RootSystem& rs, const BDTriple& bd) {
  Tensor2 r(rs.dim());
  for (std::size_t k = 0; k < rs.num_positive(); ++k)
    r(rs.root_vector_index(rs.negative(k)), rs.root_vector_index(k)) += GR(1);
  auto s = chain_signs(rs, extend_T(rs, bd));
  for (auto [a, b] : precedence_pairs(rs, bd)) {
    GR w(s[a] * s[b]);
    std::size_t i = rs.root_vector_index(rs.negative(a)), j = rs.root_vector_index(b);
    r(i, j) += w;
    r(j, i) -= w;
  }
  return r;
}

inline void require_builder_inputs(const RootSystem& rs, const BDTriple& bd, const ContinuousParameter& lambda, const GR& t) {
  if (t.is_zero()) throw std::invalid_argument("r-matrix: t must be nonzero");
  if (!is_continuous_parameter(rs, bd, lambda))
    throw std::invalid_argument("r-matrix: lambda fails lambda + lambda^21 = Omega_0 or the Gamma_1 equations");
}

inline Tensor2 build_r(const RootSystem& rs, const BDTriple& bd, const ContinuousParameter& lambda, const GR& t) {
  require_builder_inputs(rs, bd, lambda, t);
  Tensor2 r = cartan_tensor(rs, lambda.lambda) + root_part(rs, bd);
  r *= t;
  return r;
}

inline Tensor2 build_r0(const RootSystem& rs, const BDTriple& bd, const ContinuousParameter& lambda, const GR& t) {
  Tensor2 r = build_r(rs, bd, lambda, t);
  Tensor2 half = rs.casimir();
  half *= t * GR(Rational(1, 2));
  return r - half;
}

// ---------------------------------------------------------------------------

enum class TClass { real_positive, imaginary_positive };

inline const char* to_string(TClass c) { return c == TClass::real_positive ? "real" : "imaginary"; }

inline std::optional<TClass> t_class_of(const GR& t) {
  if (t.is_real() && sgn(t.re()) > 0) return TClass::real_positive;
  if (t.is_imaginary() && sgn(t.im()) > 0) return TClass::imaginary_positive;
  return std::nullopt;
}

struct BialgebraDatum {
  SimpleType type;
  Involution sigma;
  BDTriple bd;
  ContinuousParameter lambda;
  TClass t_class = TClass::real_positive;
  GR t_value;
  Tensor2 r0;
  Tensor2 r;
};

/// Builds the datum; throws unless t is in R_{>0} or iR_{>0} and lambda is a
/// continuous parameter for bd. Reality is not enforced here (see verify_datum).
inline BialgebraDatum make_datum(const RootSystem& rs, const Involution& sigma, const BDTriple& bd,
                                 const ContinuousParameter& lambda, const GR& t) {
  auto tc = t_class_of(t);
  if (!tc) throw std::invalid_argument("make_datum: t must lie in R_{>0} or iR_{>0}");
  BialgebraDatum d;
  d.type = rs.type();
  d.sigma = sigma;
  d.bd = bd;
  d.lambda = lambda;
  d.t_class = *tc;
  d.t_value = t;
  d.r = build_r(rs, bd, lambda, t);
  Tensor2 half = rs.casimir();
  half *= t * GR(Rational(1, 2));
  d.r0 = d.r - half;
  return d;
}

struct DatumReport {
  bool lambda_ok = false;         // lambda + lambda^21 = Omega_0 and Gamma_1 equations
  bool symmetric_part_ok = false; // r + r^21 = t Omega
  bool r0_antisymmetric = false;
  bool cybe_ok = false;           // CYB(r) = 0
  bool sigma_fixed = false;       // (sigma (x) sigma) r_0 = r_0
  bool real_coordinates = false;  // r_0 has real coordinates in a basis of g_0
  bool reality_predicate = false; // conditions on t, lambda and the BD triple
  bool reality_refined = false;   // the same plus J-parity along T for omega_{mu,J}
  bool all() const {
    return lambda_ok && symmetric_part_ok && r0_antisymmetric && cybe_ok && sigma_fixed && real_coordinates &&
           reality_refined;
  }
};

inline DatumReport verify_datum(const RootSystem& rs, const BialgebraDatum& d) {
  DatumReport rep;
  rep.lambda_ok = is_continuous_parameter(rs, d.bd, d.lambda);
  Tensor2 tomega = rs.casimir();
  tomega *= d.t_value;
  rep.symmetric_part_ok = d.r + d.r.flip() == tomega;
  rep.r0_antisymmetric = d.r0.is_antisymmetric();
  rep.cybe_ok = cybe_vanishes(d.r, rs.structure());
  rep.sigma_fixed = apply_semilinear_pair(d.sigma.linear_part, d.r0) == d.r0;
  rep.real_coordinates = real_tensor_coordinates(fixed_point_basis(rs, d.sigma, false), d.r0).has_value();
  rep.reality_predicate = satisfies_reality(d.sigma, d.bd, d.lambda, d.t_value);
  rep.reality_refined = satisfies_reality_refined(d.sigma, d.bd, d.lambda, d.t_value);
  return rep;
}

// ---------------------------------------------------------------------------
// Recovery from r_0

struct ExtractedData {
  Vector H;
  GR c_squared;
  GR t;
  BDTriple bd;
  ContinuousParameter lambda;
};

/// Reads (H, t, BD triple, lambda) off r_0. Supported when Cent(H) is the
/// standard Cartan subalgebra and the positive system read from H is the
/// standard one; anything else is rejected with std::domain_error.
inline ExtractedData extract_data(const RootSystem& rs, const Involution& sigma, const Tensor2& r0) {
  if (r0.dim() != rs.dim()) throw std::invalid_argument("extract_data: dimension mismatch");
  if (!r0.is_antisymmetric()) throw std::domain_error("extract_data: r0 is not antisymmetric");
  if (apply_semilinear_pair(sigma.linear_part, r0) != r0) throw std::domain_error("extract_data: r0 is not sigma-fixed");
  const auto& sc = rs.structure();
  ExtractedData out;

  // CYB(r0) = c^2 [Omega13, Omega23]
  auto cyb = cybe_sparse(r0, sc);
  auto om = bracket_13_23(rs.casimir(), sc);
  if (cyb.empty()) throw std::domain_error("extract_data: triangular case (c = 0)");
  const auto& [key, val] = *om.begin();
  auto it = cyb.find(key);
  if (it == cyb.end()) throw std::domain_error("extract_data: CYB(r0) is not a multiple of [Omega13, Omega23]");
  GR c2 = it->second / val;
  if (cyb.size() != om.size()) throw std::domain_error("extract_data: CYB(r0) is not a multiple of [Omega13, Omega23]");
  for (const auto& [k, v] : om) {
    auto f = cyb.find(k);
    if (f == cyb.end() || f->second != c2 * v)
      throw std::domain_error("extract_data: CYB(r0) is not a multiple of [Omega13, Omega23]");
  }
  if (!c2.is_real()) throw std::domain_error("extract_data: c^2 is not real");
  out.c_squared = c2;
  // t^2 = -4 c^2, t in R_{>0} or iR_{>0}
  Rational t2 = -4 * c2.re();
  auto root = rational_sqrt(abs(t2));
  if (!root) throw std::domain_error("extract_data: t is not in Q(i)");
  out.t = sgn(t2) > 0 ? GR(*root) : GR(Rational(0), *root);

  out.H = bracket_contraction(r0, sc);
  for (std::size_t k = rs.rank(); k < rs.dim(); ++k)
    if (!out.H[k].is_zero()) throw std::domain_error("extract_data: H is not in the standard Cartan subalgebra");
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    GR v = root_value(rs, k, out.H) / (-out.t);
    if (v.is_zero()) throw std::domain_error("extract_data: H is not regular");
    if (!v.is_real() || sgn(v.re()) < 0)
      throw std::domain_error("extract_data: positive system of H differs from the standard one");
  }

  // Cartan block of r0 / t is the antisymmetric part of lambda
  std::size_t r = rs.rank();
  GMatrix a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = r0(i, j) / out.t;
  out.lambda.lambda = omega0_matrix(rs).scaled(GR(Rational(1, 2))) + a;

  // precedence pairs: off-diagonal x_-a (x) x_b entries between positive roots
  std::map<std::size_t, std::set<std::size_t>> succ;
  for (std::size_t p = 0; p < rs.num_positive(); ++p)
    for (std::size_t q = 0; q < rs.num_positive(); ++q) {
      if (p == q) continue;
      if (!r0(rs.root_vector_index(rs.negative(p)), rs.root_vector_index(q)).is_zero()) succ[p].insert(q);
    }
  auto successors = [&](std::size_t p) { return succ.count(p) ? succ.at(p).size() : std::size_t{0}; };
  // T(a) is the successor of a whose own chain is one shorter
  std::vector<std::pair<std::size_t, std::size_t>> graph;
  for (const auto& [p, qs] : succ) {
    if (p >= r) continue;
    for (std::size_t q : qs)
      if (q < r && successors(q) + 1 == qs.size()) graph.emplace_back(p, q);
  }
  out.bd = BDTriple::from_map(graph);
  if (!is_valid_bd_triple(rs, out.bd)) throw std::domain_error("extract_data: recovered map is not a BD triple");
  if (!is_continuous_parameter(rs, out.bd, out.lambda))
    throw std::domain_error("extract_data: recovered lambda is not a continuous parameter");
  if (build_r0(rs, out.bd, out.lambda, out.t) != r0)
    throw std::domain_error("extract_data: r0 is not of the standard form in this basis");
  return out;
}

// ---------------------------------------------------------------------------
// Diagram automorphisms acting on data

/// The Lie algebra automorphism x_{+-a_i} -> x_{+-phi(a_i)}.
inline GMatrix diagram_lie_automorphism(const RootSystem& rs, const DiagramAutomorphism& phi) {
  std::vector<Vector> pos, neg;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    pos.push_back(basis_vector(rs.dim(), rs.root_vector_index(phi(i))));
    neg.push_back(basis_vector(rs.dim(), rs.root_vector_index(rs.negative(phi(i)))));
  }
  return extend_from_generators(rs, pos, neg);
}

inline DiagramAutomorphism inverse_of(const DiagramAutomorphism& phi) {
  DiagramAutomorphism inv = phi;
  for (std::size_t i = 0; i < phi.perm.size(); ++i) inv.perm[phi(i)] = i;
  return inv;
}

inline DiagramAutomorphism compose(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
  DiagramAutomorphism c = a;
  for (std::size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = a(b(i));
  return c;
}

/// Group generated by the diagram automorphisms of order <= 2, sorted.
inline std::vector<DiagramAutomorphism> automorphism_group(const RootSystem& rs) {
  auto gens = diagram_automorphisms(rs);
  std::set<DiagramAutomorphism> group(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<DiagramAutomorphism> cur(group.begin(), group.end());
    for (const auto& a : cur)
      for (const auto& b : gens)
        if (group.insert(compose(a, b)).second) grew = true;
  }
  return {group.begin(), group.end()};
}

inline std::vector<std::size_t> sorted_image(const DiagramAutomorphism& phi, const std::vector<std::size_t>& s) {
  return image_of(phi, s);
}

/// phi . datum: mu -> phi mu phi^-1, J -> phi(J), (G1, G2, T) -> (phi G1, phi G2, phi T phi^-1),
/// lambda_{phi i, phi j} = lambda_{i j}; r and r0 are transported by the Lie automorphism.
inline BialgebraDatum conjugate_datum(const RootSystem& rs, const BialgebraDatum& d, const DiagramAutomorphism& phi) {
  BialgebraDatum out = d;
  DiagramAutomorphism inv = inverse_of(phi);
  DiagramAutomorphism mu = compose(phi, compose(d.sigma.mu, inv));
  out.sigma = canonical_involution(rs, d.sigma.kind, mu, sorted_image(phi, d.sigma.J));
  std::vector<std::pair<std::size_t, std::size_t>> graph;
  for (auto [a, b] : d.bd.tau) graph.emplace_back(phi(a), phi(b));
  out.bd = BDTriple::from_map(graph);
  std::size_t r = rs.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.lambda.lambda(phi(i), phi(j)) = d.lambda.lambda(i, j);
  out.r = build_r(rs, out.bd, out.lambda, out.t_value);
  Tensor2 half = rs.casimir();
  half *= out.t_value * GR(Rational(1, 2));
  out.r0 = out.r - half;
  return out;
}

// ---------------------------------------------------------------------------
// Classification

/// Row of the classification table: involution kind, whether mu is trivial, t class.
inline std::string table_row(const BialgebraDatum& d) {
  return std::string(to_string(reality_kind_of(d.sigma))) + "/" + to_string(d.t_class);
}

using DatumKey = std::tuple<std::string, std::vector<std::size_t>, std::vector<std::size_t>, std::vector<std::size_t>,
                            std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>, std::vector<GR>, GR>;

inline DatumKey datum_key(const BialgebraDatum& d) {
  return {table_row(d), d.sigma.mu.perm, d.sigma.J, d.bd.gamma1, d.bd.gamma2, d.bd.tau, d.lambda.lambda.data(), d.t_value};
}

struct DatumClass {
  BialgebraDatum representative;   // least conjugate under the automorphism group
  std::vector<std::size_t> members;  // indices into the input
};

inline DatumKey canonical_key(const RootSystem& rs, const BialgebraDatum& d, BialgebraDatum* best = nullptr) {
  std::optional<DatumKey> least;
  for (const auto& phi : automorphism_group(rs)) {
    BialgebraDatum c = phi.is_identity() ? d : conjugate_datum(rs, d, phi);
    DatumKey k = datum_key(c);
    if (!least || k < *least) {
      least = k;
      if (best) *best = c;
    }
  }
  return *least;
}

/// Groups data into isomorphism classes (same row, conjugate under a diagram
/// automorphism); classes are ordered by their canonical keys.
inline std::vector<DatumClass> classify(const RootSystem& rs, const std::vector<BialgebraDatum>& data) {
  std::map<DatumKey, DatumClass> classes;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].type.series != rs.type().series || data[i].type.rank != rs.type().rank)
      throw std::invalid_argument("classify: data of different types");
    BialgebraDatum rep;
    DatumKey k = canonical_key(rs, data[i], &rep);
    auto [it, inserted] = classes.try_emplace(k);
    if (inserted) it->second.representative = std::move(rep);
    it->second.members.push_back(i);
  }
  std::vector<DatumClass> out;
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return out;
}

}  // namespace liebialg
