#pragma once
// JSON encodings. Indices are 0-based; scalars are GaussianRational strings
// ("3/2", "1-2i"); tensors are sparse lists of [i, j, "value"] triples.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "liebialg/bdtriple.hpp"
#include "liebialg/involution.hpp"
#include "liebialg/manin.hpp"
#include "liebialg/parameter.hpp"
#include "liebialg/realform.hpp"
#include "liebialg/rmatrix.hpp"
#include "liebialg/rootsystem.hpp"

namespace liebialg {

using Json = nlohmann::json;

// ---- scalars, matrices, tensors ----

inline Json encode(const GR& z) { return z.to_string(); }
inline Json encode(const Rational& q) { return q.get_str(); }

inline GR decode_scalar(const Json& j) {
  if (j.is_number_integer()) return GR(Rational(j.get<long>()));
  if (!j.is_string()) throw std::invalid_argument("json: scalar must be a string or an integer");
  return GR::parse(j.get<std::string>());
}

template <class T>
Json encode(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline GMatrix decode_gmatrix(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::invalid_argument("json: matrix has the wrong number of rows");
  GMatrix m(rows, cols);
  for (std::size_t a = 0; a < rows; ++a) {
    if (!j[a].is_array() || j[a].size() != cols) throw std::invalid_argument("json: matrix has the wrong number of columns");
    for (std::size_t b = 0; b < cols; ++b) m(a, b) = decode_scalar(j[a][b]);
  }
  return m;
}

inline Json encode(const Tensor2& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      if (!t(i, j).is_zero()) out.push_back(Json::array({i, j, encode(t(i, j))}));
  return out;
}

inline Tensor2 decode_tensor(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw std::invalid_argument("json: tensor must be an array of triples");
  Tensor2 t(dim);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw std::invalid_argument("json: tensor entry must be [i, j, value]");
    auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
    if (a >= dim || b >= dim) throw std::invalid_argument("json: tensor index out of range");
    t(a, b) = decode_scalar(e[2]);
  }
  return t;
}

inline std::vector<std::size_t> decode_indices(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string("json: ") + what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() >= bound)
      throw std::invalid_argument(std::string("json: bad index in ") + what);
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

// ---- root systems ----

inline SimpleType decode_type(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("json: type must be a string such as \"A2\"");
  auto s = j.get<std::string>();
  if (s.size() < 2) throw std::invalid_argument("json: bad type '" + s + "'");
  SimpleType t;
  t.series = s[0];
  try {
    std::size_t used = 0;
    t.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("json: bad type '" + s + "'");
  }
  t.validate();
  return t;
}

inline Json encode(const RootSystem& rs) {
  Json roots = Json::array();
  for (std::size_t k = 0; k < rs.num_roots(); ++k) roots.push_back(rs.root(k));
  Json sc = Json::array();
  const auto& s = rs.structure();
  for (std::size_t i = 0; i < rs.dim(); ++i)
    for (std::size_t j = 0; j < rs.dim(); ++j)
      for (const auto& term : s.bracket(i, j)) sc.push_back(Json::array({i, j, term.index, encode(term.coeff)}));
  return {{"type", rs.type().name()},
          {"rank", rs.rank()},
          {"dim", rs.dim()},
          {"cartan_matrix", rs.cartan_matrix()},
          {"roots", roots},
          {"killing_h", encode(rs.killing_h())},
          {"structure_constants", sc}};
}

// ---- BD triples, involutions ----

inline Json encode(const BDTriple& bd) {
  Json tau = Json::array();
  for (auto [a, b] : bd.tau) tau.push_back(Json::array({a, b}));
  return {{"gamma1", bd.gamma1}, {"gamma2", bd.gamma2}, {"tau", tau}};
}

/// Reads the graph of T; gamma1/gamma2, when present, must agree with it.
inline BDTriple decode_bd(const RootSystem& rs, const Json& j) {
  if (!j.is_object() || !j.contains("tau")) throw std::invalid_argument("json: BD triple needs a tau field");
  std::vector<std::pair<std::size_t, std::size_t>> graph;
  for (const auto& e : j["tau"]) {
    auto p = decode_indices(e, rs.rank(), "tau");
    if (p.size() != 2) throw std::invalid_argument("json: tau entries must be pairs");
    graph.emplace_back(p[0], p[1]);
  }
  BDTriple bd = BDTriple::from_map(graph);
  if (j.contains("gamma1") && decode_indices(j["gamma1"], rs.rank(), "gamma1") != bd.gamma1)
    throw std::invalid_argument("json: gamma1 disagrees with tau");
  if (j.contains("gamma2") && decode_indices(j["gamma2"], rs.rank(), "gamma2") != bd.gamma2)
    throw std::invalid_argument("json: gamma2 disagrees with tau");
  if (!is_valid_bd_triple(rs, bd)) throw std::invalid_argument("json: not a BD triple for " + rs.type().name());
  return bd;
}

inline Json encode(const Involution& s) {
  if (!s.is_canonical()) throw std::invalid_argument("json: only canonical involutions are encoded");
  return {{"kind", to_string(s.kind)}, {"mu", s.mu.perm}, {"J", s.J}};
}

inline Involution decode_involution(const RootSystem& rs, const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("json: involution needs a kind field");
  auto kind = j["kind"].get<std::string>();
  InvolutionKind k;
  if (kind == "varsigma") k = InvolutionKind::varsigma;
  else if (kind == "omega") k = InvolutionKind::omega;
  else throw std::invalid_argument("json: involution kind must be varsigma or omega");
  DiagramAutomorphism mu = DiagramAutomorphism::identity(rs.rank());
  if (j.contains("mu")) mu.perm = decode_indices(j["mu"], rs.rank(), "mu");
  if (mu.perm.size() != rs.rank()) throw std::invalid_argument("json: mu must be a permutation of the simple roots");
  std::vector<std::size_t> J;
  if (j.contains("J")) J = decode_indices(j["J"], rs.rank(), "J");
  return canonical_involution(rs, k, mu, J);
}

// ---- real forms ----

inline Json encode(const RealFormReport& r) {
  return {{"name", r.name},
          {"theta", encode(r.theta.linear_part)},
          {"dim_k", r.dim_k},
          {"dim_p", r.dim_p},
          {"character", r.character},
          {"dc", r.dc},
          {"dnc", r.dnc},
          {"vogan_painted", r.vogan_painted},
          {"maximally_compact", r.maximally_compact},
          {"imaginary_roots", r.imaginary_roots},
          {"real_roots", r.real_roots},
          {"theta_form_definite", r.theta_form_definite},
          {"name_consistent", r.name_consistent}};
}

// ---- parameters ----

inline Json encode(const ParameterSpace& ps) {
  Json dirs = Json::array();
  for (const auto& d : ps.directions) dirs.push_back(encode(d));
  return {{"bd", encode(ps.bd)},
          {"base_point", encode(ps.base_point.lambda)},
          {"directions", dirs},
          {"dimension", ps.dimension()},
          {"reality_kind", to_string(ps.reality_kind)},
          {"mu", ps.mu.perm}};
}

// ---- bialgebra data ----

inline Json encode(const DatumReport& r) {
  return {{"lambda_equations", r.lambda_ok},         {"symmetric_part", r.symmetric_part_ok},
          {"r0_antisymmetric", r.r0_antisymmetric},  {"cybe", r.cybe_ok},
          {"sigma_fixed", r.sigma_fixed},            {"real_coordinates", r.real_coordinates},
          {"reality_conditions", r.reality_predicate}, {"reality_conditions_refined", r.reality_refined}};
}

inline Json encode(const BialgebraDatum& d) {
  return {{"type", d.type.name()},
          {"sigma", encode(d.sigma)},
          {"bd", encode(d.bd)},
          {"lambda", encode(d.lambda.lambda)},
          {"t_class", to_string(d.t_class)},
          {"t", encode(d.t_value)},
          {"r0", encode(d.r0)},
          {"r", encode(d.r)}};
}

/// Reads a datum as stored, without rebuilding r or r0, so that verification
/// sees exactly what the file says. r0 defaults to r - (t/2) Omega when absent.
inline BialgebraDatum decode_datum(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("json: datum must be an object");
  for (const char* f : {"type", "sigma", "bd", "lambda", "t", "r"})
    if (!j.contains(f)) throw std::invalid_argument(std::string("json: datum is missing field ") + f);
  if (decode_type(j["type"]) != rs.type()) throw std::invalid_argument("json: datum type mismatch");
  BialgebraDatum d;
  d.type = rs.type();
  d.sigma = decode_involution(rs, j["sigma"]);
  d.bd = decode_bd(rs, j["bd"]);
  d.lambda.lambda = decode_gmatrix(j["lambda"], rs.rank(), rs.rank());
  d.t_value = decode_scalar(j["t"]);
  auto tc = t_class_of(d.t_value);
  if (!tc) throw std::invalid_argument("json: t must lie in R_{>0} or iR_{>0}");
  d.t_class = *tc;
  if (j.contains("t_class") && j["t_class"] != to_string(d.t_class))
    throw std::invalid_argument("json: t_class disagrees with t");
  d.r = decode_tensor(j["r"], rs.dim());
  if (j.contains("r0")) {
    d.r0 = decode_tensor(j["r0"], rs.dim());
  } else {
    Tensor2 half = rs.casimir();
    half *= d.t_value * GR(Rational(1, 2));
    d.r0 = d.r - half;
  }
  return d;
}

// ---- Manin triples ----

inline Json encode(const ManinReport& r) {
  return {{"nondegenerate", r.nondegenerate},       {"invariant", r.invariant},
          {"sub1_isotropic", r.sub1_isotropic},     {"sub2_isotropic", r.sub2_isotropic},
          {"sub1_subalgebra", r.sub1_subalgebra},   {"sub2_subalgebra", r.sub2_subalgebra},
          {"half_dimensions", r.half_dimensions},   {"complementary", r.complementary},
          {"cobracket_matches", r.cobracket_matches}};
}

inline Json encode(const ManinTriple& m, const ManinReport& r) {
  return {{"case", to_string(m.kind)},
          {"double_dim", m.double_dim},
          {"pairing", encode(m.pairing)},
          {"sub1", encode(m.sub1)},
          {"sub2", encode(m.sub2)},
          {"report", encode(r)}};
}

}  // namespace liebialg
