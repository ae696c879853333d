#pragma once
// Batch front-end: enumerate, build, verify, identify, classify.
// Vertex numbers on the command line are 1-based (Bourbaki labels); JSON
// indices are 0-based. Exit codes: 0 pass, 1 verification failure, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "liebialg/json.hpp"

namespace liebialg::cli {

using Row = nlohmann::ordered_json;

/// Raised for inconsistent or malformed configuration; maps to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  char series = 'A';
  int rank = 0;
  std::string sigma;    // varsigma | varsigma-mu | omega | omega-J | omega-mu-J, empty = all
  std::string mu;       // 1-based permutation "3,2,1"; default: the standard flip
  std::string J;        // 1-based vertex list
  std::string painted;  // 1-based vertex list, complement of J in the mu-fixed vertices
  std::string bd = "all";
  std::string probes = "0,1,-1,i,-i";
  std::string coeffs;
  std::string t;        // real | imaginary, empty = as the reality condition requires
  std::string what = "bialgebras";
  std::string format = "json";
  std::string out;
  std::string in;
  bool unchecked = false;
  bool manin = true;
};

struct Output {
  Json document;          // --format json
  std::vector<Row> rows;  // --format csv / pretty
};

// ---------------------------------------------------------------------------
// flag parsing

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

inline std::size_t parse_vertex(const std::string& s, std::size_t rank) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad vertex '" + s + "'");
  }
  if (used != s.size() || v < 1 || static_cast<std::size_t>(v) > rank)
    throw ConfigError("vertex '" + s + "' out of range 1.." + std::to_string(rank));
  return static_cast<std::size_t>(v - 1);
}

inline std::vector<std::size_t> parse_vertices(const std::string& s, std::size_t rank) {
  std::vector<std::size_t> out;
  if (s.empty() || s == "none") return out;
  for (const auto& part : split(s, ',')) out.push_back(parse_vertex(part, rank));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ConfigError("repeated vertex in '" + s + "'");
  return out;
}

/// "1>2,3>4" is T(alpha_1) = alpha_2, T(alpha_3) = alpha_4; "none" or "" is the empty triple.
inline BDTriple parse_bd(const RootSystem& rs, const std::string& s) {
  std::vector<std::pair<std::size_t, std::size_t>> graph;
  if (!s.empty() && s != "none") {
    for (const auto& part : split(s, ',')) {
      auto ends = split(part, '>');
      if (ends.size() != 2) throw ConfigError("bad --bd entry '" + part + "', expected i>j");
      graph.emplace_back(parse_vertex(ends[0], rs.rank()), parse_vertex(ends[1], rs.rank()));
    }
  }
  BDTriple bd = BDTriple::from_map(graph);
  std::set<std::size_t> src(bd.gamma1.begin(), bd.gamma1.end());
  if (src.size() != bd.gamma1.size() || !is_valid_bd_triple(rs, bd))
    throw ConfigError("--bd '" + s + "' is not a BD triple for " + rs.type().name());
  return bd;
}

inline std::vector<GR> parse_scalars(const std::string& s) {
  std::vector<GR> out;
  if (s.empty() || s == "none") return out;
  for (const auto& part : split(s, ',')) {
    try {
      out.push_back(GR::parse(part));
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad scalar '" + part + "'");
    }
  }
  return out;
}

inline std::string vertices_label(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
  return s;
}

inline std::string bd_label(const BDTriple& bd) {
  if (bd.empty()) return "none";
  std::string s;
  for (std::size_t k = 0; k < bd.tau.size(); ++k)
    s += (k ? "," : "") + std::to_string(bd.tau[k].first + 1) + ">" + std::to_string(bd.tau[k].second + 1);
  return s;
}

inline std::vector<std::size_t> painted_of(const Involution& s) {
  std::vector<std::size_t> out;
  if (s.kind != InvolutionKind::omega) return out;
  for (std::size_t a : s.mu.fixed_points())
    if (!std::binary_search(s.J.begin(), s.J.end(), a)) out.push_back(a);
  return out;
}

/// The flag spelling of a canonical involution.
inline std::string sigma_label(const RootSystem& rs, const Involution& s) {
  bool id = s.mu.is_identity();
  if (s.kind == InvolutionKind::varsigma) return id ? "varsigma" : "varsigma-mu";
  if (!id) return "omega-mu-J";
  return s.J.size() == rs.rank() ? "omega" : "omega-J";
}

inline std::string mu_label(const DiagramAutomorphism& mu) {
  std::string s;
  for (std::size_t k = 0; k < mu.size(); ++k) s += (k ? "," : "") + std::to_string(mu(k) + 1);
  return s;
}

/// Canonical involutions selected by --sigma/--mu/--J/--painted, in canonical order.
inline std::vector<Involution> select_involutions(const RootSystem& rs, const RunConfig& c) {
  static const std::vector<std::string> kinds{"varsigma", "varsigma-mu", "omega", "omega-J", "omega-mu-J"};
  if (!c.sigma.empty() && std::find(kinds.begin(), kinds.end(), c.sigma) == kinds.end())
    throw ConfigError("unknown --sigma '" + c.sigma + "'");
  bool omega_kind = c.sigma.rfind("omega", 0) == 0;
  if ((!c.J.empty() || !c.painted.empty()) && !(omega_kind && c.sigma != "omega"))
    throw ConfigError("--J and --painted need --sigma omega-J or omega-mu-J");
  if (!c.J.empty() && !c.painted.empty()) throw ConfigError("give at most one of --J and --painted");
  if (!c.mu.empty() && c.sigma != "varsigma-mu" && c.sigma != "omega-mu-J")
    throw ConfigError("--mu needs --sigma varsigma-mu or omega-mu-J");
  std::optional<DiagramAutomorphism> mu;
  if (!c.mu.empty()) {
    DiagramAutomorphism m;
    for (const auto& part : split(c.mu, ',')) m.perm.push_back(parse_vertex(part, rs.rank()));
    if (m.size() != rs.rank() || !preserves_diagram(rs, m) || m.order() != 2)
      throw ConfigError("--mu '" + c.mu + "' is not a diagram automorphism of order 2");
    mu = m;
  }
  std::optional<std::vector<std::size_t>> J, painted;
  if (!c.J.empty()) J = parse_vertices(c.J, rs.rank());
  if (!c.painted.empty()) painted = parse_vertices(c.painted, rs.rank());

  std::vector<Involution> out;
  for (auto& s : all_canonical_involutions(rs)) {
    if (!c.sigma.empty() && sigma_label(rs, s) != c.sigma) {
      // omega-J also admits J = Delta when J or P is given explicitly
      bool explicit_full = c.sigma == "omega-J" && (J || painted) && sigma_label(rs, s) == "omega";
      if (!explicit_full) continue;
    }
    if (mu && s.mu != *mu) continue;
    if (J && s.J != *J) continue;
    if (painted && painted_of(s) != *painted) continue;
    out.push_back(std::move(s));
  }
  if ((J || painted) && out.empty())
    throw ConfigError("--J/--painted must be a subset of the mu-fixed vertices");
  return out;
}

/// The single involution a build/identify run refers to; for several mu the
/// standard flip is taken unless --mu is given.
inline Involution select_one(const RootSystem& rs, const RunConfig& c) {
  if (c.sigma.empty()) throw ConfigError("--sigma is required for " + c.command);
  auto all = select_involutions(rs, c);
  if (c.mu.empty() && (c.sigma == "varsigma-mu" || c.sigma == "omega-mu-J")) {
    auto flip = standard_flip(rs);
    std::erase_if(all, [&](const Involution& s) { return !flip || s.mu != *flip; });
  }
  if (all.empty()) throw ConfigError("no involution of kind " + c.sigma + " on " + rs.type().name());
  if (all.size() > 1) throw ConfigError("--sigma " + c.sigma + " is ambiguous here; give --J or --painted");
  return all.front();
}

inline std::optional<GR> t_for(RealityKind kind, const std::string& tflag) {
  bool real = kind == RealityKind::real || kind == RealityKind::conjugate_mu;
  if (tflag.empty()) return real ? GR(1) : GR::i();
  if (tflag != "real" && tflag != "imaginary") throw ConfigError("--t must be real or imaginary");
  if ((tflag == "real") != real) return std::nullopt;
  return tflag == "real" ? GR(1) : GR::i();
}

inline GR t_from_flag(const std::string& tflag) {
  if (tflag == "imaginary") return GR::i();
  if (tflag.empty() || tflag == "real") return GR(1);
  throw ConfigError("--t must be real or imaginary");
}

// ---------------------------------------------------------------------------
// commands

struct Candidate {
  Involution sigma;
  ParameterSpace space;
  BialgebraDatum datum;
};

/// Data at the base points of every admissible (sigma, bd) pair selected by the config.
inline std::vector<Candidate> candidates(const RootSystem& rs, const RunConfig& c) {
  auto sigmas = select_involutions(rs, c);
  std::vector<BDTriple> bds;
  if (c.bd == "all") bds = enumerate_bd_triples(rs);
  else bds.push_back(parse_bd(rs, c.bd));
  if (!c.t.empty() && c.t != "real" && c.t != "imaginary") throw ConfigError("--t must be real or imaginary");
  std::vector<Candidate> out;
  for (const auto& s : sigmas) {
    auto kind = reality_kind_of(s);
    auto t = t_for(kind, c.t);
    if (!t) continue;
    for (const auto& bd : bds) {
      ParameterSpace ps;
      try {
        ps = apply_reality(solve_parameters(rs, bd), s);
      } catch (const std::domain_error&) {
        continue;
      }
      out.push_back({s, ps, make_datum(rs, s, bd, ps.base_point, *t)});
    }
  }
  return out;
}

inline Row datum_row(const RootSystem& rs, const BialgebraDatum& d, const std::string& real_form) {
  Row row;
  row["row"] = table_row(d);
  row["real_form"] = real_form;
  row["sigma"] = sigma_label(rs, d.sigma);
  row["mu"] = mu_label(d.sigma.mu);
  row["J"] = vertices_label(d.sigma.J);
  row["bd"] = bd_label(d.bd);
  row["t"] = d.t_value.to_string();
  return row;
}

class NameCache {
 public:
  explicit NameCache(const RootSystem& rs) : rs_(rs) {}
  const std::string& operator()(const Involution& s) {
    auto key = std::make_tuple(s.kind, s.mu.perm, s.J);
    auto it = names_.find(key);
    if (it == names_.end()) it = names_.emplace(key, identify(rs_, s).name).first;
    return it->second;
  }

 private:
  const RootSystem& rs_;
  std::map<std::tuple<InvolutionKind, std::vector<std::size_t>, std::vector<std::size_t>>, std::string> names_;
};

inline Output cmd_enumerate(const RootSystem& rs, const RunConfig& c) {
  Output out;
  out.document = {{"type", rs.type().name()}, {"what", c.what}};
  Json items = Json::array();
  if (c.what == "bd-triples") {
    if (!c.sigma.empty() || c.bd != "all") throw ConfigError("--what bd-triples takes no --sigma or --bd");
    for (const auto& bd : enumerate_bd_triples(rs)) {
      items.push_back(encode(bd));
      Row row;
      row["bd"] = bd_label(bd);
      row["size"] = bd.size();
      out.rows.push_back(row);
    }
  } else if (c.what == "involutions") {
    NameCache name(rs);
    for (const auto& s : select_involutions(rs, c)) {
      Json item = encode(s);
      item["sigma"] = sigma_label(rs, s);
      item["real_form"] = name(s);
      items.push_back(item);
      Row row;
      row["sigma"] = sigma_label(rs, s);
      row["mu"] = mu_label(s.mu);
      row["J"] = vertices_label(s.J);
      row["painted"] = vertices_label(painted_of(s));
      row["real_form"] = name(s);
      out.rows.push_back(row);
    }
  } else if (c.what == "bialgebras") {
    NameCache name(rs);
    for (const auto& cand : candidates(rs, c)) {
      const auto& d = cand.datum;
      items.push_back({{"row", table_row(d)},
                       {"real_form", name(cand.sigma)},
                       {"parameter_dimension", cand.space.dimension()},
                       {"parameter_space", encode(cand.space)},
                       {"datum", encode(d)}});
      Row row = datum_row(rs, d, name(cand.sigma));
      row["parameter_dimension"] = cand.space.dimension();
      out.rows.push_back(row);
    }
  } else {
    throw ConfigError("--what must be bd-triples, involutions or bialgebras");
  }
  out.document["count"] = items.size();
  out.document["items"] = items;
  return out;
}

inline Output cmd_build(const RootSystem& rs, const RunConfig& c) {
  auto sigma = select_one(rs, c);
  BDTriple bd = parse_bd(rs, c.bd == "all" ? std::string() : c.bd);
  auto kind = reality_kind_of(sigma);
  ParameterSpace ps = solve_parameters(rs, bd);
  GR t = t_from_flag(c.t);
  if (!c.unchecked) {
    if (!t_for(kind, c.t)) throw ConfigError("--t " + c.t + " violates the reality condition of " + c.sigma);
    t = *t_for(kind, c.t);
    try {
      ps = apply_reality(ps, sigma);
    } catch (const std::domain_error& e) {
      throw ConfigError(std::string("no real bialgebra: ") + e.what());
    }
  }
  std::vector<GR> coeffs = parse_scalars(c.coeffs);
  if (coeffs.empty()) coeffs.assign(ps.dimension(), GR());
  ContinuousParameter p;
  try {
    p = ps.point(coeffs);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  auto d = make_datum(rs, sigma, bd, p, t);
  Output out;
  out.document = {{"row", table_row(d)},
                  {"real_form", identify(rs, sigma).name},
                  {"parameter_dimension", ps.dimension()},
                  {"parameter_space", encode(ps)},
                  {"datum", encode(d)}};
  Row row = datum_row(rs, d, out.document["real_form"].get<std::string>());
  row["parameter_dimension"] = ps.dimension();
  out.rows.push_back(row);
  return out;
}

inline Output cmd_identify(const RootSystem& rs, const RunConfig& c) {
  auto sigma = select_one(rs, c);
  auto rep = identify(rs, sigma);
  Output out;
  out.document = encode(rep);
  out.document["sigma"] = encode(sigma);
  Row row;
  row["name"] = rep.name;
  row["sigma"] = sigma_label(rs, sigma);
  row["mu"] = mu_label(sigma.mu);
  row["J"] = vertices_label(sigma.J);
  row["painted"] = vertices_label(rep.vogan_painted);
  row["dim_k"] = rep.dim_k;
  row["dim_p"] = rep.dim_p;
  row["character"] = rep.character;
  row["dc"] = rep.dc;
  row["dnc"] = rep.dnc;
  row["theta_form_definite"] = rep.theta_form_definite;
  row["name_consistent"] = rep.name_consistent;
  out.rows.push_back(row);
  return out;
}

inline Json read_input(const std::string& path) {
  if (path.empty()) throw ConfigError("--in is required");
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    buf << f.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

/// Accepts a datum, an enumerate/build item ({"datum": ...}), an enumerate
/// document ({"items": [...]}) or an array of any of these.
inline std::vector<Json> input_items(const Json& j) {
  std::vector<Json> out;
  if (j.is_array()) {
    for (const auto& e : j) {
      auto sub = input_items(e);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (j.is_object() && j.contains("items")) {
    for (const auto& e : j["items"]) out.push_back(e);
  } else {
    out.push_back(j);
  }
  return out;
}

struct LoadedDatum {
  BialgebraDatum datum;
  std::optional<ParameterSpace> space;
};

inline LoadedDatum load_datum(const Json& item) {
  const Json& dj = item.contains("datum") ? item["datum"] : item;
  if (!dj.is_object() || !dj.contains("type")) throw ConfigError("input item is not a bialgebra datum");
  RootSystem rs(decode_type(dj["type"]));
  LoadedDatum out{decode_datum(rs, dj), std::nullopt};
  if (item.contains("parameter_space")) {
    const Json& pj = item["parameter_space"];
    ParameterSpace ps;
    ps.bd = out.datum.bd;
    ps.base_point.lambda = decode_gmatrix(pj.at("base_point"), rs.rank(), rs.rank());
    for (const auto& dir : pj.at("directions")) ps.directions.push_back(decode_gmatrix(dir, rs.rank(), rs.rank()));
    ps.reality_kind = reality_kind_of(out.datum.sigma);
    ps.mu = out.datum.sigma.mu;
    out.space = ps;
  }
  return out;
}

struct CheckedDatum {
  Row checks;
  Json informational;
  bool pass = true;
};

inline CheckedDatum check_datum(const RootSystem& rs, const BialgebraDatum& d, bool with_manin) {
  CheckedDatum out;
  auto rep = verify_datum(rs, d);
  auto kind = reality_kind_of(d.sigma);
  Tensor2 half = rs.casimir();
  half *= d.t_value * GR(Rational(1, 2));
  bool constructed = false;
  if (rep.lambda_ok) constructed = build_r(rs, d.bd, d.lambda, d.t_value) == d.r;
  auto add = [&](const char* name, bool ok) {
    out.checks[name] = ok;
    out.pass = out.pass && ok;
  };
  add("lambda_equations", rep.lambda_ok);
  add("r_matches_construction", constructed);
  add("symmetric_part", rep.symmetric_part_ok);
  add("r0_definition", d.r - half == d.r0);
  add("r0_antisymmetric", rep.r0_antisymmetric);
  add("cybe", rep.cybe_ok);
  add("sigma_fixed", rep.sigma_fixed);
  add("real_coordinates", rep.real_coordinates);
  add("t_class", detail::t_admissible(kind, d.t_value));
  add("bd_stability", detail::bd_admissible(kind, d.bd, d.sigma.mu) && j_parity_compatible(d.bd, d.sigma.J));
  add("reality_conditions", rep.reality_refined);
  out.informational["reality_conditions_without_j_parity"] = rep.reality_predicate;
  if (with_manin && out.pass) {
    auto m = manin_triple(rs, d);
    auto mr = verify_manin(rs, d, m);
    out.checks["manin_case"] = to_string(m.kind);
    add("manin_nondegenerate", mr.nondegenerate);
    add("manin_invariant", mr.invariant);
    add("manin_isotropic", mr.sub1_isotropic && mr.sub2_isotropic);
    add("manin_subalgebras", mr.sub1_subalgebra && mr.sub2_subalgebra);
    add("manin_half_dimensions", mr.half_dimensions);
    add("manin_complementary", mr.complementary);
    add("manin_cobracket", mr.cobracket_matches);
    if (m.kind == ManinCase::imaginary_factorizable) add("psi_phi", verify_psi_phi(rs, d, m).all());
  }
  return out;
}

inline Output cmd_verify(const RunConfig& c, bool& pass) {
  auto items = input_items(read_input(c.in));
  if (items.empty()) throw ConfigError("no data in " + c.in);
  auto probes = parse_scalars(c.probes);
  Output out;
  Json results = Json::array();
  pass = true;
  std::size_t index = 0;
  for (const auto& item : items) {
    LoadedDatum loaded;
    try {
      loaded = load_datum(item);
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("malformed datum: ") + e.what());
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("malformed datum: ") + e.what());
    }
    const auto& d = loaded.datum;
    RootSystem rs(d.type);
    // a probe off the solution space means the stored parameter space is wrong
    std::vector<std::pair<std::string, std::optional<BialgebraDatum>>> todo{{"datum", d}};
    if (loaded.space) {
      const auto& ps = *loaded.space;
      for (std::size_t k = 0; k < ps.dimension(); ++k)
        for (const auto& pr : probes) {
          if (pr.is_zero() || (ps.real_coefficients() && !pr.is_real())) continue;
          std::vector<GR> coeffs(ps.dimension());
          coeffs[k] = pr;
          ContinuousParameter p = ps.point(coeffs);
          std::string label = "probe d" + std::to_string(k) + "=" + pr.to_string();
          if (is_continuous_parameter(rs, d.bd, p)) todo.emplace_back(label, make_datum(rs, d.sigma, d.bd, p, d.t_value));
          else todo.emplace_back(label, std::nullopt);
        }
    }
    for (const auto& [label, datum] : todo) {
      CheckedDatum cd;
      if (datum) {
        cd = check_datum(rs, *datum, c.manin && label == "datum");
      } else {
        cd.checks["lambda_equations"] = false;
        cd.pass = false;
      }
      pass = pass && cd.pass;
      results.push_back({{"item", index}, {"label", label}, {"checks", cd.checks},
                         {"informational", cd.informational}, {"pass", cd.pass}});
      Row row;
      row["item"] = index;
      row["label"] = label;
      row["row"] = table_row(d);
      row["bd"] = bd_label(d.bd);
      for (auto it = cd.checks.begin(); it != cd.checks.end(); ++it) row[it.key()] = *it;
      row["pass"] = cd.pass;
      out.rows.push_back(row);
    }
    ++index;
  }
  out.document = {{"results", results}, {"pass", pass}};
  return out;
}

inline Output cmd_classify(const RunConfig& c) {
  std::vector<BialgebraDatum> data;
  std::optional<RootSystem> rs;
  if (!c.in.empty()) {
    for (const auto& item : input_items(read_input(c.in))) {
      try {
        data.push_back(load_datum(item).datum);
      } catch (const Json::exception& e) {
        throw ConfigError(std::string("malformed datum: ") + e.what());
      } catch (const ConfigError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("malformed datum: ") + e.what());
      }
      if (!rs) rs.emplace(data.back().type);
      else if (!(data.back().type == rs->type())) throw ConfigError("classify: input mixes types");
    }
    if (!rs) throw ConfigError("no data in " + c.in);
  } else {
    if (c.rank == 0) throw ConfigError("classify needs --type/--rank or --in");
    rs.emplace(SimpleType{c.series, c.rank});
    for (auto& cand : candidates(*rs, c)) data.push_back(std::move(cand.datum));
  }
  NameCache name(*rs);
  Output out;
  Json classes = Json::array();
  for (const auto& cls : classify(*rs, data)) {
    const auto& d = cls.representative;
    classes.push_back({{"row", table_row(d)},
                       {"real_form", name(d.sigma)},
                       {"members", cls.members},
                       {"representative", encode(d)}});
    Row row = datum_row(*rs, d, name(d.sigma));
    row["size"] = cls.members.size();
    row["members"] = [&] {
      std::string s;
      for (std::size_t k = 0; k < cls.members.size(); ++k) s += (k ? " " : "") + std::to_string(cls.members[k]);
      return s;
    }();
    out.rows.push_back(row);
  }
  out.document = {{"type", rs->type().name()}, {"inputs", data.size()}, {"count", classes.size()}, {"classes", classes}};
  return out;
}

// ---------------------------------------------------------------------------
// output

inline std::string cell(const Row& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::vector<std::string> columns(const std::vector<Row>& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (auto it = r.begin(); it != r.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  return cols;
}

inline std::string render(const Output& o, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << o.document.dump(2) << "\n";
  } else if (format == "csv") {
    auto cols = columns(o.rows);
    for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << csv_escape(cols[k]);
    os << "\n";
    for (const auto& r : o.rows) {
      for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << (r.contains(cols[k]) ? csv_escape(cell(r[cols[k]])) : "");
      os << "\n";
    }
  } else {
    auto cols = columns(o.rows);
    std::vector<std::size_t> width;
    for (const auto& col : cols) {
      std::size_t w = col.size();
      for (const auto& r : o.rows)
        if (r.contains(col)) w = std::max(w, cell(r[col]).size());
      width.push_back(w);
    }
    auto line = [&](auto get) {
      std::string s;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        std::string v = get(k);
        s += v + std::string(width[k] - v.size() + (k + 1 < cols.size() ? 2 : 0), ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      os << s << "\n";
    };
    line([&](std::size_t k) { return cols[k]; });
    for (const auto& r : o.rows) line([&](std::size_t k) { return r.contains(cols[k]) ? cell(r[cols[k]]) : std::string(); });
    os << "(" << o.rows.size() << " rows)\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// entry point

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real quasitriangular Lie bialgebra structures on simple Lie algebras", "liebialg"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::string type;
  app.add_option("--type", type, "Series A-G")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  app.add_option("--rank", c.rank, "Rank");
  app.add_option("--sigma", c.sigma, "Involution kind")
      ->check(CLI::IsMember({"varsigma", "varsigma-mu", "omega", "omega-J", "omega-mu-J"}));
  app.add_option("--mu", c.mu, "Diagram flip as a 1-based permutation, e.g. 3,2,1");
  app.add_option("--J", c.J, "1-based vertices in J");
  app.add_option("--painted", c.painted, "1-based painted (noncompact) vertices");
  app.add_option("--bd", c.bd, "BD triple as i>j,... (1-based), 'none', or 'all'");
  app.add_option("--t", c.t, "t in R_{>0} (real) or iR_{>0} (imaginary)")->check(CLI::IsMember({"real", "imaginary"}));
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--out", c.out, "Output path (default stdout)");

  auto* en = app.add_subcommand("enumerate", "List BD triples, involutions or bialgebra data");
  en->add_option("--what", c.what, "bd-triples | involutions | bialgebras")
      ->check(CLI::IsMember({"bd-triples", "involutions", "bialgebras"}));
  auto* bu = app.add_subcommand("build", "Build one datum");
  bu->add_option("--coeffs", c.coeffs, "Coefficients along the parameter directions, comma separated");
  bu->add_flag("--unchecked", c.unchecked, "Skip the reality conditions (for producing counterexamples)");
  auto* ve = app.add_subcommand("verify", "Verify data read from JSON");
  ve->add_option("--in", c.in, "Input JSON ('-' for stdin)")->required();
  ve->add_option("--probes", c.probes, "Coefficient probes along parameter directions");
  ve->add_flag("!--no-manin", c.manin, "Skip the Manin-triple checks");
  app.add_subcommand("identify", "Identify the real form of a canonical involution");
  auto* cl = app.add_subcommand("classify", "Group data into classes under diagram automorphisms");
  cl->add_option("--in", c.in, "Input JSON ('-' for stdin); otherwise enumerate from flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    Output o;
    int code = 0;
    bool needs_type = c.command != "verify" && !(c.command == "classify" && !c.in.empty());
    std::optional<RootSystem> rs;
    if (needs_type) {
      if (type.empty() || c.rank == 0) throw ConfigError("--type and --rank are required for " + c.command);
      c.series = type[0];
      try {
        rs.emplace(SimpleType{c.series, c.rank});
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    if (c.command == "enumerate") {
      o = cmd_enumerate(*rs, c);
    } else if (c.command == "build") {
      o = cmd_build(*rs, c);
    } else if (c.command == "identify") {
      o = cmd_identify(*rs, c);
    } else if (c.command == "verify") {
      bool pass = true;
      o = cmd_verify(c, pass);
      code = pass ? 0 : 1;
    } else {
      if (rs) c.series = rs->type().series;
      o = cmd_classify(c);
    }
    std::string text = render(o, c.format);
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw ConfigError("cannot write " + c.out);
      f << text;
    }
    return code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liebialg::cli
