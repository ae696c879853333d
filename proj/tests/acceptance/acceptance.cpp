// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "liebialg/manin.hpp"
#include "liebialg/realform.hpp"

using namespace liebialg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

SimpleType T(char s, int n) { return SimpleType{s, n}; }

// ---- 1: root systems -------------------------------------------------------

int classical_positive(char s, int n) {
  switch (s) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

bool jacobi_sparse(const RootSystem& rs) {
  const auto& sc = rs.structure();
  std::size_t n = rs.dim();
  std::vector<GR> acc(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::fill(acc.begin(), acc.end(), GR());
        auto add = [&](std::size_t x, std::size_t y, std::size_t z) {
          for (const auto& t : sc.bracket(y, z))
            for (const auto& u : sc.bracket(x, t.index)) acc[u.index] += GR(t.coeff * u.coeff);
        };
        add(a, b, c);
        add(b, c, a);
        add(c, a, b);
        for (const auto& v : acc)
          if (!v.is_zero()) return false;
      }
  return true;
}

bool casimir_invariant(const RootSystem& rs) {
  const auto& sc = rs.structure();
  auto nz = rs.casimir().nonzeros();
  for (std::size_t x = 0; x < rs.dim(); ++x) {
    std::map<std::pair<std::size_t, std::size_t>, GR> acc;
    for (const auto& e : nz) {
      for (const auto& t : sc.bracket(x, e.i)) acc[{t.index, e.j}] += e.value * GR(t.coeff);
      for (const auto& t : sc.bracket(x, e.j)) acc[{e.i, t.index}] += e.value * GR(t.coeff);
    }
    for (const auto& [k, v] : acc)
      if (!v.is_zero()) return false;
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  int checked = 0;
  for (auto t : {T('A', 1), T('A', 2), T('A', 3), T('A', 4), T('B', 2), T('B', 3), T('B', 4), T('C', 3), T('C', 4),
                 T('D', 4), T('G', 2), T('F', 4)}) {
    RootSystem rs(t);
    int np = classical_positive(t.series, t.rank);
    bool ok = static_cast<int>(rs.num_positive()) == np && static_cast<int>(rs.dim()) == t.rank + 2 * np &&
              jacobi_sparse(rs) && casimir_invariant(rs);
    if (!ok) {
      o.pass = false;
      o.detail += " " + t.name();
    }
    ++checked;
  }
  o.detail = std::to_string(checked) + " types; counts, Jacobi, Omega-invariance" + (o.pass ? "" : "; failing:" + o.detail);
  return o;
}

// ---- 2: BD triples ---------------------------------------------------------

using Graph = std::vector<std::pair<std::size_t, std::size_t>>;

std::set<Graph> bd_oracle(const RootSystem& rs) {
  std::size_t r = rs.rank();
  const auto& g = rs.simple_gram();
  std::set<Graph> out;
  for (unsigned m1 = 0; m1 < (1u << r); ++m1)
    for (unsigned m2 = 0; m2 < (1u << r); ++m2) {
      std::vector<std::size_t> s1, s2;
      for (std::size_t i = 0; i < r; ++i) {
        if (m1 >> i & 1) s1.push_back(i);
        if (m2 >> i & 1) s2.push_back(i);
      }
      if (s1.size() != s2.size()) continue;
      std::vector<std::size_t> img = s2;
      do {
        bool ok = true;
        for (std::size_t a = 0; a < s1.size() && ok; ++a)
          for (std::size_t b = 0; b < s1.size() && ok; ++b) ok = g[s1[a]][s1[b]] == g[img[a]][img[b]];
        for (std::size_t a = 0; a < s1.size() && ok; ++a) {
          std::size_t x = s1[a], steps = 0;
          for (auto it = std::find(s1.begin(), s1.end(), x); it != s1.end() && ok; it = std::find(s1.begin(), s1.end(), x)) {
            x = img[it - s1.begin()];
            ok = ++steps <= r;
          }
        }
        if (ok) {
          Graph gr;
          for (std::size_t a = 0; a < s1.size(); ++a) gr.emplace_back(s1[a], img[a]);
          out.insert(gr);
        }
      } while (std::next_permutation(img.begin(), img.end()));
    }
  return out;
}

Outcome criterion2() {
  Outcome o;
  std::size_t total = 0;
  std::string bad;
  for (auto t : {T('A', 1), T('A', 2), T('A', 3), T('A', 4), T('B', 2), T('B', 3), T('B', 4), T('C', 3), T('C', 4),
                 T('D', 4), T('F', 4), T('G', 2)}) {
    RootSystem rs(t);
    std::set<Graph> got;
    for (const auto& bd : enumerate_bd_triples(rs)) got.insert(bd.tau);
    if (got != bd_oracle(rs)) bad += " " + t.name();
    total += got.size();
  }
  std::size_t a2 = enumerate_bd_triples(RootSystem(T('A', 2))).size();
  o.pass = bad.empty() && a2 == 3;
  o.detail = "12 types, " + std::to_string(total) + " triples; A2 yields " + std::to_string(a2) +
             (bad.empty() ? "" : "; mismatch:" + bad);
  return o;
}

// ---- 3: CYBE ---------------------------------------------------------------

std::vector<ContinuousParameter> probes(const ParameterSpace& ps) {
  std::vector<ContinuousParameter> out{ps.base_point};
  std::vector<GR> values = ps.real_coefficients() ? std::vector<GR>{GR(1), GR(-1)}
                                                  : std::vector<GR>{GR(1), GR(-1), GR::i(), -GR::i()};
  for (std::size_t k = 0; k < ps.dimension(); ++k)
    for (const auto& v : values) {
      std::vector<GR> c(ps.dimension());
      c[k] = v;
      out.push_back(ps.point(c));
    }
  return out;
}

Outcome criterion3() {
  Outcome o;
  std::size_t checked = 0, failed = 0;
  for (auto t : {T('A', 1), T('A', 2), T('A', 3), T('B', 2), T('B', 3), T('C', 3), T('G', 2)}) {
    RootSystem rs(t);
    for (const auto& bd : enumerate_bd_triples(rs))
      for (const auto& p : probes(solve_parameters(rs, bd)))
        for (GR tt : {GR(1), GR::i()}) {
          Tensor2 r = build_r(rs, bd, p, tt);
          Tensor2 tomega = rs.casimir();
          tomega *= tt;
          if (!cybe_vanishes(r, rs.structure()) || !(r + r.flip() == tomega)) ++failed;
          ++checked;
        }
  }
  o.pass = failed == 0;
  o.detail = std::to_string(checked) + " r-matrices over all rank<=3 types, t in {1, i}; " + std::to_string(failed) + " failures";
  return o;
}

// ---- 4: reality conditions vs sigma-fixity ---------------------------------

Outcome criterion4() {
  Outcome o;
  std::size_t checked = 0, literal_mismatch = 0, refined_mismatch = 0;
  std::string first;
  for (auto t : {T('A', 2), T('A', 3), T('B', 2)}) {
    RootSystem rs(t);
    for (const auto& s : all_canonical_involutions(rs))
      for (const auto& bd : enumerate_bd_triples(rs)) {
        auto ps = solve_parameters(rs, bd);
        auto ls = probes(ps);
        for (auto kind : {RealityKind::real, RealityKind::conjugate_mu, RealityKind::imaginary, RealityKind::anti_conjugate_mu}) {
          try {
            auto real = apply_reality(ps, kind, s.mu);
            for (const auto& p : probes(real)) ls.push_back(p);
          } catch (const std::exception&) {
          }
        }
        for (const auto& p : ls)
          for (GR tt : {GR(1), GR::i()}) {
            Tensor2 r0 = build_r0(rs, bd, p, tt);
            bool fixed = apply_semilinear_pair(s.linear_part, r0) == r0;
            bool literal = satisfies_reality(s, bd, p, tt);
            bool refined = satisfies_reality_refined(s, bd, p, tt);
            if (fixed != literal) {
              ++literal_mismatch;
              if (first.empty())
              {
                auto list = [](const std::vector<std::size_t>& v) {
                  std::string o;
                  for (auto x : v) o += (o.empty() ? "" : ",") + std::to_string(x + 1);
                  return "{" + o + "}";
                };
                std::string tau;
                for (auto [a, b] : bd.tau) tau += (tau.empty() ? "" : ",") + std::to_string(a + 1) + ">" + std::to_string(b + 1);
                first = t.name() + " " + to_string(s.kind) + (s.mu.is_identity() ? "" : "-mu") + " J=" + list(s.J) +
                        " T=" + tau;
              }
            }
            if (fixed != refined) ++refined_mismatch;
            ++checked;
          }
      }
  }
  o.pass = literal_mismatch == 0;
  o.detail = std::to_string(checked) + " (sigma, bd, lambda, t) cases; stated conditions disagree with fixity in " +
             std::to_string(literal_mismatch) + (first.empty() ? "" : " (first: " + first + ")") +
             "; with J-parity along T added: " + std::to_string(refined_mismatch) + " disagreements";
  return o;
}

// ---- 5: round trip ---------------------------------------------------------

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(20240611);
  std::vector<SimpleType> types{T('A', 1), T('A', 2), T('A', 3), T('B', 2), T('B', 3), T('C', 3), T('G', 2)};
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), tnum(1, 9);
  int done = 0, ok = 0, attempts = 0;
  std::string bad;
  while (done < 50 && attempts < 5000) {
    ++attempts;
    RootSystem rs(types[rng() % types.size()]);
    auto sigmas = all_canonical_involutions(rs);
    const auto& s = sigmas[rng() % sigmas.size()];
    auto bds = enumerate_bd_triples(rs);
    const auto& bd = bds[rng() % bds.size()];
    ParameterSpace ps;
    try {
      ps = apply_reality(solve_parameters(rs, bd), s);
    } catch (const std::domain_error&) {
      continue;
    }
    std::vector<GR> c;
    for (std::size_t k = 0; k < ps.dimension(); ++k) c.push_back(GR(Rational(num(rng), den(rng))));
    auto kind = reality_kind_of(s);
    Rational mag(tnum(rng), den(rng));
    GR tt = kind == RealityKind::real || kind == RealityKind::conjugate_mu ? GR(mag) : GR(Rational(0), mag);
    auto d = make_datum(rs, s, bd, ps.point(c), tt);
    ++done;
    try {
      auto ex = extract_data(rs, s, d.r0);
      Vector h(rs.dim());
      for (std::size_t k = 0; k < rs.num_positive(); ++k) h = h + coroot_vector(rs, k);
      bool regular = true;
      for (std::size_t k = 0; k < rs.num_roots(); ++k) regular = regular && !root_value(rs, k, ex.H).is_zero();
      bool same = ex.t == tt && ex.bd == bd && ex.lambda == d.lambda && ex.H == (-tt) * h && regular &&
                  build_r0(rs, ex.bd, ex.lambda, ex.t) == d.r0;
      if (same) ++ok;
      else if (bad.empty()) bad = rs.type().name() + " " + table_row(d);
    } catch (const std::exception& e) {
      if (bad.empty()) bad = rs.type().name() + " " + table_row(d) + ": " + e.what();
    }
  }
  o.pass = done == 50 && ok == 50;
  o.detail = std::to_string(ok) + "/" + std::to_string(done) + " random data recovered (H = -t sum h_alpha, regular)" +
             (bad.empty() ? "" : "; first failure " + bad);
  return o;
}

// ---- 6: real-form names ----------------------------------------------------

Outcome criterion6() {
  Outcome o;
  // (type, kind, mu is identity, 0-based painted) -> name
  using Key = std::tuple<std::string, InvolutionKind, bool, std::vector<std::size_t>>;
  const auto V = InvolutionKind::varsigma;
  const auto W = InvolutionKind::omega;
  std::map<Key, std::string> table{
      {{"A1", V, true, {}}, "sl(2,R)"},    {{"A1", W, true, {}}, "su(2)"},      {{"A1", W, true, {0}}, "su(1,1)"},
      {{"A2", V, true, {}}, "sl(3,R)"},    {{"A2", V, false, {}}, "su(1,2)"},   {{"A2", W, true, {}}, "su(3)"},
      {{"A2", W, true, {0}}, "su(1,2)"},   {{"A2", W, true, {1}}, "su(2,1)"},   {{"A2", W, false, {}}, "sl(3,R)"},
      {{"A3", V, true, {}}, "sl(4,R)"},    {{"A3", V, false, {}}, "su(2,2)"},   {{"A3", W, true, {}}, "su(4)"},
      {{"A3", W, true, {0}}, "su(1,3)"},   {{"A3", W, true, {1}}, "su(2,2)"},   {{"A3", W, true, {2}}, "su(3,1)"},
      {{"A3", W, false, {}}, "sl(2,H)"},   {{"A3", W, false, {1}}, "sl(4,R)"},  {{"B2", V, true, {}}, "so(2,3)"},
      {{"B2", W, true, {}}, "so(5)"},      {{"B2", W, true, {0}}, "so(2,3)"},   {{"B2", W, true, {1}}, "so(4,1)"},
      {{"G2", V, true, {}}, "G"},          {{"G2", W, true, {}}, "g2"},         {{"G2", W, true, {0}}, "G"},
      {{"G2", W, true, {1}}, "G"},
  };
  int checked = 0;
  std::string bad;
  for (auto t : {T('A', 1), T('A', 2), T('A', 3), T('B', 2), T('G', 2)}) {
    RootSystem rs(t);
    for (const auto& s : all_canonical_involutions(rs)) {
      auto rep = identify(rs, s);
      if (rep.vogan_painted.size() > 1) continue;
      ++checked;
      auto it = table.find({t.name(), s.kind, s.mu.is_identity(), rep.vogan_painted});
      bool ok = it != table.end() && it->second == rep.name && rep.name_consistent && rep.theta_form_definite &&
                rep.dim_k + rep.dim_p == static_cast<int>(rs.dim()) && rep.character == rep.dim_p - rep.dim_k &&
                rep.dc + rep.dnc == t.rank;
      if (s.kind == V && s.mu.is_identity()) ok = ok && rep.dc == 0 && rep.dnc == t.rank;
      if (s.kind == W && s.J.size() == rs.rank() && s.mu.is_identity()) ok = ok && rep.character == -static_cast<int>(rs.dim());
      if (t.name() == "A2" && s.kind == V && !s.mu.is_identity()) ok = ok && rep.character == 0;
      if (!ok && bad.empty()) bad = t.name() + " -> " + rep.name;
    }
  }
  o.pass = bad.empty() && checked == static_cast<int>(table.size());
  o.detail = std::to_string(checked) + " involutions with #P<=1 named and invariants consistent" + (bad.empty() ? "" : "; first failure " + bad);
  return o;
}

// ---- 7: Manin triples ------------------------------------------------------

Outcome criterion7() {
  Outcome o;
  int fact = 0, imag = 0, failed = 0;
  for (int n : {1, 2}) {
    RootSystem rs(T('A', n));
    for (const auto& s : all_canonical_involutions(rs)) {
      auto kind = reality_kind_of(s);
      if (kind != RealityKind::real && kind != RealityKind::imaginary) continue;
      GR tt = kind == RealityKind::real ? GR(Rational(3, 2)) : GR(Rational(0), Rational(1, 2));
      for (const auto& bd : enumerate_bd_triples(rs)) {
        ParameterSpace ps;
        try {
          ps = apply_reality(solve_parameters(rs, bd), s);
        } catch (const std::domain_error&) {
          continue;
        }
        for (const auto& p : probes(ps)) {
          auto d = make_datum(rs, s, bd, p, tt);
          auto m = manin_triple(rs, d);
          bool ok = verify_manin(rs, d, m).all();
          if (m.kind == ManinCase::imaginary_factorizable) {
            ok = ok && verify_psi_phi(rs, d, m).all();
            ++imag;
          } else {
            ++fact;
          }
          if (!ok) ++failed;
        }
      }
    }
  }
  o.pass = failed == 0 && fact > 0 && imag > 0;
  o.detail = std::to_string(fact) + " factorizable + " + std::to_string(imag) +
             " imaginary doubles on sl2/sl3; isotropy, half dimension, transversality, cobracket, Psi/Phi; " +
             std::to_string(failed) + " failures";
  return o;
}

// ---- 8: classification -----------------------------------------------------

std::vector<BialgebraDatum> base_point_data(const RootSystem& rs) {
  std::vector<BialgebraDatum> out;
  for (const auto& s : all_canonical_involutions(rs)) {
    auto kind = reality_kind_of(s);
    GR tt = kind == RealityKind::real || kind == RealityKind::conjugate_mu ? GR(1) : GR::i();
    for (const auto& bd : enumerate_bd_triples(rs)) {
      try {
        auto ps = apply_reality(solve_parameters(rs, bd), s);
        out.push_back(make_datum(rs, s, bd, ps.base_point, tt));
      } catch (const std::domain_error&) {
      }
    }
  }
  return out;
}

Outcome criterion8() {
  Outcome o;
  std::string detail;
  for (auto t : {T('A', 2), T('A', 3)}) {
    RootSystem rs(t);
    auto data = base_point_data(rs);
    std::size_t n = data.size();
    // oracle: d_j is the image of d_i under psi = identity or the flip
    auto flip = *standard_flip(rs);
    std::vector<std::pair<GMatrix, GMatrix>> psis{
        {GMatrix::identity(rs.dim()), GMatrix::identity(rs.dim())},
        {diagram_lie_automorphism(rs, flip), diagram_lie_automorphism(rs, inverse_of(flip))}};
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [psi, inv] : psis) {
          bool same = data[i].t_value == data[j].t_value &&
                      psi * data[i].sigma.linear_part * inv == data[j].sigma.linear_part &&
                      apply_linear_pair(psi, data[i].r0) == data[j].r0;
          if (same) parent[find(i)] = find(j);
        }
    std::set<std::set<std::size_t>> oracle_classes, got_classes;
    std::map<std::size_t, std::set<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].insert(i);
    for (auto& [k, g] : groups) oracle_classes.insert(g);
    for (const auto& c : classify(rs, data)) got_classes.insert(std::set<std::size_t>(c.members.begin(), c.members.end()));
    if (oracle_classes != got_classes) o.pass = false;
    detail += (detail.empty() ? "" : ", ") + t.name() + ": " + std::to_string(n) + " data -> " +
              std::to_string(got_classes.size()) + " classes (oracle " + std::to_string(oracle_classes.size()) + ")";
  }
  o.detail = detail;
  return o;
}

// ---- 9: determinism --------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome criterion9() {
  Outcome o;
  std::string base = "liebialg_acceptance_run";
  std::string a = base + "1.json", b = base + "2.json";
  std::string cmd = std::string(LIEBIALG_CLI_PATH) + " enumerate --type A --rank 3 --out ";
  int ra = std::system((cmd + a).c_str()), rb = std::system((cmd + b).c_str());
  std::string sa = slurp(a), sb = slurp(b);
  o.pass = ra == 0 && rb == 0 && !sa.empty() && sa == sb;
  o.detail = "two enumerate runs on A3: " + std::to_string(sa.size()) + " bytes, " + (sa == sb ? "identical" : "different");
  std::remove(a.c_str());
  std::remove(b.c_str());
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"root systems", criterion1},
      {"BD-triple oracle", criterion2},
      {"CYBE and symmetric part", criterion3},
      {"reality conditions iff sigma-fixed", criterion4},
      {"data round trip", criterion5},
      {"real-form names", criterion6},
      {"Manin triples", criterion7},
      {"classification vs conjugation oracle", criterion8},
      {"CLI determinism", criterion9},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %zu %-38s %s  %s [%.1fs]\n", k + 1, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
