#pragma once

// Dynkin diagram automorphisms of order <= 2, Belavin-Drinfeld triples, the
// induced order on positive roots, and mu-(anti)stability.

#include "liebialg/rootsystem.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liebialg {

/// Permutation of simple-root indices preserving the Cartan matrix.
struct DiagramAutomorphism {
  std::vector<std::size_t> perm;

  static DiagramAutomorphism identity(std::size_t rank) {
    DiagramAutomorphism mu;
    for (std::size_t i = 0; i < rank; ++i) mu.perm.push_back(i);
    return mu;
  }

  std::size_t operator()(std::size_t i) const { return perm[i]; }
  std::size_t size() const { return perm.size(); }
  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != i) return false;
    return true;
  }
  int order() const {
    DiagramAutomorphism p = *this;
    int k = 1;
    while (!p.is_identity()) {
      DiagramAutomorphism q;
      for (std::size_t i = 0; i < perm.size(); ++i) q.perm.push_back(perm[p.perm[i]]);
      p = q;
      ++k;
    }
    return k;
  }
  std::vector<std::size_t> fixed_points() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] == i) out.push_back(i);
    return out;
  }
  /// The automorphism applied to root coordinates.
  RootCoords apply(const RootCoords& c) const {
    RootCoords out(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) out[perm[i]] = c[i];
    return out;
  }

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
  friend auto operator<=>(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

inline bool preserves_diagram(const RootSystem& rs, const DiagramAutomorphism& mu) {
  if (mu.size() != rs.rank()) return false;
  const auto& g = rs.simple_gram();
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (g[mu(i)][mu(j)] != g[i][j]) return false;
  return true;
}

/// Every diagram automorphism of order 1 or 2, identity first, then in
/// lexicographic order of the permutation. D4 triality is excluded.
inline std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs) {
  std::size_t n = rs.rank();
  const auto& g = rs.simple_gram();
  std::vector<DiagramAutomorphism> out;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  // backtracking over images preserving the Gram matrix
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      DiagramAutomorphism mu{perm};
      if (mu.order() <= 2) out.push_back(mu);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || g[j][j] != g[i][i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = g[perm[k]][j] == g[k][i];
      if (!ok) continue;
      used[j] = true;
      perm[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
    if (a.is_identity() != b.is_identity()) return a.is_identity();
    return a.perm < b.perm;
  });
  return out;
}

/// The standard nontrivial involution (A_n, n >= 2; D_n; E_6), or nullopt.
/// For D_4 this is the swap of alpha_3 and alpha_4.
inline std::optional<DiagramAutomorphism> standard_flip(const RootSystem& rs) {
  std::size_t n = rs.rank();
  DiagramAutomorphism mu = DiagramAutomorphism::identity(n);
  switch (rs.type().series) {
    case 'A':
      if (n < 2) return std::nullopt;
      for (std::size_t i = 0; i < n; ++i) mu.perm[i] = n - 1 - i;
      return mu;
    case 'D':
      std::swap(mu.perm[n - 2], mu.perm[n - 1]);
      return mu;
    case 'E':
      if (n != 6) return std::nullopt;
      mu.perm = {5, 1, 4, 3, 2, 0};
      return mu;
    default: return std::nullopt;
  }
}

struct BDTriple {
  std::vector<std::size_t> gamma1;                           // sorted
  std::vector<std::size_t> gamma2;                           // sorted
  std::vector<std::pair<std::size_t, std::size_t>> tau;      // graph of T, sorted by source

  bool empty() const { return gamma1.empty(); }
  std::size_t size() const { return gamma1.size(); }

  std::optional<std::size_t> T(std::size_t i) const {
    for (auto [a, b] : tau)
      if (a == i) return b;
    return std::nullopt;
  }
  std::optional<std::size_t> T_inverse(std::size_t j) const {
    for (auto [a, b] : tau)
      if (b == j) return a;
    return std::nullopt;
  }
  bool in_gamma1(std::size_t i) const { return std::binary_search(gamma1.begin(), gamma1.end(), i); }
  bool in_gamma2(std::size_t i) const { return std::binary_search(gamma2.begin(), gamma2.end(), i); }

  /// Builds the sorted triple from the graph of tau.
  static BDTriple from_map(std::vector<std::pair<std::size_t, std::size_t>> graph) {
    BDTriple bd;
    std::sort(graph.begin(), graph.end());
    for (auto [a, b] : graph) {
      bd.gamma1.push_back(a);
      bd.gamma2.push_back(b);
    }
    std::sort(bd.gamma2.begin(), bd.gamma2.end());
    bd.tau = std::move(graph);
    return bd;
  }

  /// (phi Gamma1, phi Gamma2, phi T phi^-1)
  BDTriple conjugated(const DiagramAutomorphism& phi) const {
    std::vector<std::pair<std::size_t, std::size_t>> graph;
    for (auto [a, b] : tau) graph.emplace_back(phi(a), phi(b));
    return from_map(std::move(graph));
  }

  friend bool operator==(const BDTriple&, const BDTriple&) = default;
};

/// Canonical order: (|Gamma1|, Gamma1, Gamma2, graph of T).
inline bool bd_less(const BDTriple& a, const BDTriple& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.gamma1 != b.gamma1) return a.gamma1 < b.gamma1;
  if (a.gamma2 != b.gamma2) return a.gamma2 < b.gamma2;
  return a.tau < b.tau;
}

inline bool preserves_inner_product(const RootSystem& rs, const BDTriple& bd) {
  const auto& g = rs.simple_gram();
  for (auto [a, ta] : bd.tau)
    for (auto [b, tb] : bd.tau)
      if (g[ta][tb] != g[a][b]) return false;
  return true;
}

/// Every alpha in Gamma1 eventually leaves Gamma1 under iteration of T.
inline bool satisfies_nilpotency(const BDTriple& bd) {
  for (std::size_t a : bd.gamma1) {
    std::size_t cur = a;
    bool exits = false;
    for (std::size_t step = 0; step <= bd.size(); ++step) {
      auto next = bd.T(cur);
      if (!next) throw std::logic_error("nilpotency: T undefined on Gamma1");
      cur = *next;
      if (!bd.in_gamma1(cur)) {
        exits = true;
        break;
      }
    }
    if (!exits) return false;
  }
  return true;
}

inline bool is_valid_bd_triple(const RootSystem& rs, const BDTriple& bd) {
  if (bd.gamma1.size() != bd.gamma2.size() || bd.tau.size() != bd.gamma1.size()) return false;
  std::set<std::size_t> src, dst;
  for (auto [a, b] : bd.tau) {
    if (a >= rs.rank() || b >= rs.rank()) return false;
    src.insert(a);
    dst.insert(b);
  }
  if (src.size() != bd.tau.size() || dst.size() != bd.tau.size()) return false;
  if (!std::equal(src.begin(), src.end(), bd.gamma1.begin(), bd.gamma1.end())) return false;
  if (!std::equal(dst.begin(), dst.end(), bd.gamma2.begin(), bd.gamma2.end())) return false;
  return preserves_inner_product(rs, bd) && satisfies_nilpotency(bd);
}

/// Every BD triple of the root system, each once, in canonical order.
inline std::vector<BDTriple> enumerate_bd_triples(const RootSystem& rs) {
  std::size_t n = rs.rank();
  const auto& g = rs.simple_gram();
  std::vector<BDTriple> out;
  // subsets as bitmasks, grouped by size
  std::vector<std::vector<std::vector<std::size_t>>> by_size(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    by_size[s.size()].push_back(s);
  }
  for (auto& group : by_size) std::sort(group.begin(), group.end());

  for (std::size_t k = 0; k < n; ++k) {  // |Gamma1| = rank would violate nilpotency
    for (const auto& g1 : by_size[k]) {
      for (const auto& g2 : by_size[k]) {
        std::vector<std::size_t> image(k);
        std::vector<bool> used(k, false);
        auto rec = [&](auto&& self, std::size_t pos) -> void {
          if (pos == k) {
            std::vector<std::pair<std::size_t, std::size_t>> graph;
            for (std::size_t q = 0; q < k; ++q) graph.emplace_back(g1[q], image[q]);
            BDTriple bd = BDTriple::from_map(std::move(graph));
            if (satisfies_nilpotency(bd)) out.push_back(std::move(bd));
            return;
          }
          for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            std::size_t b = g2[c];
            bool ok = g[b][b] == g[g1[pos]][g1[pos]];
            for (std::size_t q = 0; q < pos && ok; ++q) ok = g[image[q]][b] == g[g1[q]][g1[pos]];
            if (!ok) continue;
            used[c] = true;
            image[pos] = b;
            self(self, pos + 1);
            used[c] = false;
          }
        };
        rec(rec, 0);
      }
    }
  }
  std::sort(out.begin(), out.end(), bd_less);
  return out;
}

/// Root coordinates supported in Gamma1 mapped additively by T; nullopt when
/// the support leaves Gamma1.
inline std::optional<RootCoords> apply_T(const BDTriple& bd, const RootCoords& c) {
  RootCoords out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    auto t = bd.T(i);
    if (!t) return std::nullopt;
    out[*t] += c[i];
  }
  return out;
}

/// Positive roots in the span of the given simple roots.
inline std::vector<std::size_t> span_positive_roots(const RootSystem& rs, const std::vector<std::size_t>& simples) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    bool inside = true;
    for (std::size_t i : rs.support(k)) inside = inside && std::binary_search(simples.begin(), simples.end(), i);
    if (inside) out.push_back(k);
  }
  return out;
}

using PrecedenceSet = std::set<std::pair<std::size_t, std::size_t>>;

/// All (alpha, beta) of positive-root indices with beta = T^n(alpha), n >= 1.
inline PrecedenceSet precedence_pairs(const RootSystem& rs, const BDTriple& bd) {
  PrecedenceSet out;
  for (std::size_t a : span_positive_roots(rs, bd.gamma1)) {
    RootCoords cur = rs.root(a);
    while (auto next = apply_T(bd, cur)) {
      std::size_t idx = rs.find_root(*next);
      if (idx == RootSystem::npos || !rs.is_positive(idx))
        throw std::logic_error("precedence_pairs: T does not map roots to positive roots");
      out.insert({a, idx});
      cur = *next;
    }
  }
  return out;
}

enum class Stability { stable, antistable, both, neither };

inline const char* to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::antistable: return "antistable";
    case Stability::both: return "both";
    case Stability::neither: return "neither";
  }
  return "?";
}

inline std::vector<std::size_t> image_of(const DiagramAutomorphism& mu, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (auto i : s) out.push_back(mu(i));
  std::sort(out.begin(), out.end());
  return out;
}

/// mu(G1) = G1, mu(G2) = G2, T mu = mu T
inline bool is_mu_stable(const BDTriple& bd, const DiagramAutomorphism& mu) {
  if (image_of(mu, bd.gamma1) != bd.gamma1 || image_of(mu, bd.gamma2) != bd.gamma2) return false;
  for (auto [a, ta] : bd.tau) {
    auto t = bd.T(mu(a));
    if (!t || *t != mu(ta)) return false;
  }
  return true;
}

/// mu(G1) = G2, mu(G2) = G1, T^-1 mu = mu T
inline bool is_mu_antistable(const BDTriple& bd, const DiagramAutomorphism& mu) {
  if (image_of(mu, bd.gamma1) != bd.gamma2 || image_of(mu, bd.gamma2) != bd.gamma1) return false;
  for (auto [a, ta] : bd.tau) {
    auto t = bd.T_inverse(mu(a));
    if (!t || *t != mu(ta)) return false;
  }
  return true;
}

inline Stability stability(const BDTriple& bd, const DiagramAutomorphism& mu) {
  bool s = is_mu_stable(bd, mu), a = is_mu_antistable(bd, mu);
  if (s && a) return Stability::both;
  if (s) return Stability::stable;
  if (a) return Stability::antistable;
  return Stability::neither;
}

}  // namespace liebialg
