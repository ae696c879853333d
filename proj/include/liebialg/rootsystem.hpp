#pragma once

// Root systems of the simple complex Lie algebras, a Chevalley basis with
// explicit structure constants, and the Killing-normalized basis used by the
// rest of the library.
//
// Simple roots follow Bourbaki numbering (0-based in code):
//   B_n: alpha_{n} short;  C_n: alpha_{n} long;  D_n: alpha_{n-1}, alpha_n on alpha_{n-2};
//   E_n: chain 1-3-4-5-...-n with alpha_2 attached to alpha_4;
//   F_4: alpha_1, alpha_2 long, alpha_3, alpha_4 short;  G_2: alpha_1 short.
//
// Basis ordering of g: [0, rank) Cartan part H_i = h_{alpha_i} (Killing duals of
// the simple roots), then the positive root vectors x_beta in root order, then
// x_{-beta} in the same order. Roots are ordered by height, then by descending
// lexicographic order of their simple-root coordinates.

#include "liebialg/core/gaussian_rational.hpp"
#include "liebialg/core/linalg.hpp"
#include "liebialg/core/tensor.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace liebialg {

struct SimpleType {
  char series = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }

  /// Throws std::invalid_argument when (series, rank) is not a simple type.
  void validate() const {
    bool ok = false;
    switch (series) {
      case 'A': ok = rank >= 1; break;
      case 'B': ok = rank >= 2; break;
      case 'C': ok = rank >= 3; break;
      case 'D': ok = rank >= 4; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: ok = false;
    }
    if (!ok) throw std::invalid_argument("invalid simple type " + name());
  }

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

/// Classical dimension of the simple Lie algebra of this type.
inline int classical_dimension(const SimpleType& t) {
  int n = t.rank;
  switch (t.series) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : (n == 7 ? 133 : 248);
    case 'F': return 52;
    case 'G': return 14;
  }
  return 0;
}

using RootCoords = std::vector<int>;

/// Symmetric integer Gram matrix of the simple roots, scaled so that short
/// roots have squared length 2.
inline std::vector<std::vector<int>> simple_root_gram(const SimpleType& t) {
  t.validate();
  int n = t.rank;
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { b[i][j] = b[j][i] = v; };
  switch (t.series) {
    case 'A':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) b[i][i] = 4;
      b[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      b[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) b[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      b[0][0] = 2;
      b[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return b;
}

class RootSystem {
 public:
  explicit RootSystem(SimpleType type) : type_(type) {
    type_.validate();
    gram_ = simple_root_gram(type_);
    rank_ = static_cast<std::size_t>(type_.rank);
    build_roots();
    build_chevalley_constants();
    build_killing();
    build_structure_constants();
  }

  const SimpleType& type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_positive() const { return positive_.size(); }
  std::size_t num_roots() const { return 2 * positive_.size(); }
  std::size_t dim() const { return rank_ + num_roots(); }

  /// Cartan matrix a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  std::vector<std::vector<int>> cartan_matrix() const {
    std::vector<std::vector<int>> a(rank_, std::vector<int>(rank_));
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) a[i][j] = 2 * gram_[i][j] / gram_[j][j];
    return a;
  }
  const std::vector<std::vector<int>>& simple_gram() const { return gram_; }

  // ---- roots: index k in [0, N) positive, [N, 2N) the negative of k - N ----
  const RootCoords& root(std::size_t k) const { return roots_[k]; }
  bool is_positive(std::size_t k) const { return k < positive_.size(); }
  std::size_t negative(std::size_t k) const {
    std::size_t n = positive_.size();
    return k < n ? k + n : k - n;
  }
  /// Index of the root with the given coordinates, or npos.
  std::size_t find_root(const RootCoords& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? npos : it->second;
  }
  bool is_root(const RootCoords& c) const { return find_root(c) != npos; }
  std::size_t simple_root(std::size_t i) const { return i; }  // simple roots come first
  int height(std::size_t k) const {
    int h = 0;
    for (int c : roots_[k]) h += c;
    return h;
  }
  /// Indices of the simple roots in the support of root k.
  std::vector<std::size_t> support(std::size_t k) const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < rank_; ++i)
      if (roots_[k][i] != 0) s.push_back(i);
    return s;
  }

  // ---- basis of g ----
  std::size_t cartan_index(std::size_t i) const { return i; }
  std::size_t root_vector_index(std::size_t k) const { return rank_ + k; }
  bool is_cartan_index(std::size_t b) const { return b < rank_; }
  std::size_t root_of_basis(std::size_t b) const { return b - rank_; }

  /// Integer Chevalley structure constant N_{a,b}: [e_a, e_b] = N e_{a+b}.
  int chevalley_N(std::size_t a, std::size_t b) const {
    auto it = n_.find({a, b});
    return it == n_.end() ? 0 : it->second;
  }

  /// Killing form on roots, (alpha | beta) = kappa(h_alpha, h_beta).
  Rational root_inner(const RootCoords& a, const RootCoords& b) const {
    long s = 0;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) s += static_cast<long>(a[i]) * gram_[i][j] * b[j];
    return killing_scale_ * Rational(s);
  }
  /// The same inner product in the integer normalization (short roots length 2).
  long root_inner_std(const RootCoords& a, const RootCoords& b) const {
    long s = 0;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) s += static_cast<long>(a[i]) * gram_[i][j] * b[j];
    return s;
  }
  /// (alpha_i | alpha_j) for simple roots.
  const QMatrix& killing_h() const { return killing_h_; }
  /// Killing form matrix in the full basis.
  const GMatrix& killing_matrix() const { return killing_; }
  const StructureConstants& structure() const { return structure_; }

  /// Casimir Omega = sum x_i (x) x^i.
  const Tensor2& casimir() const { return casimir_; }
  /// Cartan block Omega_0.
  const Tensor2& casimir_h() const { return casimir_h_; }

  /// Killing scale relative to the integer Gram matrix.
  const Rational& killing_scale() const { return killing_scale_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  void build_roots() {
    std::vector<RootCoords> pos;
    for (std::size_t i = 0; i < rank_; ++i) {
      RootCoords c(rank_, 0);
      c[i] = 1;
      pos.push_back(c);
    }
    std::map<RootCoords, bool> known;
    for (auto& c : pos) known[c] = true;
    std::vector<RootCoords> layer = pos;
    while (!layer.empty()) {
      std::vector<RootCoords> next;
      for (const auto& beta : layer) {
        for (std::size_t i = 0; i < rank_; ++i) {
          RootCoords ai(rank_, 0);
          ai[i] = 1;
          if (beta == ai) continue;
          // alpha_i string through beta: p - q = <beta, alpha_i^vee>
          int p = 0;
          RootCoords down = beta;
          while (true) {
            down[i] -= 1;
            if (!known.count(down)) break;
            ++p;
          }
          long pairing = 0;
          for (std::size_t j = 0; j < rank_; ++j) pairing += static_cast<long>(beta[j]) * gram_[j][i];
          int q = p - static_cast<int>(2 * pairing / gram_[i][i]);
          if (q > 0) {
            RootCoords up = beta;
            up[i] += 1;
            if (!known.count(up)) {
              known[up] = true;
              next.push_back(up);
            }
          }
        }
      }
      for (auto& c : next) pos.push_back(c);
      layer = std::move(next);
    }
    std::stable_sort(pos.begin(), pos.end(), [](const RootCoords& a, const RootCoords& b) {
      int ha = 0, hb = 0;
      for (int x : a) ha += x;
      for (int x : b) hb += x;
      if (ha != hb) return ha < hb;
      return a > b;
    });
    positive_ = pos;
    roots_ = pos;
    for (const auto& c : pos) {
      RootCoords m = c;
      for (int& x : m) x = -x;
      roots_.push_back(m);
    }
    for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k]] = k;
  }

  RootCoords add(std::size_t a, std::size_t b) const {
    RootCoords c = roots_[a];
    for (std::size_t i = 0; i < rank_; ++i) c[i] += roots_[b][i];
    return c;
  }
  RootCoords sub(std::size_t a, std::size_t b) const {
    RootCoords c = roots_[a];
    for (std::size_t i = 0; i < rank_; ++i) c[i] -= roots_[b][i];
    return c;
  }
  long len2(std::size_t k) const { return root_inner_std(roots_[k], roots_[k]); }

  /// Largest p with b - p a a root.
  int string_p(std::size_t a, std::size_t b) const {
    int p = 0;
    RootCoords c = roots_[b];
    while (true) {
      for (std::size_t i = 0; i < rank_; ++i) c[i] -= roots_[a][i];
      if (!is_root(c)) break;
      ++p;
    }
    return p;
  }

  // Chevalley signs from extraspecial pairs (all chosen positive), propagated
  // through the standard identities for N_{a,b} (Carter, Simple Groups of Lie
  // Type, 4.1-4.2) with N_{-a,-b} = -N_{a,b} and [e_a, e_{-a}] = h_a^vee.
  void build_chevalley_constants() {
    std::size_t npos_roots = positive_.size();
    extraspecial_.assign(npos_roots, {npos, npos});
    for (std::size_t k = 0; k < npos_roots; ++k) {
      if (height(k) == 1) continue;
      for (std::size_t i = 0; i < rank_; ++i) {
        std::size_t rest = find_root(sub(k, i));
        if (rest != npos && is_positive(rest)) {
          extraspecial_[k] = {i, rest};
          break;
        }
      }
    }
    for (std::size_t a = 0; a < roots_.size(); ++a)
      for (std::size_t b = 0; b < roots_.size(); ++b)
        if (find_root(add(a, b)) != npos) n_[{a, b}] = compute_N(a, b);
  }

  int compute_N(std::size_t a, std::size_t b) {
    auto it = n_.find({a, b});
    if (it != n_.end()) return it->second;
    std::size_t c = find_root(add(a, b));
    if (c == npos) return 0;
    int value = 0;
    if (is_positive(a) && is_positive(b)) {
      auto [ea, eb] = extraspecial_[c];
      if (a == ea && b == eb) {
        value = string_p(a, b) + 1;
      } else if (a == eb && b == ea) {
        value = -(string_p(b, a) + 1);
      } else {
        // four roots a + b - ea - eb = 0, none opposite
        Rational sum(0);
        std::size_t mea = negative(ea), meb = negative(eb);
        std::size_t bm = find_root(add(b, mea));
        if (bm != npos) sum += Rational(compute_N(b, mea) * compute_N(a, meb)) / Rational(len2(bm));
        std::size_t am = find_root(add(mea, a));
        if (am != npos) sum += Rational(compute_N(mea, a) * compute_N(b, meb)) / Rational(len2(am));
        Rational v = Rational(len2(c)) / Rational(compute_N(ea, eb)) * sum;
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("Chevalley constants: non-integral value");
        value = static_cast<int>(v.get_num().get_si());
      }
    } else if (!is_positive(a) && !is_positive(b)) {
      value = -compute_N(negative(a), negative(b));
    } else {
      // a + b + g = 0 with g = -c: N_{a,b}/(g,g) = N_{b,g}/(a,a) = N_{g,a}/(b,b)
      std::size_t g = negative(c);
      Rational v;
      if (is_positive(b) == is_positive(g)) v = Rational(len2(g) * compute_N(b, g), len2(a));
      else v = Rational(len2(g) * compute_N(g, a), len2(b));
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("Chevalley constants: non-integral value");
      value = static_cast<int>(v.get_num().get_si());
    }
    n_[{a, b}] = value;
    return value;
  }

  void build_killing() {
    // kappa(h_i^vee, h_j^vee) = sum_beta beta(h_i^vee) beta(h_j^vee)
    auto coroot_pairing = [&](std::size_t k, std::size_t i) {
      long s = 0;
      for (std::size_t j = 0; j < rank_; ++j) s += static_cast<long>(roots_[k][j]) * gram_[j][i];
      return 2 * s / gram_[i][i];
    };
    long k00 = 0;
    for (std::size_t k = 0; k < roots_.size(); ++k) k00 += coroot_pairing(k, 0) * coroot_pairing(k, 0);
    // kappa(h_0^vee, h_0^vee) = 4 / (c (alpha_0, alpha_0)_std)
    killing_scale_ = Rational(4, gram_[0][0] * k00);
    killing_scale_.canonicalize();
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) {
        long kij = 0;
        for (std::size_t k = 0; k < roots_.size(); ++k) kij += coroot_pairing(k, i) * coroot_pairing(k, j);
        Rational expect = Rational(4 * gram_[i][j]) / (killing_scale_ * gram_[i][i] * gram_[j][j]);
        if (Rational(kij) != expect) throw std::logic_error("Killing form is not proportional to the root form");
      }
    killing_h_ = QMatrix(rank_, rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) killing_h_(i, j) = killing_scale_ * gram_[i][j];

    std::size_t n = dim();
    killing_ = GMatrix(n, n);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) killing_(i, j) = GR(Rational(killing_h_(i, j)));
    for (std::size_t k = 0; k < positive_.size(); ++k) {
      killing_(root_vector_index(k), root_vector_index(negative(k))) = GR(1);
      killing_(root_vector_index(negative(k)), root_vector_index(k)) = GR(1);
    }
    auto inv = inverse(killing_);
    if (!inv) throw std::logic_error("Killing form degenerate");
    casimir_ = Tensor2::from_matrix(*inv);
    casimir_h_ = Tensor2(n);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) casimir_h_(i, j) = casimir_(i, j);
  }

  /// x_beta = e_beta for beta > 0; x_{-beta} = e_{-beta} / kappa(e_beta, e_{-beta}).
  Rational vector_scale(std::size_t k) const {
    if (is_positive(k)) return Rational(1);
    Rational s = root_inner(roots_[k], roots_[k]) / 2;
    s.canonicalize();
    return s;
  }

  void build_structure_constants() {
    std::size_t n = dim();
    structure_ = StructureConstants(n);
    std::size_t nroots = roots_.size();
    for (std::size_t i = 0; i < rank_; ++i) {
      RootCoords ai(rank_, 0);
      ai[i] = 1;
      for (std::size_t k = 0; k < nroots; ++k) {
        Rational v = root_inner(roots_[k], ai);
        if (sgn(v) == 0) continue;
        structure_.set(i, root_vector_index(k), {{root_vector_index(k), v}});
        structure_.set(root_vector_index(k), i, {{root_vector_index(k), -v}});
      }
    }
    for (std::size_t a = 0; a < nroots; ++a) {
      for (std::size_t b = 0; b < nroots; ++b) {
        std::size_t ia = root_vector_index(a), ib = root_vector_index(b);
        if (b == negative(a)) {
          // [x_beta, x_{-beta}] = h_beta, linear in beta
          std::vector<StructureConstants::Term> terms;
          int s = is_positive(a) ? 1 : -1;
          const RootCoords& beta = is_positive(a) ? roots_[a] : roots_[b];
          for (std::size_t i = 0; i < rank_; ++i)
            if (beta[i] != 0) terms.push_back({i, Rational(s * beta[i])});
          structure_.set(ia, ib, std::move(terms));
          continue;
        }
        std::size_t c = find_root(add(a, b));
        if (c == npos) continue;
        Rational v = vector_scale(a) * vector_scale(b) / vector_scale(c) * Rational(chevalley_N(a, b));
        v.canonicalize();
        structure_.set(ia, ib, {{root_vector_index(c), v}});
      }
    }
  }

  SimpleType type_;
  std::size_t rank_ = 0;
  std::vector<std::vector<int>> gram_;
  std::vector<RootCoords> positive_;
  std::vector<RootCoords> roots_;
  std::map<RootCoords, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> extraspecial_;
  std::map<std::pair<std::size_t, std::size_t>, int> n_;
  Rational killing_scale_;
  QMatrix killing_h_;
  GMatrix killing_;
  StructureConstants structure_;
  Tensor2 casimir_;
  Tensor2 casimir_h_;
};

inline RootSystem build_root_system(const SimpleType& type) { return RootSystem(type); }

/// kappa(x, y) in basis coordinates; bilinear, no conjugation.
inline GR killing_form(const RootSystem& rs, const Vector& x, const Vector& y) {
  StructureConstants::require(x.size() == rs.dim() && y.size() == rs.dim(), "killing_form: dimension mismatch");
  GR s;
  const auto& k = rs.killing_matrix();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !k(i, j).is_zero()) s += x[i] * k(i, j) * y[j];
  }
  return s;
}

/// h_alpha for root index k, as a basis-coordinate vector supported on the Cartan part.
inline Vector coroot_vector(const RootSystem& rs, std::size_t k) {
  Vector v(rs.dim());
  const auto& c = rs.root(k);
  for (std::size_t i = 0; i < rs.rank(); ++i) v[i] = GR(c[i]);
  return v;
}

/// alpha(H) for H in the Cartan part (basis coordinates).
inline GR root_value(const RootSystem& rs, std::size_t k, const Vector& h) {
  GR s;
  const auto& c = rs.root(k);
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (h[i].is_zero()) continue;
    Rational ci(0);
    for (std::size_t j = 0; j < rs.rank(); ++j) ci += Rational(c[j]) * rs.killing_h()(j, i);
    s += GR(ci) * h[i];
  }
  return s;
}

}  // namespace liebialg
