#pragma once

// Dense order-2 and order-3 tensors over a finite-dimensional Lie algebra
// presented by structure constants, and the tensor operations built on the
// bracket: wedge, (s (x) s) for semilinear s, and the classical Yang-Baxter map.

#include "liebialg/core/gaussian_rational.hpp"
#include "liebialg/core/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liebialg {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<GR>;

/// [x_i, x_j] = sum_k c_ij^k x_k, stored sparsely per ordered pair.
class StructureConstants {
 public:
  struct Term {
    std::size_t index;
    Rational coeff;
  };

  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim) {}

  std::size_t dim() const { return dim_; }

  void set(std::size_t i, std::size_t j, std::vector<Term> terms) { table_[i * dim_ + j] = std::move(terms); }
  const std::vector<Term>& bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Vector bracket(const Vector& x, const Vector& y) const {
    require(x.size() == dim_ && y.size() == dim_, "bracket: vector dimension mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const auto& terms = bracket(i, j);
        if (terms.empty()) continue;
        GR xy = x[i] * y[j];
        for (const auto& t : terms) out[t.index] += xy * GR(t.coeff);
      }
    }
    return out;
  }

  /// Matrix of ad x in the structure basis.
  GMatrix ad(const Vector& x) const {
    require(x.size() == dim_, "ad: vector dimension mismatch");
    GMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& t : bracket(i, j)) m(t.index, j) += x[i] * GR(t.coeff);
    }
    return m;
  }

  static void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Term>> table_;
};

inline Vector basis_vector(std::size_t dim, std::size_t k, GR value = GR(1)) {
  Vector v(dim);
  v[k] = std::move(value);
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vector operator+(Vector a, const Vector& b) {
  StructureConstants::require(a.size() == b.size(), "vector add: dimension mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
inline Vector operator-(Vector a, const Vector& b) {
  StructureConstants::require(a.size() == b.size(), "vector sub: dimension mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}
inline Vector operator*(const GR& s, Vector a) {
  for (auto& x : a) x *= s;
  return a;
}
inline Vector conj(Vector a) {
  for (auto& x : a) x = x.conj();
  return a;
}

class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  GR& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const GR& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  const std::vector<GR>& entries() const { return e_; }

  /// x^21
  Tensor2 flip() const {
    Tensor2 t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_antisymmetric() const { return (*this + flip()).is_zero(); }
  bool is_symmetric() const { return *this == flip(); }

  Tensor2& operator+=(const Tensor2& o) {
    same_dim(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Tensor2& operator-=(const Tensor2& o) {
    same_dim(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Tensor2& operator*=(const GR& s) {
    for (auto& x : e_)
      if (!x.is_zero()) x *= s;
    return *this;
  }
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const GR& s, Tensor2 a) { return a *= s; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }

  /// a (x) b added with coefficient s.
  void add_outer(const Vector& a, const Vector& b, const GR& s = GR(1)) {
    StructureConstants::require(a.size() == dim_ && b.size() == dim_, "add_outer: dimension mismatch");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      GR si = s * a[i];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!b[j].is_zero()) (*this)(i, j) += si * b[j];
    }
  }

  struct Entry {
    std::size_t i, j;
    GR value;
  };
  std::vector<Entry> nonzeros() const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!(*this)(i, j).is_zero()) out.push_back({i, j, (*this)(i, j)});
    return out;
  }

  GMatrix as_matrix() const {
    GMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }
  static Tensor2 from_matrix(const GMatrix& m) {
    StructureConstants::require(m.rows() == m.cols(), "Tensor2::from_matrix: matrix not square");
    Tensor2 t(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) t(i, j) = m(i, j);
    return t;
  }

 private:
  void same_dim(const Tensor2& o) const {
    StructureConstants::require(o.dim_ == dim_, "Tensor2: dimension mismatch");
  }
  std::size_t dim_ = 0;
  std::vector<GR> e_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), e_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  GR& operator()(std::size_t i, std::size_t j, std::size_t k) { return e_[(i * dim_ + j) * dim_ + k]; }
  const GR& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * dim_ + j) * dim_ + k];
  }
  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.dim_ == b.dim_ && a.e_ == b.e_; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) {
    StructureConstants::require(a.dim_ == b.dim_, "Tensor3: dimension mismatch");
    for (std::size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
    return a;
  }
  Tensor3 scaled(const GR& s) const {
    Tensor3 t = *this;
    for (auto& x : t.e_) x *= s;
    return t;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<GR> e_;
};

/// Sparse order-3 tensor; only nonzero entries are kept.
using SparseTensor3 = std::map<std::array<std::size_t, 3>, GR>;

/// x - x^21
inline Tensor2 wedge(const Tensor2& x) { return x - x.flip(); }

/// a ^ b = a (x) b - b (x) a
inline Tensor2 wedge(const Vector& a, const Vector& b) {
  Tensor2 t(a.size());
  t.add_outer(a, b);
  t.add_outer(b, a, GR(-1));
  return t;
}

namespace detail {
/// Nonzero entries of each column of m.
inline std::vector<std::vector<std::pair<std::size_t, GR>>> column_support(const GMatrix& m) {
  std::vector<std::vector<std::pair<std::size_t, GR>>> cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) cols[c].emplace_back(r, m(r, c));
  return cols;
}

inline Tensor2 apply_pair(const GMatrix& m, const Tensor2& x, bool conjugate) {
  std::size_t n = x.dim();
  StructureConstants::require(m.rows() == n && m.cols() == n, "apply_pair: dimension mismatch");
  auto cols = column_support(m);
  Tensor2 out(n);
  for (const auto& e : x.nonzeros()) {
    GR v = conjugate ? e.value.conj() : e.value;
    for (const auto& [a, ma] : cols[e.i])
      for (const auto& [b, mb] : cols[e.j]) out(a, b) += ma * v * mb;
  }
  return out;
}
}  // namespace detail

/// (s (x) s)(x) for the semilinear map s(v) = M conj(v); sparse in x and M.
inline Tensor2 apply_semilinear_pair(const GMatrix& linear_part, const Tensor2& x) {
  return detail::apply_pair(linear_part, x, true);
}

/// (A (x) A)(x) for a linear map A.
inline Tensor2 apply_linear_pair(const GMatrix& a, const Tensor2& x) { return detail::apply_pair(a, x, false); }

namespace detail {
inline void accumulate(SparseTensor3& acc, std::size_t a, std::size_t b, std::size_t c, const GR& v) {
  auto [it, inserted] = acc.try_emplace({a, b, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) acc.erase(it);
  }
}
}  // namespace detail

/// CYB(r) = [r12, r13] + [r12, r23] + [r13, r23], evaluated over the nonzero
/// entries of r only. Suitable for every rank, including E8.
inline SparseTensor3 cybe_sparse(const Tensor2& r, const StructureConstants& sc) {
  StructureConstants::require(r.dim() == sc.dim(), "cybe: tensor and structure table dimensions differ");
  auto nz = r.nonzeros();
  SparseTensor3 acc;
  for (const auto& p : nz) {      // r^{ab} x_a (x) x_b
    for (const auto& q : nz) {    // r^{cd} x_c (x) x_d
      GR w = p.value * q.value;
      // [r12, r13]: [x_a, x_c] (x) x_b (x) x_d
      for (const auto& t : sc.bracket(p.i, q.i)) detail::accumulate(acc, t.index, p.j, q.j, w * GR(t.coeff));
      // [r12, r23]: x_a (x) [x_b, x_c] (x) x_d
      for (const auto& t : sc.bracket(p.j, q.i)) detail::accumulate(acc, p.i, t.index, q.j, w * GR(t.coeff));
      // [r13, r23]: x_a (x) x_c (x) [x_b, x_d]
      for (const auto& t : sc.bracket(p.j, q.j)) detail::accumulate(acc, p.i, q.i, t.index, w * GR(t.coeff));
    }
  }
  return acc;
}

inline bool cybe_vanishes(const Tensor2& r, const StructureConstants& sc) { return cybe_sparse(r, sc).empty(); }

/// Dense CYB(r); materializes dim^3 entries.
inline Tensor3 cybe(const Tensor2& r, const StructureConstants& sc) {
  auto sparse = cybe_sparse(r, sc);
  Tensor3 out(r.dim());
  for (const auto& [idx, v] : sparse) out(idx[0], idx[1], idx[2]) = v;
  return out;
}

/// [s13, s23] for a tensor s: x_a (x) x_c (x) [x_b, x_d] weighted by s^{ab} s^{cd}.
inline SparseTensor3 bracket_13_23(const Tensor2& s, const StructureConstants& sc) {
  StructureConstants::require(s.dim() == sc.dim(), "bracket_13_23: dimension mismatch");
  auto nz = s.nonzeros();
  SparseTensor3 acc;
  for (const auto& p : nz)
    for (const auto& q : nz) {
      GR w = p.value * q.value;
      for (const auto& t : sc.bracket(p.j, q.j)) detail::accumulate(acc, p.i, q.i, t.index, w * GR(t.coeff));
    }
  return acc;
}

/// Contraction of x through the bracket: sum x^{ab} [x_a, x_b].
inline Vector bracket_contraction(const Tensor2& x, const StructureConstants& sc) {
  StructureConstants::require(x.dim() == sc.dim(), "bracket_contraction: dimension mismatch");
  Vector out(x.dim());
  for (const auto& e : x.nonzeros())
    for (const auto& t : sc.bracket(e.i, e.j)) out[t.index] += e.value * GR(t.coeff);
  return out;
}

/// ad_y applied to a tensor: [y (x) 1 + 1 (x) y, x].
inline Tensor2 ad_tensor(const Vector& y, const Tensor2& x, const StructureConstants& sc) {
  GMatrix ady = sc.ad(y);
  GMatrix m = x.as_matrix();
  return Tensor2::from_matrix(ady * m + m * ady.transpose());
}

}  // namespace liebialg
