#include <gtest/gtest.h>

#include "liebialg/rmatrix.hpp"

using namespace liebialg;

namespace {

GMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  GMatrix m(n, n);
  m(i, j) = GR(1);
  return m;
}

GMatrix commutator(const GMatrix& a, const GMatrix& b) { return a * b - b * a; }

GMatrix kron(const GMatrix& a, const GMatrix& b) {
  GMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero())
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Defining representation of sl(n+1) on the library basis: multiples of
// E_{i,i+1} and E_{i+1,i} for the simple root vectors, everything else forced
// by brackets; is_lie_hom then checks every pair.
std::vector<GMatrix> defining_rep(const RootSystem& rs) {
  std::size_t r = rs.rank(), n = r + 1, dim = rs.dim();
  const auto& sc = rs.structure();
  std::vector<GMatrix> rho(dim);
  for (std::size_t i = 0; i < r; ++i) {
    // h_i acts on x_i by some c; E_{i,i+1} and s E_{i+1,i} reproduce that when s = c / 2
    const auto& act = sc.bracket(rs.cartan_index(i), rs.root_vector_index(i));
    EXPECT_EQ(act.size(), 1u);
    GR s = GR(act[0].coeff) / GR(2);
    rho[rs.root_vector_index(i)] = unit(n, i, i + 1);
    rho[rs.root_vector_index(rs.negative(i))] = unit(n, i + 1, i).scaled(s);
    const auto& terms = sc.bracket(rs.root_vector_index(i), rs.root_vector_index(rs.negative(i)));
    EXPECT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].index, rs.cartan_index(i));
    rho[rs.cartan_index(i)] =
        commutator(unit(n, i, i + 1), rho[rs.root_vector_index(rs.negative(i))]).scaled(GR(1) / GR(terms[0].coeff));
  }
  for (std::size_t h = 2; h <= r; ++h)
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
      if (rs.height(k) != static_cast<int>(h)) continue;
      for (std::size_t sign = 0; sign < 2; ++sign) {
        std::size_t target = sign ? rs.negative(k) : k;
        for (std::size_t i = 0; i < r; ++i) {
          RootCoords rest = rs.root(target);
          rest[i] -= sign ? -1 : 1;
          std::size_t j = rs.find_root(rest);
          std::size_t si = sign ? rs.negative(i) : i;
          if (j == RootSystem::npos || rho[rs.root_vector_index(j)].rows() == 0) continue;
          GR coeff;
          for (const auto& t : sc.bracket(rs.root_vector_index(si), rs.root_vector_index(j)))
            if (t.index == rs.root_vector_index(target)) coeff = GR(t.coeff);
          rho[rs.root_vector_index(target)] =
              commutator(rho[rs.root_vector_index(si)], rho[rs.root_vector_index(j)]).scaled(GR(1) / coeff);
          break;
        }
      }
    }
  return rho;
}

bool is_lie_hom(const RootSystem& rs, const std::vector<GMatrix>& rho) {
  std::size_t dim = rs.dim(), n = rho[0].rows();
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      GMatrix img(n, n);
      for (const auto& t : rs.structure().bracket(a, b)) img = img + rho[t.index].scaled(GR(t.coeff));
      if (img != commutator(rho[a], rho[b])) return false;
    }
  return true;
}

// [r12, r13] + [r12, r23] + [r13, r23] in End(V (x) V (x) V)
GMatrix cyb_in_rep(const Tensor2& r, const std::vector<GMatrix>& rho) {
  std::size_t n = rho[0].rows();
  GMatrix id = GMatrix::identity(n);
  GMatrix r12(n * n * n, n * n * n), r13 = r12, r23 = r12;
  for (const auto& e : r.nonzeros()) {
    const GMatrix &a = rho[e.i], &b = rho[e.j];
    r12 = r12 + kron(kron(a, b), id).scaled(e.value);
    r13 = r13 + kron(kron(a, id), b).scaled(e.value);
    r23 = r23 + kron(kron(id, a), b).scaled(e.value);
  }
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

bool is_zero_matrix(const GMatrix& m) {
  for (const auto& x : m.data())
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST(RMatrix, DefiningRepresentationOracle) {
  for (int n : {1, 2}) {
    RootSystem rs(SimpleType{'A', n});
    auto rho = defining_rep(rs);
    ASSERT_TRUE(is_lie_hom(rs, rho));
    for (const auto& bd : enumerate_bd_triples(rs)) {
      auto ps = solve_parameters(rs, bd);
      std::vector<ContinuousParameter> probes{ps.base_point};
      for (std::size_t k = 0; k < ps.dimension(); ++k) {
        std::vector<GR> c(ps.dimension());
        c[k] = GR(Rational(1), Rational(-2));
        probes.push_back(ps.point(c));
      }
      for (const auto& p : probes)
        for (GR t : {GR(1), GR::i(), GR(Rational(3, 2))}) {
          Tensor2 r = build_r(rs, bd, p, t);
          EXPECT_TRUE(is_zero_matrix(cyb_in_rep(r, rho))) << n;
          EXPECT_TRUE(cybe_vanishes(r, rs.structure()));
          Tensor2 tomega = rs.casimir();
          tomega *= t;
          EXPECT_EQ(r + r.flip(), tomega);
        }
    }
  }
}

TEST(RMatrix, OffSolutionLambdaBreaksCybe) {
  RootSystem rs(SimpleType{'A', 2});
  auto rho = defining_rep(rs);
  auto bd = BDTriple::from_map({{0, 1}});
  auto p = solve_parameters(rs, bd).base_point;
  p.lambda(0, 1) += GR(1);
  p.lambda(1, 0) -= GR(1);
  Tensor2 r = cartan_tensor(rs, p.lambda) + root_part(rs, bd);
  EXPECT_FALSE(is_zero_matrix(cyb_in_rep(r, rho)));
  EXPECT_THROW(build_r(rs, bd, p, GR(1)), std::invalid_argument);
}

TEST(RMatrix, Sl2Explicit) {
  // r = t (Omega_0 / 2 + x_{-a} (x) x_a), the standard sl2 r-matrix
  RootSystem rs(SimpleType{'A', 1});
  auto p = solve_parameters(rs, BDTriple{}).base_point;
  Tensor2 r = build_r(rs, BDTriple{}, p, GR(1));
  std::size_t h = rs.cartan_index(0), e = rs.root_vector_index(0), f = rs.root_vector_index(1);
  Tensor2 expect(3);
  expect(h, h) = rs.casimir()(h, h) / GR(2);
  expect(f, e) = GR(1);
  EXPECT_EQ(r, expect);
  // Omega is the inverse of the Killing matrix
  EXPECT_EQ(rs.casimir().as_matrix() * rs.killing_matrix(), GMatrix::identity(3));
}

TEST(RMatrix, ExtensionOfTIsALieMap) {
  for (auto t : {SimpleType{'A', 4}, SimpleType{'D', 4}, SimpleType{'B', 3}}) {
    RootSystem rs(t);
    for (const auto& bd : enumerate_bd_triples(rs)) {
      auto ext = extend_T(rs, bd);
      EXPECT_EQ(ext.image.size(), span_positive_roots(rs, bd.gamma1).size());
      for (const auto& [a, ia] : ext.image) {
        EXPECT_EQ(rs.root(ia.root), *apply_T(bd, rs.root(a)));
        for (const auto& [b, ib] : ext.image) {
          int n = rs.chevalley_N(a, b);
          if (n == 0) continue;
          RootCoords sum = rs.root(a);
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rs.root(b)[i];
          auto c = ext.image.find(rs.find_root(sum));
          ASSERT_NE(c, ext.image.end());
          // theta[x_a, x_b] = [theta x_a, theta x_b]
          EXPECT_EQ(n * c->second.sign, ia.sign * ib.sign * rs.chevalley_N(ia.root, ib.root)) << t.name();
        }
      }
    }
  }
}

TEST(RMatrix, ExtractRecoversData) {
  for (auto t : {SimpleType{'A', 2}, SimpleType{'B', 2}, SimpleType{'A', 3}}) {
    RootSystem rs(t);
    auto split = canonical_involution(rs, InvolutionKind::varsigma, DiagramAutomorphism::identity(rs.rank()));
    for (const auto& bd : enumerate_bd_triples(rs)) {
      auto ps = apply_reality(solve_parameters(rs, bd), split);
      std::vector<GR> c(ps.dimension(), GR(Rational(-1, 3)));
      auto p = ps.point(c);
      GR tt(Rational(5, 2));
      auto ex = extract_data(rs, split, build_r0(rs, bd, p, tt));
      EXPECT_EQ(ex.t, tt);
      EXPECT_EQ(ex.bd, bd);
      EXPECT_EQ(ex.lambda, p);
      Vector h(rs.dim());
      for (std::size_t k = 0; k < rs.num_positive(); ++k) h = h + coroot_vector(rs, k);
      EXPECT_EQ(ex.H, (-tt) * h) << t.name();
    }
  }
}

TEST(RMatrix, VerifyFlagsRealityViolations) {
  RootSystem rs(SimpleType{'A', 1});
  auto p = solve_parameters(rs, BDTriple{}).base_point;
  auto compact = chevalley_involution(rs);
  auto good = verify_datum(rs, make_datum(rs, compact, BDTriple{}, p, GR::i()));
  EXPECT_TRUE(good.all());
  auto bad = verify_datum(rs, make_datum(rs, compact, BDTriple{}, p, GR(1)));
  EXPECT_FALSE(bad.sigma_fixed);
  EXPECT_FALSE(bad.reality_predicate);
  EXPECT_FALSE(bad.all());
  EXPECT_THROW(make_datum(rs, compact, BDTriple{}, p, GR(-1)), std::invalid_argument);
}

TEST(RMatrix, ConjugationByFlipIsInvolutiveAndClassifyMergesOrbits) {
  RootSystem rs(SimpleType{'A', 3});
  auto flip = *standard_flip(rs);
  auto split = canonical_involution(rs, InvolutionKind::varsigma, DiagramAutomorphism::identity(3));
  auto bd = BDTriple::from_map({{0, 1}});
  auto ps = apply_reality(solve_parameters(rs, bd), split);
  auto d = make_datum(rs, split, bd, ps.base_point, GR(1));
  auto c = conjugate_datum(rs, d, flip);
  EXPECT_EQ(c.bd, BDTriple::from_map({{2, 1}}));
  EXPECT_EQ(conjugate_datum(rs, c, flip).r, d.r);
  // (psi (x) psi) r0 = conjugated r0
  EXPECT_EQ(apply_linear_pair(diagram_lie_automorphism(rs, flip), d.r0), c.r0);
  auto classes = classify(rs, {d, c});
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].members, (std::vector<std::size_t>{0, 1}));
}
