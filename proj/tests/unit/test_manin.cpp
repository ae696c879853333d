#include <gtest/gtest.h>

#include "liebialg/manin.hpp"

using namespace liebialg;

namespace {

std::vector<BialgebraDatum> admissible_data(const RootSystem& rs) {
  std::vector<BialgebraDatum> out;
  for (const auto& s : all_canonical_involutions(rs)) {
    auto kind = reality_kind_of(s);
    if (kind != RealityKind::real && kind != RealityKind::imaginary) continue;
    GR t = kind == RealityKind::real ? GR(1) : GR(Rational(0), Rational(2));
    for (const auto& bd : enumerate_bd_triples(rs)) {
      ParameterSpace ps;
      try {
        ps = apply_reality(solve_parameters(rs, bd), s);
      } catch (const std::domain_error&) {
        continue;
      }
      std::vector<GR> c(ps.dimension(), GR(Rational(1, 2)));
      out.push_back(make_datum(rs, s, bd, ps.point(c), t));
    }
  }
  return out;
}

bool zero(const QMatrix& m) {
  for (const auto& x : m.data())
    if (x != 0) return false;
  return true;
}

// Jacobi identity of arbitrary real structure constants
bool jacobi(const StructureConstants& sc) {
  std::size_t n = sc.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rational> acc(n);
        auto add = [&](std::size_t x, std::size_t y, std::size_t z) {
          for (const auto& t : sc.bracket(y, z))
            for (const auto& u : sc.bracket(x, t.index)) acc[u.index] += t.coeff * u.coeff;
        };
        add(a, b, c);
        add(b, c, a);
        add(c, a, b);
        for (const auto& v : acc)
          if (v != 0) return false;
      }
  return true;
}

}  // namespace

TEST(Manin, Sl2AndSl3BothBranches) {
  for (int n : {1, 2}) {
    RootSystem rs(SimpleType{'A', n});
    bool saw_real = false, saw_imag = false;
    for (const auto& d : admissible_data(rs)) {
      auto m = manin_triple(rs, d);
      SCOPED_TRACE(rs.type().name() + " " + table_row(d));
      (m.kind == ManinCase::factorizable ? saw_real : saw_imag) = true;
      EXPECT_EQ(m.double_dim, 2 * rs.dim());
      // direct checks on the returned matrices
      EXPECT_TRUE(zero(m.sub1.transpose() * m.pairing * m.sub1));
      EXPECT_TRUE(zero(m.sub2.transpose() * m.pairing * m.sub2));
      EXPECT_EQ(rank(m.sub1), rs.dim());
      EXPECT_EQ(rank(m.sub2), rs.dim());
      QMatrix both(m.double_dim, m.double_dim);
      for (std::size_t i = 0; i < m.double_dim; ++i)
        for (std::size_t j = 0; j < rs.dim(); ++j) {
          both(i, j) = m.sub1(i, j);
          both(i, rs.dim() + j) = m.sub2(i, j);
        }
      EXPECT_EQ(rank(both), m.double_dim);
      EXPECT_EQ(rank(m.pairing), m.double_dim);
      EXPECT_TRUE(jacobi(m.bracket));
      EXPECT_TRUE(verify_manin(rs, d, m).all());
      if (m.kind == ManinCase::imaginary_factorizable) {
        EXPECT_TRUE(verify_psi_phi(rs, d, m).all());
      }
    }
    EXPECT_TRUE(saw_real);
    EXPECT_TRUE(saw_imag);
  }
}

TEST(Manin, PsiAndPhiAreInverse) {
  auto pp = psi_phi(4);
  EXPECT_EQ(pp.psi * pp.phi, GMatrix::identity(8));
  EXPECT_EQ(pp.phi * pp.psi, GMatrix::identity(8));
}

TEST(Manin, DualBracketIsALieAlgebra) {
  RootSystem rs(SimpleType{'A', 2});
  auto bd = BDTriple::from_map({{0, 1}});
  auto ps = solve_parameters(rs, bd);
  auto r = build_r(rs, bd, ps.base_point, GR(1));
  auto dual = dual_bracket(rs, r);
  std::size_t n = dual.dim();
  // complex structure constants: check Jacobi with exact GR arithmetic
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector x = basis_vector(n, a), y = basis_vector(n, b), z = basis_vector(n, c);
        Vector s = dual.bracket(x, dual.bracket(y, z)) + dual.bracket(y, dual.bracket(z, x)) + dual.bracket(z, dual.bracket(x, y));
        ASSERT_TRUE(is_zero(s)) << a << " " << b << " " << c;
      }
  EXPECT_TRUE(factorization_form_identity(rs, factorization_maps(r), GR(1)));
}

TEST(Manin, CobracketFromDoubleMatchesR0) {
  RootSystem rs(SimpleType{'A', 1});
  auto compact = chevalley_involution(rs);
  auto ps = apply_reality(solve_parameters(rs, BDTriple{}), compact);
  auto d = make_datum(rs, compact, BDTriple{}, ps.base_point, GR::i());
  auto m = manin_triple(rs, d);
  EXPECT_EQ(m.kind, ManinCase::imaginary_factorizable);
  auto a = induced_cobracket(m);
  auto b = cobracket_from_r0(rs, d);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
}
