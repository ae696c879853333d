#include <gtest/gtest.h>

#include "liebialg/parameter.hpp"
#include "liebialg/realform.hpp"

using namespace liebialg;

namespace {

struct Expected {
  SimpleType type;
  InvolutionKind kind;
  bool mu_is_id;
  std::vector<std::size_t> J;  // 0-based
  std::string name;
  int dim_k;  // from the maximal compact subalgebra of the named form
};

int su_k(int p, int q) { return p * p + q * q - 1; }
int so_k(int p, int q) { return p * (p - 1) / 2 + q * (q - 1) / 2; }

// hand table of classical real forms
std::vector<Expected> table() {
  using K = InvolutionKind;
  return {
      {{'A', 1}, K::varsigma, true, {}, "sl(2,R)", 1},
      {{'A', 1}, K::omega, true, {0}, "su(2)", 3},
      {{'A', 1}, K::omega, true, {}, "su(1,1)", su_k(1, 1)},
      {{'A', 2}, K::varsigma, true, {}, "sl(3,R)", 3},
      {{'A', 2}, K::varsigma, false, {}, "su(1,2)", su_k(1, 2)},
      {{'A', 2}, K::omega, true, {0, 1}, "su(3)", 8},
      {{'A', 2}, K::omega, true, {0}, "su(2,1)", su_k(2, 1)},
      {{'A', 2}, K::omega, true, {1}, "su(1,2)", su_k(1, 2)},
      {{'A', 2}, K::omega, false, {}, "sl(3,R)", 3},
      {{'A', 3}, K::varsigma, true, {}, "sl(4,R)", 6},
      {{'A', 3}, K::varsigma, false, {}, "su(2,2)", su_k(2, 2)},
      {{'A', 3}, K::omega, true, {0, 1, 2}, "su(4)", 15},
      {{'A', 3}, K::omega, true, {0, 1}, "su(3,1)", su_k(3, 1)},
      {{'A', 3}, K::omega, true, {0, 2}, "su(2,2)", su_k(2, 2)},
      {{'A', 3}, K::omega, true, {1, 2}, "su(1,3)", su_k(1, 3)},
      {{'A', 3}, K::omega, false, {1}, "sl(2,H)", 10},  // sp(2)
      {{'A', 3}, K::omega, false, {}, "sl(4,R)", 6},
      {{'B', 2}, K::varsigma, true, {}, "so(2,3)", so_k(2, 3)},
      {{'B', 2}, K::omega, true, {0, 1}, "so(5)", 10},
      {{'B', 2}, K::omega, true, {0}, "so(4,1)", so_k(4, 1)},
      {{'B', 2}, K::omega, true, {1}, "so(2,3)", so_k(2, 3)},
      {{'G', 2}, K::varsigma, true, {}, "G", 6},  // su(2) + su(2)
      {{'G', 2}, K::omega, true, {0, 1}, "g2", 14},
      {{'G', 2}, K::omega, true, {0}, "G", 6},
      {{'G', 2}, K::omega, true, {1}, "G", 6},
  };
}

Involution involution_for(const RootSystem& rs, const Expected& e) {
  DiagramAutomorphism mu = DiagramAutomorphism::identity(rs.rank());
  if (!e.mu_is_id) mu = *standard_flip(rs);
  return canonical_involution(rs, e.kind, mu, e.J);
}

}  // namespace

TEST(Involution, CanonicalInvolutionsAreInvolutiveAutomorphisms) {
  for (auto t : {SimpleType{'A', 3}, SimpleType{'B', 2}, SimpleType{'G', 2}, SimpleType{'D', 4}}) {
    RootSystem rs(t);
    for (const auto& s : all_canonical_involutions(rs)) {
      EXPECT_TRUE(squares_to_identity(s)) << t.name();
      EXPECT_TRUE(is_lie_homomorphism(rs, s)) << t.name();
    }
  }
}

TEST(Involution, CanonicalCountIsSumOverMuOfSubsets) {
  for (auto t : {SimpleType{'A', 3}, SimpleType{'D', 4}, SimpleType{'E', 6}}) {
    RootSystem rs(t);
    std::size_t expect = 0;
    for (const auto& mu : diagram_automorphisms(rs)) expect += 1 + (std::size_t{1} << mu.fixed_points().size());
    EXPECT_EQ(all_canonical_involutions(rs).size(), expect) << t.name();
  }
}

TEST(Involution, RejectsJOutsideFixedVertices) {
  RootSystem rs(SimpleType{'A', 3});
  EXPECT_THROW(canonical_involution(rs, InvolutionKind::omega, *standard_flip(rs), {0}), std::invalid_argument);
  EXPECT_THROW(canonical_involution(rs, InvolutionKind::varsigma, DiagramAutomorphism::identity(3), {0}),
               std::invalid_argument);
}

TEST(RealForm, NamesAndInvariantsMatchClassicalTable) {
  for (const auto& e : table()) {
    RootSystem rs(e.type);
    auto rep = identify(rs, involution_for(rs, e));
    SCOPED_TRACE(e.type.name() + " " + e.name);
    EXPECT_EQ(rep.name, e.name);
    EXPECT_EQ(rep.dim_k, e.dim_k);
    EXPECT_EQ(rep.dim_k + rep.dim_p, static_cast<int>(rs.dim()));
    EXPECT_EQ(rep.character, rep.dim_p - rep.dim_k);
    EXPECT_EQ(rep.dc + rep.dnc, e.type.rank);
    EXPECT_TRUE(rep.theta_form_definite);
    EXPECT_TRUE(rep.name_consistent);
  }
}

TEST(RealForm, SplitAndCompactExtremes) {
  for (auto t : {SimpleType{'A', 3}, SimpleType{'B', 3}, SimpleType{'C', 3}, SimpleType{'D', 4}, SimpleType{'G', 2}}) {
    RootSystem rs(t);
    auto split = identify(rs, canonical_involution(rs, InvolutionKind::varsigma, DiagramAutomorphism::identity(rs.rank())));
    EXPECT_EQ(split.dc, 0) << t.name();
    EXPECT_EQ(split.dnc, t.rank) << t.name();
    EXPECT_EQ(split.character, t.rank) << t.name();
    auto compact = identify(rs, chevalley_involution(rs));
    EXPECT_EQ(compact.character, -static_cast<int>(rs.dim())) << t.name();
    EXPECT_EQ(compact.dnc, 0) << t.name();
  }
}

TEST(RealForm, TwoPaintedVerticesAreUnnormalized) {
  RootSystem rs(SimpleType{'A', 3});
  auto rep = identify(rs, canonical_involution(rs, InvolutionKind::omega, DiagramAutomorphism::identity(3), {1}));
  EXPECT_EQ(rep.name, "unnormalized");
  EXPECT_EQ(rep.vogan_painted, (std::vector<std::size_t>{0, 2}));
}

TEST(RealForm, ExceptionalExtremes) {
  RootSystem f4(SimpleType{'F', 4});
  auto id = DiagramAutomorphism::identity(4);
  auto fi = identify(f4, canonical_involution(f4, InvolutionKind::omega, id, {1, 2, 3}));
  auto fii = identify(f4, canonical_involution(f4, InvolutionKind::omega, id, {0, 1, 2}));
  EXPECT_EQ(fi.name, "FI");
  EXPECT_EQ(fi.dim_k, 24);  // sp(3) + su(2)
  EXPECT_EQ(fii.name, "FII");
  EXPECT_EQ(fii.dim_k, 36);  // so(9)
}

TEST(RealForm, RealityKindOfCanonicalInvolutions) {
  RootSystem rs(SimpleType{'A', 2});
  auto id = DiagramAutomorphism::identity(2);
  auto mu = *standard_flip(rs);
  EXPECT_EQ(reality_kind_of(canonical_involution(rs, InvolutionKind::varsigma, id)), RealityKind::real);
  EXPECT_EQ(reality_kind_of(canonical_involution(rs, InvolutionKind::varsigma, mu)), RealityKind::conjugate_mu);
  EXPECT_EQ(reality_kind_of(canonical_involution(rs, InvolutionKind::omega, id, {0})), RealityKind::imaginary);
  EXPECT_EQ(reality_kind_of(canonical_involution(rs, InvolutionKind::omega, mu)), RealityKind::anti_conjugate_mu);
}
