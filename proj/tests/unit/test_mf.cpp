#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cy3/error.hpp"
#include "cy3/mf/io.hpp"
#include "cy3/mf/morphisms.hpp"
#include "oracle.hpp"

using namespace cy3;
using mf::GradedMF;
using poly::PolyMatrix;
using poly::RingDescriptor;
using poly::SparsePoly;

namespace {

const RingDescriptor kR1{1, 313, "x"};
const RingDescriptor kR3{3, 313, "x"};

SparsePoly x1() { return SparsePoly::variable(kR1, 0); }

GradedMF toy(unsigned a, unsigned b) {
  return GradedMF::uniform(poly::poly_pow(x1(), a + b), PolyMatrix::scalar(poly::poly_pow(x1(), a), 1),
                           PolyMatrix::scalar(poly::poly_pow(x1(), b), 1));
}

// Cofactor adjugate of a 3x3 matrix, written out by hand.
PolyMatrix cofactor_adjugate(const PolyMatrix& m) {
  PolyMatrix adj(m.ring(), 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj;
}

SparsePoly det3(const PolyMatrix& m) {
  const auto adj = cofactor_adjugate(m);
  return m(0, 0) * adj(0, 0) + m(0, 1) * adj(1, 0) + m(0, 2) * adj(2, 0);
}

PolyMatrix random_symmetric_linear(std::mt19937_64& rng) {
  PolyMatrix m(kR3, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      SparsePoly e(kR3);
      for (std::size_t v = 0; v < 3; ++v) e += SparsePoly::variable(kR3, v).scaled(static_cast<long>(rng() % 313));
      m(i, j) = e;
      m(j, i) = e;
    }
  }
  return m;
}

mf::MFFile parse(const std::string& text) {
  std::istringstream in(text);
  return mf::parse_mf_file(in);
}

void expect_parse_error(const std::string& text, std::size_t line, const std::string& field) {
  try {
    parse(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.field(), field) << e.what();
  }
}

}  // namespace

TEST(Verify, ReportsFirstResidual) {
  const auto x = x1();
  const auto d1 = PolyMatrix::scalar(x, 1), d0 = PolyMatrix::scalar(x * x, 1);
  EXPECT_TRUE(mf::mf_verify(poly::poly_pow(x, 3), d1, d0).ok);
  const auto bad = mf::mf_verify(poly::poly_pow(x, 3).scaled(2), d1, d0);
  ASSERT_FALSE(bad.ok);
  ASSERT_TRUE(bad.residual);
  EXPECT_EQ(*bad.residual, poly::poly_pow(x, 3).scaled(-1));
  EXPECT_NE(bad.describe().find("(1,1)"), std::string::npos);
  EXPECT_THROW(mf::mf_verify(x, d1, PolyMatrix(kR1, 2, 2)), std::invalid_argument);
}

TEST(GradedMF, CreateChecksIdentityAndDegrees) {
  const auto x = x1();
  EXPECT_THROW(GradedMF::uniform(poly::poly_pow(x, 4), PolyMatrix::scalar(x, 1), PolyMatrix::scalar(x * x, 1)),
               mf::MFError);
  try {
    GradedMF::uniform(poly::poly_pow(x, 3).scaled(2), PolyMatrix::scalar(x, 1), PolyMatrix::scalar(x * x, 1));
    ADD_FAILURE();
  } catch (const mf::MFError& e) {
    EXPECT_FALSE(e.report().ok);
  }
  // Right identity, wrong twist for the d1 entry.
  EXPECT_THROW(GradedMF::create(poly::poly_pow(x, 3), PolyMatrix::scalar(x, 1), PolyMatrix::scalar(x * x, 1), {2}, {0}),
               mf::MFError);
  const auto g = toy(1, 2);
  EXPECT_EQ(g.degree(), 3);
  EXPECT_EQ(g.alpha(), std::vector<int>{1});
  EXPECT_EQ(g.beta(), std::vector<int>{0});
  EXPECT_TRUE(g.uniform_twists());
}

TEST(GradedMF, UniformRejectsMixedDegrees) {
  const RingDescriptor r{2, 313, "x"};
  const auto x = SparsePoly::variable(r, 0), y = SparsePoly::variable(r, 1);
  // diag(x, y^2) | diag(x y^2, x^2) over f = x^2 y^2.
  PolyMatrix d1(r, 2, 2), d0(r, 2, 2);
  d1(0, 0) = x;
  d1(1, 1) = y * y;
  d0(0, 0) = x * y * y;
  d0(1, 1) = x * x;
  const auto f = x * x * y * y;
  EXPECT_THROW(GradedMF::uniform(f, d1, d0), std::exception);
  const auto g = GradedMF::create(f, d1, d0, {1, 2}, {0, 0});
  EXPECT_FALSE(g.uniform_twists());
}

TEST(GradedMF, DirectSum) {
  const auto s = mf::direct_sum(toy(1, 2), toy(2, 1));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.alpha(), (std::vector<int>{1, 2}));
  EXPECT_TRUE(mf::mf_verify(s.f(), s.d1(), s.d0()).ok);
  EXPECT_THROW(mf::direct_sum(toy(1, 2), toy(1, 1)), std::invalid_argument);
}

TEST(Adjugate, SymmetricLinearThreeByThree) {
  std::mt19937_64 rng(31);
  int solved = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto M = random_symmetric_linear(rng);
    const auto f = det3(M);
    if (f.is_zero()) continue;
    const auto res = mf::adjugate_partner(M, f);
    ASSERT_TRUE(res.partner) << res.diagnosis;
    EXPECT_TRUE(mf::mf_verify(f, M, *res.partner).ok);
    // For generic M the partner is unique, hence the classical adjugate.
    if (res.kernel_dim == 0) {
      EXPECT_EQ(*res.partner, cofactor_adjugate(M));
    }
    ++solved;
  }
  EXPECT_GE(solved, 15);
}

TEST(Adjugate, NoPartnerForTheWrongPolynomial) {
  std::mt19937_64 rng(4);
  const auto M = random_symmetric_linear(rng);
  const auto f = det3(M) + poly::poly_pow(SparsePoly::variable(kR3, 0), 3);
  const auto res = mf::adjugate_partner(M, f);
  EXPECT_FALSE(res.partner);
  EXPECT_FALSE(res.diagnosis.empty());
  EXPECT_THROW(mf::adjugate_partner(PolyMatrix(kR3, 2, 3), f), std::invalid_argument);
}

TEST(Morphisms, KnownSmallValues) {
  // (x | x^2) is indecomposable with endomorphisms the scalars.
  const auto g = toy(1, 2);
  const auto h = mf::hom_degree0(g);
  const auto e = mf::ext1(g);
  EXPECT_EQ(h.hom_dim, 1u);
  EXPECT_EQ(e.hom_dim, 0u);
  EXPECT_EQ(mf::spherical_check(g).verdict, mf::Verdict::kSpherical);
  // Two copies: 2x2 scalar matrices.
  const auto s = mf::direct_sum(g, g);
  EXPECT_EQ(mf::hom_degree0(s).hom_dim, 4u);
  // (1 | f) is contractible.
  const auto triv = GradedMF::uniform(poly::poly_pow(x1(), 3), PolyMatrix::scalar(SparsePoly::constant(kR1, 1), 1),
                                      PolyMatrix::scalar(poly::poly_pow(x1(), 3), 1));
  EXPECT_EQ(mf::hom_degree0(triv).hom_dim, 0u);
}

TEST(Morphisms, AgreeWithOracleOnKoszulCase) {
  const RingDescriptor r{2, 313, "x"};
  const auto x = SparsePoly::variable(r, 0), y = SparsePoly::variable(r, 1);
  PolyMatrix d1(r, 2, 2), d0(r, 2, 2);
  d1(0, 0) = x;
  d1(0, 1) = y;
  d1(1, 1) = x + y;
  d0(0, 0) = x * (x + y);
  d0(0, 1) = -(x * y);
  d0(1, 1) = x * x;
  const auto f = x * x * (x + y);
  const auto g = GradedMF::uniform(f, d1, d0);
  EXPECT_EQ(mf::hom_degree0(g).hom_dim, oracle::mapping_cohomology(g, 0).dim());
  EXPECT_EQ(mf::ext1(g).hom_dim, oracle::mapping_cohomology(g, 1).dim());
}

TEST(SphericalReport, VerdictLogic) {
  using mf::Verdict;
  EXPECT_EQ(mf::spherical_report(1, 0).verdict, Verdict::kSpherical);
  EXPECT_EQ(mf::spherical_report(2, 0).verdict, Verdict::kNotSpherical);
  EXPECT_EQ(mf::spherical_report(1, 3).verdict, Verdict::kNotSpherical);
  EXPECT_EQ(mf::spherical_report(2, std::nullopt).verdict, Verdict::kNotSpherical);
  EXPECT_EQ(mf::spherical_report(1, std::nullopt).verdict, Verdict::kInconclusive);
  EXPECT_EQ(mf::spherical_report(std::nullopt, std::nullopt).verdict, Verdict::kInconclusive);
  const auto rep = mf::spherical_report(1, 0);
  EXPECT_EQ(rep.inferred, (std::map<int, std::size_t>{{0, 1}, {1, 0}, {2, 0}, {3, 1}}));
  EXPECT_STREQ(mf::verdict_name(Verdict::kSpherical), "spherical");
}

TEST(MFFile, ParsesToyAndRoundTrips) {
  const auto file = mf::read_mf_file(CY3_DATA_DIR "/factorizations/toy_1x1.mf");
  EXPECT_EQ(file.header.n, 1u);
  EXPECT_EQ(file.header.p, 313u);
  EXPECT_EQ(file.f, poly::poly_pow(x1(), 3));
  const auto g = mf::load_factorization(file);
  std::stringstream ss;
  mf::write_mf_file(ss, g);
  const auto back = mf::load_factorization(mf::parse_mf_file(ss));
  EXPECT_EQ(back.d1(), g.d1());
  EXPECT_EQ(back.d0(), g.d0());
  EXPECT_EQ(back.f(), g.f());
}

TEST(MFFile, SelfAdjointAndTestCase) {
  const auto self = parse("# x^2 = x * x\n1 1 7 2 1 1\nx1\nSELF\n");
  EXPECT_TRUE(self.header.self_adjoint);
  EXPECT_EQ(self.d0, self.d1);
  const auto g = mf::load_factorization(mf::read_mf_file(CY3_DATA_DIR "/factorizations/test_2x2.mf"));
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(mf::hom_degree0(g).hom_dim, 2u);
}

TEST(MFFile, ErrorsNameLineAndField) {
  expect_parse_error("0 1 7 2 1 1\n", 1, "n");
  expect_parse_error("1 0 7 2 1 1\n", 1, "m");
  expect_parse_error("1 65 7 2 1 1\n", 1, "m");
  expect_parse_error("1 1 9 2 1 1\n", 1, "p");
  expect_parse_error("1 1 7 3 1 1\n", 1, "d");
  expect_parse_error("1 1 7 2 1\n", 1, "degB");
  expect_parse_error("1 1 7 2 1 x\n", 1, "degB");
  expect_parse_error("1 1 7 2 1 1 5\n", 1, "header");
  expect_parse_error("# c\n\n1 1 7 3 1 2\nx1^2\nx1^2\n", 4, "d1(1,1)");
  expect_parse_error("1 1 7 3 1 2\nx1\n", 3, "d0(1,1)");
  expect_parse_error("1 1 7 3 1 2\nx1\nSELF\n", 3, "SELF");
  expect_parse_error("1 1 7 3 1 2\nx1\nx1^2\nx1\n", 4, "trailing");
  // f is read off the (1,1) entry, so only the remaining entries can disagree.
  const auto file = parse("1 1 7 3 1 2\nx1\n2 x1^2\n");
  EXPECT_NO_THROW(mf::load_factorization(file));
  const auto bad = parse("2 1 7 2 1 1\nx1\n0\n0\nx1\nx1\n0\n0\n2 x1\n");
  EXPECT_THROW(mf::load_factorization(bad), mf::MFError);
}
