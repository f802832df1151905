#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>

#include "cy3/mf/morphisms.hpp"
#include "oracle.hpp"

using namespace cy3;

namespace {

struct Tally {
  std::size_t cases = 0, hom_nonzero = 0, ext_nonzero = 0, nonuniform = 0, max_hom = 0, max_ext = 0;
};

void run_suite(std::uint32_t p, Tally& t) {
  for (const auto& c : oracle::small_suite(p)) {
    SCOPED_TRACE(c.name + " over F_" + std::to_string(p));
    const auto g = mf::GradedMF::create(c.f, c.d1, c.d0, c.alpha, c.beta);
    const auto h0 = oracle::mapping_cohomology(g, 0);
    const auto h1 = oracle::mapping_cohomology(g, 1);

    const auto hom = mf::hom_degree0(g);
    EXPECT_EQ(hom.cocycle_dim, h0.cocycles);
    EXPECT_EQ(hom.coboundary_dim, h0.coboundaries);
    EXPECT_EQ(hom.hom_dim, h0.dim());

    mf::MorphismOptions full;
    full.ext_method = mf::ExtMethod::kFull;
    const auto ext_full = mf::ext1(g, full);
    EXPECT_EQ(ext_full.hom_dim, h1.dim());
    EXPECT_EQ(ext_full.coboundary_dim, h1.coboundaries);
    EXPECT_EQ(ext_full.cocycle_dim, h1.cocycles);
    EXPECT_EQ(mf::ext1(g).hom_dim, h1.dim());
    if (g.uniform_twists()) {
      mf::MorphismOptions st;
      st.ext_method = mf::ExtMethod::kStructured;
      EXPECT_EQ(mf::ext1(g, st).hom_dim, h1.dim());
    } else {
      ++t.nonuniform;
    }

    // Emitted bases have the right size and consist of genuine cocycles.
    mf::MorphismOptions eb;
    eb.emit_basis = true;
    const auto hb = mf::hom_degree0(g, eb);
    ASSERT_EQ(hb.basis.size(), h0.dim());
    for (const auto& [A, B] : hb.basis) {
      EXPECT_TRUE(B * g.d1() == g.d1() * A);
      EXPECT_TRUE(A * g.d0() == g.d0() * B);
    }
    const auto eb1 = mf::ext1(g, eb);
    ASSERT_EQ(eb1.basis.size(), h1.dim());
    for (const auto& [A, B] : eb1.basis) {
      EXPECT_TRUE(B * g.d1() == g.d0() * A);
      EXPECT_TRUE(A * g.d0() == g.d1() * B);
    }

    ++t.cases;
    t.hom_nonzero += h0.dim() > 0;
    t.ext_nonzero += h1.dim() > 0;
    t.max_hom = std::max(t.max_hom, h0.dim());
    t.max_ext = std::max(t.max_ext, h1.dim());
  }
  std::cout << "F_" << p << ": " << t.cases << " factorizations, " << t.nonuniform << " with mixed twists, max Hom^0 "
            << t.max_hom << ", max Ext^1 " << t.max_ext << '\n';
}

}  // namespace

TEST(Oracle, DenseRankBasics) {
  EXPECT_EQ(oracle::dense_rank({{1, 2}, {2, 4}}, 5), 1u);
  EXPECT_EQ(oracle::dense_rank({{1, 2}, {2, 4}}, 313), 1u);
  EXPECT_EQ(oracle::dense_rank({{1, 2}, {3, 1}}, 5), 1u);  // 3*(1,2) = (3,1) mod 5
  EXPECT_EQ(oracle::dense_rank({{1, 2}, {3, 1}}, 313), 2u);
  EXPECT_EQ(oracle::dense_rank({}, 5), 0u);
}

TEST(Oracle, ExhaustiveSmallSuiteF5) {
  Tally t;
  run_suite(5, t);
  EXPECT_GT(t.cases, 700u);
  EXPECT_GT(t.hom_nonzero, 0u);
  EXPECT_GT(t.ext_nonzero, 0u);
  EXPECT_GT(t.nonuniform, 0u);
}

TEST(Oracle, ExhaustiveSmallSuiteF313) {
  Tally t;
  run_suite(313, t);
  EXPECT_GT(t.cases, 700u);
  EXPECT_GT(t.ext_nonzero, 0u);
}
