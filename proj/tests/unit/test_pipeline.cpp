#include <gtest/gtest.h>

#include <json.hpp>

#include "cy3/pipeline/hodge_models.hpp"
#include "cy3/pipeline/pipeline.hpp"
#include "oracle.hpp"

using namespace cy3;
using nlohmann::json;

namespace {

pipeline::RunConfig file_config(const std::string& name) {
  pipeline::RunConfig cfg;
  cfg.command = "verify-file";
  cfg.input = std::string(CY3_DATA_DIR "/factorizations/") + name;
  return cfg;
}

}  // namespace

TEST(RunConfig, Validate) {
  pipeline::RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  for (std::uint32_t p : {0u, 2u, 4u, 9u, 65537u}) {
    cfg = {};
    cfg.prime = p;
    EXPECT_THROW(cfg.validate(), std::invalid_argument) << p;
  }
  cfg = {};
  cfg.retries = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.height = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(RunFile, ToyIsSphericalAndReportIsDeterministic) {
  const auto cfg = file_config("toy_1x1.mf");
  const auto file = mf::read_mf_file(cfg.input);
  const auto a = pipeline::run_file(cfg, file), b = pipeline::run_file(cfg, file);
  ASSERT_EQ(a.attempts.size(), 1u);
  EXPECT_EQ(a.spherical.verdict, mf::Verdict::kSpherical);
  EXPECT_EQ(pipeline::to_json(a, false), pipeline::to_json(b, false));
  const auto j = json::parse(pipeline::to_json(a));
  EXPECT_EQ(j["schema"], "cy3.file-report/1");
  EXPECT_EQ(j["spherical"]["verdict"], "spherical");
  EXPECT_EQ(j["spherical"]["hom_dim"], 1);
  EXPECT_EQ(j["spherical"]["ext1_dim"], 0);
  EXPECT_TRUE(j["attempts"][0].contains("timings"));
  EXPECT_FALSE(json::parse(pipeline::to_json(a, false))["attempts"][0].contains("timings"));
}

TEST(RunFile, TwoByTwoIsNotSpherical) {
  const auto cfg = file_config("test_2x2.mf");
  const auto rep = pipeline::run_file(cfg, mf::read_mf_file(cfg.input));
  EXPECT_EQ(rep.spherical.verdict, mf::Verdict::kNotSpherical);
  EXPECT_EQ(rep.spherical.hom_dim, 2u);
  EXPECT_EQ(rep.spherical.ext1_dim, 0u);
  EXPECT_FALSE(rep.attempts[0].generic);
}

TEST(DescribePair, ScalarAndGeneral) {
  const poly::RingDescriptor r{1, 313, "x"};
  const auto I = poly::PolyMatrix::identity(r, 2);
  const auto s = pipeline::describe_pair(I, I);
  EXPECT_NE(s.find("I"), std::string::npos);
  poly::PolyMatrix A(r, 2, 2);
  A(0, 1) = poly::SparsePoly::variable(r, 0);
  EXPECT_NE(pipeline::describe_pair(A, I), s);
}

TEST(HodgeModels, BuiltInModels) {
  EXPECT_EQ(pipeline::hodge_model_names(), (std::vector<std::string>{"cubic7", "dqf5", "cubic4"}));
  const auto c7 = pipeline::run_hodge_model("cubic7");
  ASSERT_TRUE(c7.ok()) << c7.failed_clause;
  ASSERT_TRUE(c7.diamond);
  EXPECT_EQ((*c7.diamond)(1, 2), 84);
  EXPECT_EQ((*c7.diamond)(0, 3), 1);
  EXPECT_EQ(c7.ambient_hh->operator[](0), 8);
  const auto d5 = pipeline::run_hodge_model("dqf5");
  ASSERT_TRUE(d5.ok()) << d5.failed_clause;
  EXPECT_EQ((*d5.diamond)(1, 2), 90);
  EXPECT_EQ(d5.strip, 4);
  const auto c4 = pipeline::run_hodge_model("cubic4");
  ASSERT_TRUE(c4.ok()) << c4.failed_clause;
  EXPECT_FALSE(c4.diamond);
  EXPECT_EQ(c4.space_dims.at({1, 1}), 22u);
  EXPECT_EQ(c4.space_dims.at({2, 0}), 1u);
  EXPECT_THROW(pipeline::run_hodge_model("quintic"), std::invalid_argument);

  const auto j = json::parse(pipeline::to_json(c7));
  EXPECT_EQ(j["schema"], "cy3.hodge-report/1");
  EXPECT_TRUE(j["validation"]["ok"].get<bool>());
}

TEST(HodgeModels, CustomDocuments) {
  const auto via_file = pipeline::run_hodge_custom(oracle::read_file(CY3_DATA_DIR "/hodge/cubic7_hypersurface.json"));
  const auto builtin = pipeline::run_hodge_model("cubic7");
  ASSERT_TRUE(via_file.diamond);
  EXPECT_EQ(*via_file.diamond, *builtin.diamond);

  const auto cq = pipeline::run_hodge_custom(oracle::read_file(CY3_DATA_DIR "/hodge/cubic_quadric_p7.json"));
  EXPECT_TRUE(cq.ok()) << cq.failed_clause;
  EXPECT_EQ(cq.status.rfind("conjectural", 0), 0u);
  EXPECT_EQ((*cq.diamond)(1, 2), 83);

  // Odd HH_0 fails a clause but does not throw.
  const auto odd = pipeline::run_hodge_custom(R"({"profile": {"n": 3, "dims": {"-3": 1, "0": 3, "3": 1}}})");
  EXPECT_FALSE(odd.ok());

  EXPECT_THROW(pipeline::run_hodge_custom("{"), std::invalid_argument);
  EXPECT_THROW(pipeline::run_hodge_custom(R"({"strip": 2})"), std::invalid_argument);
  EXPECT_THROW(pipeline::run_hodge_custom(R"({"profile": {"n": 3, "dims": {}}, "weight": 5})"),
               std::invalid_argument);
}

TEST(Mirror, QuarterTurn) {
  const auto c7 = pipeline::run_hodge_model("cubic7");
  const auto z1 = hodge::diamond_from_json(oracle::read_file(CY3_DATA_DIR "/diamonds/z1.json"));
  const auto z3 = hodge::diamond_from_json(oracle::read_file(CY3_DATA_DIR "/diamonds/z3.json"));
  EXPECT_TRUE(pipeline::mirror_check(*c7.diamond, z1).match);
  EXPECT_FALSE(pipeline::mirror_check(*c7.diamond, z3).match);
  const auto j = json::parse(pipeline::to_json(pipeline::mirror_check(*c7.diamond, z1), "cubic7", "z1"));
  EXPECT_EQ(j["schema"], "cy3.mirror-report/1");
  EXPECT_TRUE(j["match"].get<bool>());
}
