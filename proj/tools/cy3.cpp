// cy3: Det golden check, E6 and file-based sphericity runs, Hodge models,
// mirror rotation. Exit codes: 0 success/match, 1 mathematical verdict
// failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cy3/algebra/jordan.hpp"
#include "cy3/error.hpp"
#include "cy3/pipeline/hodge_models.hpp"
#include "cy3/pipeline/pipeline.hpp"
#include "cy3/poly/text_format.hpp"

#ifndef CY3_DEFAULT_DATA_DIR
#define CY3_DEFAULT_DATA_DIR "data"
#endif

namespace {

using cy3::pipeline::RunConfig;

constexpr int kOk = 0, kVerdict = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

int cmd_det(const RunConfig& cfg, const std::string& golden, bool no_golden) {
  const std::string text = cy3::poly::to_text(cy3::algebra::e6_cubic());
  if (no_golden) {
    emit(cfg, text);
    return kOk;
  }
  if (!cfg.output.empty()) emit(cfg, text);
  const std::string expected = slurp(golden);
  if (expected == text) {
    std::cerr << "det: " << lines_of(text).size() << " terms, byte-identical to " << golden << '\n';
    return kOk;
  }
  // Term-level diff: one line per term in both files.
  const auto a = lines_of(text), b = lines_of(expected);
  const std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::size_t differing = 0;
  for (const auto& t : b) {
    if (!sa.count(t)) std::cerr << "- " << t << "   (golden only)\n", ++differing;
  }
  for (const auto& t : a) {
    if (!sb.count(t)) std::cerr << "+ " << t << "   (computed only)\n";
  }
  if (differing == 0) std::cerr << "det: same terms, different bytes (order or whitespace)\n";
  std::cerr << "det: mismatch against " << golden << '\n';
  return kVerdict;
}

cy3::pipeline::Logger stderr_logger() {
  return [](const std::string& s) { std::cerr << s << '\n'; };
}

int report_exit(const cy3::pipeline::PipelineReport& rep) {
  std::cerr << "verdict: " << cy3::mf::verdict_name(rep.spherical.verdict) << '\n';
  return rep.spherical.verdict == cy3::mf::Verdict::kSpherical ? kOk : kVerdict;
}

int cmd_verify_e6(const RunConfig& cfg) {
  const auto rep = cy3::pipeline::run_e6(cfg, stderr_logger());
  emit(cfg, cy3::pipeline::to_json(rep));
  if (!rep.accepted) std::cerr << "verify-e6: no generic seed within the retry budget\n";
  return report_exit(rep);
}

int cmd_verify_file(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("verify-file needs --input");
  cy3::mf::MFFile file;
  try {
    file = cy3::mf::read_mf_file(cfg.input);
  } catch (const cy3::ParseError& e) {
    std::cerr << cfg.input << ": " << e.what() << '\n';
    return kUsage;
  }
  try {
    const auto rep = cy3::pipeline::run_file(cfg, file, stderr_logger());
    emit(cfg, cy3::pipeline::to_json(rep));
    return report_exit(rep);
  } catch (const cy3::mf::MFError& e) {
    std::cerr << cfg.input << ": not a matrix factorization: " << e.what() << '\n';
    return kVerdict;
  }
}

int cmd_hodge(const RunConfig& cfg) {
  cy3::pipeline::HodgeModelReport rep;
  try {
    if (cfg.subcommand == "custom-json") {
      if (cfg.input.empty()) throw UsageError("hodge custom-json needs --input");
      rep = cy3::pipeline::run_hodge_custom(slurp(cfg.input));
    } else {
      rep = cy3::pipeline::run_hodge_model(cfg.subcommand);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const cy3::hodge::HodgeValidationError& e) {
    std::cerr << "hodge: clause failed: " << e.clause() << '\n';
    return kVerdict;
  }
  emit(cfg, cy3::pipeline::to_json(rep));
  if (rep.diamond && cfg.verbosity > 0) std::cerr << cy3::hodge::render(*rep.diamond);
  if (!rep.status.empty()) std::cerr << "status: " << rep.status << '\n';
  if (!rep.ok()) {
    std::cerr << "hodge: clause failed: " << rep.failed_clause << '\n';
    return kVerdict;
  }
  return kOk;
}

// A model name with a computed diamond, or a path to a diamond JSON file.
cy3::hodge::HodgeDiamond resolve_diamond(const std::string& what) {
  const auto& names = cy3::pipeline::hodge_model_names();
  if (std::find(names.begin(), names.end(), what) != names.end()) {
    const auto rep = cy3::pipeline::run_hodge_model(what);
    if (!rep.diamond) throw UsageError(what + " has no weight-3 diamond");
    return *rep.diamond;
  }
  try {
    return cy3::hodge::diamond_from_json(slurp(what));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

int cmd_mirror(const RunConfig& cfg, const std::string& a, const std::string& b) {
  const auto m = cy3::pipeline::mirror_check(resolve_diamond(a), resolve_diamond(b));
  emit(cfg, cy3::pipeline::to_json(m, a, b));
  std::cerr << "mirror: " << (m.match ? "match" : "no match") << '\n';
  return m.match ? kOk : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix factorizations of the E6 cubic and Hodge numbers of CY3 categories"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* c) {
    c->add_option("-o,--output", cfg.output, "Write the report here instead of stdout");
    c->add_flag("-v,--verbose", cfg.verbosity, "More log output on stderr (repeatable)");
  };
  const auto run_opts = [&](CLI::App* c) {
    c->add_option("--prime", cfg.prime, "Field characteristic")->capture_default_str();
    c->add_option("--seed", cfg.seed, "First seed")->capture_default_str();
    c->add_option("--height", cfg.height, "Entry bound for the restriction matrix")->capture_default_str();
    c->add_option("--retries", cfg.retries, "Extra seeds to try after a non-generic one")->capture_default_str();
    c->add_flag("--emit-basis", cfg.emit_basis, "Compute and print morphism bases");
  };

  std::string golden = std::string(CY3_DEFAULT_DATA_DIR) + "/det_e6.txt";
  bool no_golden = false;
  auto* det = app.add_subcommand("det", "Expand Det on the 27-dimensional Jordan algebra and compare with the golden file");
  det->add_option("--golden", golden, "Golden expansion")->capture_default_str();
  det->add_flag("--no-golden", no_golden, "Only print the expansion");
  common(det);

  auto* e6 = app.add_subcommand("verify-e6", "Hom^0 and Ext^1 of the Hessian factorization on a random 9-dimensional section");
  run_opts(e6);
  common(e6);

  auto* vf = app.add_subcommand("verify-file", "Hom^0 and Ext^1 of a factorization read from a file");
  vf->add_option("-i,--input", cfg.input, "Factorization file")->required();
  run_opts(vf);
  common(vf);

  auto* hodge = app.add_subcommand("hodge", "Hodge numbers of a CY category from a model");
  hodge->add_option("model", cfg.subcommand, "cubic7 | dqf5 | cubic4 | custom-json")
      ->required()
      ->check(CLI::IsMember({"cubic7", "dqf5", "cubic4", "custom-json"}));
  hodge->add_option("-i,--input", cfg.input, "Model document for custom-json");
  common(hodge);

  std::string mirror_a, mirror_b;
  auto* mirror = app.add_subcommand("mirror", "Does the quarter turn of diamond A equal diamond B?");
  mirror->add_option("a", mirror_a, "Model name or diamond JSON")->required();
  mirror->add_option("b", mirror_b, "Model name or diamond JSON")->required();
  common(mirror);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.validate();
    if (*det) return cmd_det(cfg, golden, no_golden);
    if (*e6) return cmd_verify_e6(cfg);
    if (*vf) return cmd_verify_file(cfg);
    if (*hodge) return cmd_hodge(cfg);
    if (*mirror) return cmd_mirror(cfg, mirror_a, mirror_b);
  } catch (const UsageError& e) {
    std::cerr << "cy3: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cy3: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cy3: " << e.what() << '\n';
    return kVerdict;
  }
  return kUsage;
}
