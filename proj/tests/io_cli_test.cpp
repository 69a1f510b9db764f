#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "corpus.hpp"
#include "expect_error.hpp"
#include "gbs/io.hpp"

namespace gbs {
namespace {

using io::json;
using testing::Rng;

std::string data(const std::string& name) { return std::string(GBS_TEST_DATA) + "/" + name; }

/// Unique scratch file removed on destruction.
class ScratchFile {
 public:
  explicit ScratchFile(const std::string& stem)
      : path_(std::filesystem::temp_directory_path() /
              (stem + "-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
               std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json")) {}
  ~ScratchFile() { std::filesystem::remove(path_); }
  void write(const std::string& text) const { std::ofstream(path_) << text; }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(GraphJson, RoundTripPreservesOrder) {
  Rng rng(testing::suite_seed());
  for (int i = 0; i < 30; ++i) {
    const DirectedGraph g = testing::random_graph(rng, {6, 12});
    const DirectedGraph back = io::graph_from_json(io::graph_to_json(g));
    EXPECT_EQ(io::graph_to_json(back), io::graph_to_json(g));
    EXPECT_EQ(back.vertex_ids().size(), g.vertex_ids().size());
    for (EdgeId e : g.edge_ids()) EXPECT_EQ(back.edge_name(e), g.edge_name(e));
  }
}

TEST(GraphJson, Diagnostics) {
  try {
    io::parse_graph(io::read_file(data("malformed.json")));
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    io::parse_graph(io::read_file(data("missing_field.json")));
    FAIL() << "expected ParseError";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("graph.edges[0].dst: missing field"), std::string::npos) << e.what();
  }
  EXPECT_GBS_ERROR(io::read_file(data("does_not_exist.json")), ParseError);
  EXPECT_GBS_ERROR(io::parse_graph(R"({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "w"}]})"),
                   DanglingEdge);
  EXPECT_GBS_ERROR(io::parse_graph(R"({"vertices": "v", "edges": []})"), ParseError);
}

TEST(ScalarJson, RoundTripAndForms) {
  Rng rng(testing::suite_seed() + 1);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t d = std::array<std::int64_t, 3>{2, 3, 5}[i % 3];
    const QuadScalar x = testing::random_quad(rng, d, 40, 12);
    EXPECT_EQ(io::scalar_from_json(io::scalar_to_json(x), d), x);
  }
  EXPECT_EQ(io::scalar_from_json(json("3/4"), 2), QuadScalar(Rational(3, 4)));
  EXPECT_EQ(io::scalar_from_json(json(5), 2), QuadScalar(5));
  EXPECT_EQ(io::scalar_from_json(json{{"a", "-1"}, {"b", "1"}}, 2), QuadScalar::sqrt(2) - QuadScalar(1));
  EXPECT_EQ(io::scalar_to_json(QuadScalar(Rational(7, 12))), (json{{"a", "7/12"}, {"b", "0"}}));
  EXPECT_TRUE(io::scalar_to_json(QuadScalar::sqrt(2), {.approx = true}).contains("approx"));
  EXPECT_GBS_ERROR(io::scalar_from_json(json("1/0"), 2), ParseError);
  EXPECT_GBS_ERROR(io::scalar_from_json(json("x"), 2), ParseError);
}

TEST(ThetaConfig, NormalizesAndResolves) {
  const io::ThetaConfig c = io::parse_theta_config(io::read_file(data("theta_unnormalized.json")));
  EXPECT_EQ(c.d, 3);
  EXPECT_EQ(c.theta.at("e"), QuadScalar(Rational(0), Rational(1, 2), 3));
  const auto g = testing::single_loop();
  EXPECT_EQ(io::resolve_thetas(*g, c).at(EdgeId{0}), c.theta.at("e"));
  io::ThetaConfig bad = c;
  bad.theta["nope"] = QuadScalar(0);
  EXPECT_GBS_ERROR(io::resolve_thetas(*g, bad), UnknownEdge);
}

TEST(SystemJson, RoundTrip) {
  Rng rng(testing::suite_seed() + 2);
  for (int i = 0; i < 20; ++i) {
    const auto g = std::make_shared<const DirectedGraph>(testing::random_graph(rng, {6, 12}));
    for (const BranchingSystem& bs : {build_affine_system(g), build_rotation_system(g, testing::random_thetas(*g, rng, 3))}) {
      const json dump = io::system_to_json(bs);
      EXPECT_EQ(dump["format"], "gbs-branching-system");
      const BranchingSystem back = io::system_from_json(dump);
      EXPECT_EQ(io::system_to_json(back), dump);
      EXPECT_EQ(back.kind(), bs.kind());
      for (EdgeId e : g->edge_ids()) {
        EXPECT_EQ(back.map(e), bs.map(e));
        EXPECT_EQ(back.rotation_angle(e), bs.rotation_angle(e));
      }
    }
  }
  EXPECT_GBS_ERROR(io::system_from_json(json{{"format", "other"}}), ParseError);
}

TEST(ErrorJson, Shape) {
  EXPECT_EQ(io::error_to_json(ErrorKind::UnknownEdge, "edge 'x'"),
            (json{{"error", {{"kind", "UnknownEdge"}, {"message", "edge 'x'"}}}}));
}

cli::RunConfig config_for(const std::string& graph, const std::string& theta = {}) {
  cli::RunConfig rc;
  rc.graph = data(graph);
  if (!theta.empty()) rc.config = data(theta);
  return rc;
}

TEST(Commands, Analyze) {
  const auto loop = cli::run("analyze", config_for("single_loop.json"));
  EXPECT_EQ(loop.exit_code, cli::kPass);
  EXPECT_EQ(loop.report["condition_L"], false);
  EXPECT_EQ(loop.report["W"], json::array({"v"}));
  const auto chain = cli::run("analyze", config_for("chain.json"));
  EXPECT_EQ(chain.report["condition_L"], true);
  EXPECT_EQ(chain.report["W"], json::array());
  const auto bad = cli::run("analyze", config_for("malformed.json"));
  EXPECT_EQ(bad.exit_code, cli::kError);
  EXPECT_EQ(bad.report["error"]["kind"], "ParseError");
}

TEST(Commands, BuildThenVerifyMatchesDirectVerify) {
  for (const auto& [graph, theta] : std::vector<std::pair<std::string, std::string>>{
           {"single_loop.json", "theta_sqrt2.json"}, {"two_cycle.json", "theta_two_cycle.json"},
           {"cycle_with_tail.json", ""}, {"loop_with_exit.json", ""}}) {
    cli::RunConfig rc = config_for(graph, theta);
    const auto built = cli::run("build", rc);
    ASSERT_EQ(built.exit_code, cli::kPass) << built.report.dump();
    ScratchFile dump("gbs-system");
    dump.write(built.report.dump());
    const auto direct = cli::run("verify", rc);
    cli::RunConfig from_dump;
    from_dump.system = dump.path();
    const auto via_dump = cli::run("verify", from_dump);
    EXPECT_EQ(direct.exit_code, cli::kPass) << graph;
    EXPECT_EQ(via_dump.report, direct.report) << graph;
  }
}

TEST(Commands, VerifyReportsTamperedDump) {
  json dump = cli::run("build", config_for("single_loop.json")).report;
  dump["R"][0]["set"][0]["hi"] = json{{"a", "1/2"}, {"b", "0"}};
  ScratchFile file("gbs-tampered");
  file.write(dump.dump());
  cli::RunConfig rc;
  rc.system = file.path();
  const auto r = cli::run("verify", rc);
  EXPECT_EQ(r.exit_code, cli::kVerificationFailed) << r.report.dump();
  EXPECT_EQ(r.report["passed"], false);
}

TEST(Commands, Faithful) {
  const auto irrational = cli::run("faithful", config_for("single_loop.json", "theta_sqrt2.json"));
  EXPECT_EQ(irrational.exit_code, cli::kPass);
  EXPECT_EQ(irrational.report["criterion_satisfied"], true);
  const auto rational = cli::run("faithful", config_for("single_loop.json", "theta_7_12.json"));
  EXPECT_EQ(rational.exit_code, cli::kNonFaithful);
  EXPECT_EQ(rational.report["W"][0]["q"], 12);
  EXPECT_EQ(rational.report["W"][0]["f_alpha_q_is_identity"], true);
  const auto two = cli::run("faithful", config_for("two_cycle.json", "theta_two_cycle.json"));
  EXPECT_EQ(two.exit_code, cli::kNonFaithful);
  for (const json& w : two.report["W"]) EXPECT_EQ(w["theta_w"]["a"], "7/12");
  const auto missing = cli::run("faithful", config_for("single_loop.json"));
  EXPECT_EQ(missing.exit_code, cli::kError);
}

TEST(Commands, Converse) {
  cli::RunConfig rc = config_for("two_cycle.json");
  const auto cstar = cli::run("converse", rc);
  EXPECT_EQ(cstar.exit_code, cli::kPass);
  EXPECT_EQ(cstar.report["expected_nonfaithful"], true);
  EXPECT_EQ(cstar.report["element_in_kernel"], true);
  rc.variant = "leavitt";
  const auto leavitt = cli::run("converse", rc);
  EXPECT_EQ(leavitt.exit_code, cli::kPass);
  EXPECT_EQ(leavitt.report["perturbed"]["element_in_kernel"], false);
  const auto holds = cli::run("converse", config_for("loop_with_exit.json"));
  EXPECT_EQ(holds.exit_code, cli::kError);
  EXPECT_EQ(holds.report["error"]["kind"], "ConditionLHolds");
}

TEST(Commands, ReproduceScenarios) {
  cli::RunConfig rc;
  const auto example = cli::run("reproduce", rc, "example-irrational-loop");
  EXPECT_EQ(example.exit_code, cli::kPass);
  EXPECT_EQ(example.report["passed"], true);
  EXPECT_EQ(example.report["cstar"]["passed"], true);
  EXPECT_EQ(example.report["algebraic"]["passed"], true);
  EXPECT_EQ(example.report["verdict"]["W"][0]["F"]["hi"], (json{{"a", "-7/2"}, {"b", "5/2"}}));
  const auto cstar = cli::run("reproduce", rc, "converse-cstar");
  EXPECT_EQ(cstar.exit_code, cli::kPass);
  EXPECT_EQ(cstar.report["element"], "-p[v] + s[e]^");
  const auto leavitt = cli::run("reproduce", rc, "converse-leavitt");
  EXPECT_EQ(leavitt.exit_code, cli::kPass);
  EXPECT_EQ(cli::run("reproduce", rc, "nothing").exit_code, cli::kError);
}

TEST(Commands, SeedOnlyChangesSpotChecks) {
  cli::RunConfig a, b;
  b.seed = a.seed + 1;
  json ra = cli::run("reproduce", a, "converse-cstar").report;
  json rb = cli::run("reproduce", b, "converse-cstar").report;
  EXPECT_EQ(ra["spot_checks"]["passed"], true);
  EXPECT_EQ(rb["spot_checks"]["passed"], true);
  ra.erase("spot_checks");
  rb.erase("spot_checks");
  EXPECT_EQ(ra, rb);
}

TEST(Commands, RenderPretty) {
  const auto r = cli::run("analyze", config_for("single_loop.json"));
  EXPECT_EQ(json::parse(cli::render(r, true)), r.report);
  EXPECT_EQ(cli::render(r, false).find('\n'), std::string::npos);
}

}  // namespace
}  // namespace gbs
