#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "opflow/io.hpp"
#include "opflow/opflow.hpp"

using namespace opflow;
using io::Json;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(OPFLOW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& rel) { return std::string(OPFLOW_DATA_DIR) + "/" + rel; }

std::string write_temp(const std::string& name, const Json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("opflow_test_" + name);
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST(Cli, VerifyPasses) {
  const CliRun r = run("verify --dim 2 --max-degree 2 --trials 5 --seed 42");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = io::parse_json(r.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_EQ(j["max_residual"], 0);
  EXPECT_EQ(j["inputs"]["seed"], 42);
  EXPECT_GE(j["results"]["identities"].size(), 15u);
  EXPECT_FALSE(j.contains("runtime_ms"));
  EXPECT_EQ(run("verify --dim 1 --max-degree 3 --trials 10 --seed 0").code, 0);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run("verify --dim 2 --max-degree 2 --trials 4 --seed 9");
  const CliRun b = run("verify --dim 2 --max-degree 2 --trials 4 --seed 9");
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(io::parse_json(run("--timing verify --trials 1 --max-degree 1").out).contains("runtime_ms"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify --trials 0").code, 2);
  EXPECT_EQ(run("verify --dim 5").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("cohomology " + data("missing.json")).code, 2);
  EXPECT_EQ(run("cohomology " + data("algebras/nonassoc2.json")).code, 2);
  EXPECT_EQ(run("deform " + data("algebras/dual_numbers.json")).code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ResourceCap) {
  EXPECT_EQ(run("verify --dim 4 --max-degree 4").code, 3);
  EXPECT_EQ(run("--max-entries 100 cohomology " + data("algebras/mat2.json") + " --n-max 3").code, 3);
}

TEST(Cli, Cohomology) {
  const CliRun r = run("cohomology " + data("algebras/dual_numbers.json") + " --n-max 2");
  ASSERT_EQ(r.code, 0);
  const Json j = io::parse_json(r.out);
  EXPECT_EQ(j["results"]["dims"].dump(), "[[0,2],[1,1],[2,1]]");
  const Json m = io::parse_json(run("cohomology " + data("algebras/mat2.json") + " --n-max 1").out);
  EXPECT_EQ(m["results"]["dims"].dump(), "[[0,1],[1,0]]");
  const Json reps =
      io::parse_json(run("cohomology " + data("algebras/dual_numbers.json") + " --n-max 1 --representatives").out);
  EXPECT_EQ(reps["results"]["representatives"][1].size(), 1u);
}

TEST(Cli, Deform) {
  const std::string alg = data("algebras/dual_numbers.json");
  const Json zero = io::parse_json(run("deform " + alg + " --omega " + write_temp("zero.json", io::operation_to_json(Operation::zero(2, 2)))).out);
  EXPECT_TRUE(zero["all_passed"].get<bool>());
  EXPECT_EQ(zero["results"]["Omega"]["max_abs_coeff"], 0);

  const Operation omega = random_operation(2, 2, 5, 3);
  const std::string of = write_temp("omega.json", io::operation_to_json(omega));
  const CliRun r = run("deform " + alg + " --omega " + of + " --dual anti_self_dual");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = io::parse_json(r.out);
  EXPECT_EQ(j["results"]["dual_mode"], "anti_self_dual");
  EXPECT_EQ(j["results"]["mc_residual"]["max_abs_coeff"], 0);
  EXPECT_EQ(io::operation_from_json(j["results"]["Omega"]["operation"]), associator(dual_numbers().mu + omega));
  EXPECT_TRUE(j["results"].contains("current"));
  EXPECT_TRUE(j["results"].contains("conservation_residual"));

  // A supplied current that disagrees with ∇Ω† is a violation.
  const std::string df = write_temp("dual.json", io::operation_to_json(random_operation(2, 3, 6, 2)));
  const std::string cf = write_temp("current.json", io::operation_to_json(random_operation(2, 4, 7, 2)));
  EXPECT_EQ(run("deform " + alg + " --omega " + of + " --dual custom --dual-file " + df + " --current " + cf).code, 1);
  EXPECT_EQ(run("deform " + alg + " --mu0 " + data("operations/split2_mu0.json")).code, 0);

  // Non-associative ground: no gauge block, a warning instead.
  const Json na = io::parse_json(run("deform " + data("algebras/nonassoc2.json") + " --omega " + of).out);
  EXPECT_TRUE(na["results"]["dual_mode"].is_null());
  EXPECT_EQ(na["results"]["warnings"].size(), 1u);
  EXPECT_EQ(na["results"]["bianchi_residual"]["max_abs_coeff"], 0);
}

TEST(Cli, Evolve) {
  const std::string dual = data("algebras/dual_numbers.json");
  const std::string D = data("operations/dual_derivation.json");
  const CliRun r = run("evolve " + dual + " " + D + " " + data("operations/dual_mu.json") + " --t-end 1 --dt 0.01 --stride 10");
  ASSERT_EQ(r.code, 0) << r.out;
  const Json j = io::parse_json(r.out);
  EXPECT_TRUE(j["results"]["state_is_cocycle"].get<bool>());
  EXPECT_FALSE(j["results"]["static"].get<bool>());
  EXPECT_EQ(j["results"]["trajectory"]["times"].size(), 11u);
  EXPECT_LT(j["results"]["max_cocycle_defect"].get<double>(), 1e-9);

  const Json still = io::parse_json(run("evolve " + dual + " " + D + " " + data("operations/dual_not_cocycle1.json") +
                                        " --lambda 0 --dt 0.5").out);
  const auto& states = still["results"]["trajectory"]["states"];
  EXPECT_EQ(states.front(), states.back());

  const std::string scalar = data("algebras/scalar.json");
  const Json s = io::parse_json(
      run("evolve " + scalar + " " + data("operations/scalar_zero1.json") + " " + data("operations/scalar_mu.json")).out);
  EXPECT_TRUE(s["results"]["static"].get<bool>());
  EXPECT_EQ(s["results"]["h1_dim"], 0);

  EXPECT_EQ(run("evolve " + dual + " " + data("operations/dual_not_cocycle1.json") + " " + D).code, 2);
  EXPECT_EQ(run("evolve " + dual + " " + D + " " + D + " --dt -1").code, 2);
}

TEST(Cli, ReportRoundTrip) {
  const CliRun r = run("cohomology " + data("algebras/dual_numbers.json") + " --n-max 2 --representatives");
  const Json j = io::parse_json(r.out);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}
