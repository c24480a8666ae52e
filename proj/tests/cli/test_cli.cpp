#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vhs/jacobian/hypersurface.hpp"
#include "vhs_cli/cli.hpp"

using namespace vhs::cli;
using nlohmann::json;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "vhs");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Invocation r;
  r.code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

json invoke_json(std::vector<std::string> args, int expected_code = kPass) {
  args.push_back("--json");
  args.push_back("-");
  const auto r = invoke(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

RunConfig config_from(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream f(name, std::ios::binary);
  f << text;
  return name;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, DomainInfo) {
  const json j = invoke_json({"domain-info", "--h", "1,1,1,1"});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["result"]["dim_D"], 4);
  EXPECT_EQ(j["result"]["weight"], 3);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(invoke_json({"domain-info", "--h", "2,1,2"})["result"]["dim_D"], 3);
}

TEST(Cli, EveryResultCarriesTrace) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"domain-info", "--h", "1,2,2,1"},
           {"derived-flag", "--h", "2,2,2,2,2"},
           {"integral", "cartan", "--h", "3,2,3", "--lambda", "1,2", "--mu", "3,5"},
           {"chern-verify", "--h", "1,2,2,1", "--dim", "2", "--seed", "3"},
           {"nl-bound", "--h", "1,2,3,2,1", "--seed", "4"},
           {"jacobian", "hodge", "--n", "2", "--d", "4"}}) {
    const json j = invoke_json(args);
    ASSERT_TRUE(j.contains("result")) << args[0];
    for (const auto& [k, v] : j["result"].items()) {
      ASSERT_TRUE(j["trace"].contains(k)) << args[0] << " " << k;
      EXPECT_FALSE(j["trace"][k].empty()) << args[0] << " " << k;
    }
  }
}

TEST(Cli, NlPipelineSextic) {
  const json j = invoke_json({"jacobian", "nl-pipeline", "--d", "6", "--seed", "0"});
  EXPECT_EQ(j["result"]["rank_q_zeta"], 19);
  EXPECT_TRUE(j["result"]["equality"].get<bool>());
  EXPECT_EQ(j["result"]["h31"], 426);
  EXPECT_EQ(j["result"]["sigma"], 407);
  EXPECT_EQ(j["result"]["codim_slice"], 19);
  EXPECT_EQ(j["result"]["codim_restriction"], 19);
}

TEST(Cli, CartanExample) {
  const json j = invoke_json({"integral", "cartan", "--h", "3,2,3", "--lambda", "1,2", "--mu", "3,5"});
  EXPECT_EQ(j["result"]["c"], json::array({0, 3}));
  EXPECT_EQ(j["result"]["tangent_codim"], 3);
  EXPECT_TRUE(j["result"]["ordinary"].get<bool>());
}

TEST(Cli, IntegralCheckSearchAndVectors) {
  const json s = invoke_json({"integral", "check", "--h", "2,4,2"});
  EXPECT_EQ(s["result"]["bound"], 4);
  EXPECT_LE(s["result"]["best_dim"].get<int>(), 4);
  const json c = invoke_json({"integral", "construct", "--h", "2,4,2", "--method", "sharp"});
  EXPECT_EQ(c["result"]["dim"], 4);
  json rows = c["result"]["basis"];
  std::string text;
  for (const auto& r : rows) {
    std::string row;
    for (const auto& x : r) row += (row.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
    text += (text.empty() ? "" : ";") + row;
  }
  const json v = invoke_json({"integral", "check", "--h", "2,4,2", "--vectors", text});
  EXPECT_TRUE(v["result"]["integral"].get<bool>());
}

TEST(Cli, FailedTheoremCheckExitsOne) {
  const json j = invoke_json({"derived-flag", "--h", "1,1,1,1,1,1,1"}, kAssertionFailure);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_FALSE(j["result"]["theorem"]["inclusion_holds"].get<bool>());
}

TEST(Cli, EmptyConfigExitsTwo) {
  const auto none = invoke({});
  EXPECT_EQ(none.code, kConfigError);
  EXPECT_NE(none.err.find("empty config"), std::string::npos);
  const auto path = write_temp("empty.ini", "");
  const auto r = invoke({"--config", path});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("empty config"), std::string::npos);
  EXPECT_THROW(config_from("\n\n"), ConfigError);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(invoke({"frobnicate"}).code, kConfigError);
  EXPECT_EQ(invoke({"integral", "--h", "2,1,2"}).code, kConfigError);
  EXPECT_EQ(invoke({"integral", "bogus", "--h", "2,1,2"}).code, kConfigError);
  EXPECT_EQ(invoke({"domain-info"}).code, kConfigError);
  EXPECT_EQ(invoke({"domain-info", "--h", "1,2,3"}).code, kConfigError);
  EXPECT_EQ(invoke({"domain-info", "--h", "1,x,1"}).code, kConfigError);
  EXPECT_EQ(invoke({"domain-info", "--h", "1,1", "--d", "3"}).code, kConfigError);
  EXPECT_EQ(invoke({"domain-info", "--h", "1,1", "--form", "odd"}).code, kConfigError);
  EXPECT_EQ(invoke({"domain-info", "--h", "1,1", "--bogus"}).code, kConfigError);
  EXPECT_EQ(invoke({"selftest", "--h", "1,1"}).code, kConfigError);
  EXPECT_EQ(invoke({"nl-bound", "--h", "1,1,1,1"}).code, kConfigError);
  EXPECT_EQ(invoke({"--config", "/nonexistent/file.ini"}).code, kConfigError);
  EXPECT_THROW(config_from("[run]\ncommand = x\n[mystery]\nk = 1\n"), ConfigError);
  EXPECT_THROW(config_from("[run]\nseed = -1\n"), ConfigError);
  EXPECT_THROW(config_from("[run\ncommand = x\n"), ConfigError);
  EXPECT_THROW(config_from("command = domain-info\n"), ConfigError);
  EXPECT_THROW(config_from("[hodge]\nn = 2\nh = 1,1,1,1\n"), ConfigError);
}

TEST(Cli, BudgetExceededExitsTwo) {
  const auto r = invoke({"jacobian", "pairing", "--d", "6", "--budget", "50"});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, ConfigFileWithSections) {
  const auto path = write_temp("sextic.ini",
                               "[run]\ncommand = jacobian\nsub = tp-codim\nseed = 0\n\n[fixture]\nkind = plane\nn = 4\nd = 6\n");
  const json j = invoke_json({"--config", path});
  EXPECT_EQ(j["result"]["codim_slice"], 19);
  EXPECT_EQ(j["result"]["dim_vp"], 28);
  const RunConfig cfg = config_from("[run]\ncommand = integral\nsub = cartan\ntrials = 3\n[hodge]\nh = 3 2 3\nform = split\n"
                                    "[element]\nlambda = 1,2\nmu = 3,5\n");
  EXPECT_EQ(cfg.command, "integral");
  EXPECT_EQ(cfg.sub, "cartan");
  EXPECT_EQ(*cfg.trials, 3u);
  EXPECT_EQ(cfg.hodge->h, (std::vector<std::size_t>{3, 2, 3}));
  EXPECT_EQ(cfg.hodge->form, "split");
  EXPECT_EQ(cfg.params.at("element.mu"), "3,5");
  EXPECT_NO_THROW(validate(cfg));
}

TEST(Cli, FlagsOverrideConfig) {
  const auto path = write_temp("override.ini", "[run]\ncommand = domain-info\n[hodge]\nh = 1,1,1,1\n");
  EXPECT_EQ(invoke_json({"--config", path})["result"]["dim_D"], 4);
  EXPECT_EQ(invoke_json({"--config", path, "--h", "2,1,2"})["result"]["dim_D"], 3);
}

TEST(Cli, PolynomialFileFixture) {
  std::ostringstream poly;
  vhs::write_poly(poly, vhs::fermat_fixture(2, 5).F);
  const auto path = write_temp("quintic.poly", poly.str());
  const json j = invoke_json({"jacobian", "hodge", "--poly", path});
  EXPECT_EQ(j["result"]["primitive_hodge_dims"], json::array({4, 44, 4}));
  const json w = invoke_json({"jacobian", "write", "--n", "2", "--d", "5"});
  EXPECT_EQ(w["result"]["polynomial"], vhs::format_poly(vhs::fermat_fixture(2, 5).F));
  EXPECT_EQ(invoke({"jacobian", "hodge", "--poly", write_temp("bad.poly", "1 2 x\n")}).code, kConfigError);
}

TEST(Cli, SymmetrizerKernel) {
  const json j = invoke_json({"jacobian", "symmetrizer", "--n", "2", "--d", "5"});
  EXPECT_EQ(j["result"]["kernel_dim"], 31);
  EXPECT_EQ(j["result"]["lower_bound"], 31);
}

TEST(Cli, SelftestSubset) {
  const json j = invoke_json({"selftest", "--only", "1,4"});
  ASSERT_EQ(j["result"]["criteria"].size(), 2u);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(invoke({"selftest", "--only", "99"}).code, kConfigError);
}

TEST(Cli, TableIsDerivedFromJson) {
  const json j = invoke_json({"domain-info", "--h", "1,1,1,1"});
  const auto r = invoke({"domain-info", "--h", "1,1,1,1"});
  EXPECT_EQ(r.out, render_table(j));
  EXPECT_NE(r.out.find("dim_D"), std::string::npos);
}

TEST(Cli, DeterministicJson) {
  const std::vector<std::vector<std::string>> cases{
      {"chern-verify", "--h", "2,2,2,2", "--dim", "3", "--seed", "11"},
      {"integral", "check", "--h", "3,4,3", "--form", "split", "--seed", "5", "--trials", "50"},
      {"nl-bound", "--h", "1,3,4,3,1", "--seed", "9"},
      {"jacobian", "nl-pipeline", "--d", "6", "--seed", "0"}};
  for (const auto& args : cases) {
    auto a = args, b = args;
    a.insert(a.end(), {"--json", "run_a.json"});
    b.insert(b.end(), {"--json", "run_b.json"});
    ASSERT_EQ(invoke(a).code, kPass);
    ASSERT_EQ(invoke(b).code, kPass);
    EXPECT_EQ(slurp("run_a.json"), slurp("run_b.json")) << args[0];
    EXPECT_FALSE(slurp("run_a.json").empty());
  }
}

TEST(Cli, DeterministicAcrossProcesses) {
  const std::string cmd = std::string(VHS_CLI_PATH) + " nl-bound --h 1,2,2,2,1 --seed 3 --json ";
  ASSERT_EQ(std::system((cmd + "proc_a.json > /dev/null").c_str()), 0);
  ASSERT_EQ(std::system((cmd + "proc_b.json > /dev/null").c_str()), 0);
  EXPECT_EQ(slurp("proc_a.json"), slurp("proc_b.json"));
  EXPECT_EQ(json::parse(slurp("proc_a.json"))["schema"], 1);
}

TEST(Cli, ProcessExitCodes) {
  EXPECT_EQ(WEXITSTATUS(std::system((std::string(VHS_CLI_PATH) + " > /dev/null 2>&1").c_str())), kConfigError);
  EXPECT_EQ(WEXITSTATUS(std::system((std::string(VHS_CLI_PATH) + " domain-info --h 1,1,1,1 > /dev/null").c_str())), kPass);
  EXPECT_EQ(WEXITSTATUS(std::system((std::string(VHS_CLI_PATH) + " derived-flag --h 1,1,1,1,1,1,1 > /dev/null").c_str())),
            kAssertionFailure);
}
