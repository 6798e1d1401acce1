#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "negbin/cli.hpp"
#include "negbin/errors.hpp"

namespace negbin::cli {
namespace {

using std::numbers::pi;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "negbin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("negbin_test_" + name);
  std::ofstream(path) << content;
  return path;
}

// Exit status of the installed binary.
int binary_status(const std::string& args) {
  const std::string command = std::string(NEGBIN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(ParseAngle, Forms) {
  EXPECT_EQ(parse_angle("0"), 0.0);
  EXPECT_EQ(parse_angle("1.25"), 1.25);
  EXPECT_EQ(parse_angle("pi"), pi);
  EXPECT_EQ(parse_angle("pi/2"), pi / 2.0);
  EXPECT_EQ(parse_angle("3pi/4"), 3.0 * pi / 4.0);
  EXPECT_EQ(parse_angle("3*pi/4"), 3.0 * pi / 4.0);
  EXPECT_EQ(parse_angle("-pi/2"), -pi / 2.0);
  EXPECT_EQ(parse_angle(" 2pi "), 2.0 * pi);
  EXPECT_THROW((void)parse_angle("tau"), DomainError);
  EXPECT_THROW((void)parse_angle("pi/0"), DomainError);
  EXPECT_THROW((void)parse_angle("xpi"), DomainError);
  EXPECT_THROW((void)parse_angle(""), DomainError);
}

TEST(Fig1, DefaultSweepIsDeterministic) {
  const auto a = invoke({"fig1"});
  const auto b = invoke({"fig1"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "eta,phi,M,quantity,value");
  EXPECT_EQ(count_lines(a.out), 1u + 4u * 94u);
  EXPECT_NE(a.out.find("\n0.02,0,30,mandel_q,"), std::string::npos);
}

TEST(Fig1, FlagsOverrideDefaults) {
  const auto r = invoke({"fig1", "--M", "7", "--phi", "pi", "--grid-step", "0.1", "--eta-start", "0.1", "--eta-stop", "0.9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 1u + 9u);
  EXPECT_NE(r.out.find("0.10000000000000001,3.1415926535897931,7,mandel_q,"), std::string::npos);
}

TEST(Fig2, QuantityAndOrder) {
  const auto r = invoke({"fig2", "--grid-step", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(",50,var_x2,"), std::string::npos);
  EXPECT_EQ(count_lines(r.out), 1u + 4u * 4u);
}

TEST(Config, SectionKeysAreApplied) {
  const auto path = temp_file("fig1.toml", "[fig1]\nM = 12\ngrid-step = 0.2\n");
  const auto r = invoke({"--config", path.string(), "fig1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(",12,mandel_q,"), std::string::npos);
  EXPECT_EQ(count_lines(r.out), 1u + 4u * 5u);
}

TEST(Config, UnknownKeyIsAnError) {
  const auto path = temp_file("bad.toml", "[fig1]\nM = 12\nwidth = 3\n");
  const auto r = invoke({"--config", path.string(), "fig1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(count_lines(r.err), 1u);
  const auto top = temp_file("bad_top.toml", "colour = 3\n");
  EXPECT_EQ(invoke({"--config", top.string(), "fig1"}).code, 1);
}

TEST(Config, MissingFileIsAnError) {
  const auto r = invoke({"--config", "/nonexistent/negbin.toml", "fig1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(count_lines(r.err), 1u);
}

TEST(Errors, DomainAndParseErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"pn", "--eta", "1.5"},
                                                                 {"pn", "--M", "0"},
                                                                 {"fig1", "--phi", "banana"},
                                                                 {"fig1", "--grid-step", "-1"},
                                                                 {"generate", "--protocol", "laser"},
                                                                 {"generate", "--protocol", "dispersive", "--g2t", "0"},
                                                                 {"fig1", "--unknown"},
                                                                 {}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_EQ(count_lines(r.err), 1u) << r.err;
    EXPECT_EQ(r.err.rfind("negbin: ", 0), 0u);
  }
}

TEST(Errors, NumericalContractFailure) {
  // The truncation cannot reach the tail tolerance within the hard cap.
  const auto r = invoke({"pn", "--M", "50", "--eta", "0.9999"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(count_lines(r.err), 1u);
}

TEST(Errors, IoFailure) {
  const auto r = invoke({"fig1", "--out", "/nonexistent/dir/q.csv"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(count_lines(r.err), 1u);
}

TEST(Output, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "negbin_test_pn.csv";
  std::filesystem::remove(path);
  const auto r = invoke({"pn", "--M", "5", "--eta", "0.6", "--phi", "0", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header, row0, row1;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  EXPECT_EQ(header, "n,probability");
  EXPECT_EQ(row1, "1,0");
  double total = 0.0;
  std::ifstream again(path);
  std::string line;
  std::getline(again, line);
  while (std::getline(again, line)) total += std::stod(line.substr(line.find(',') + 1));
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Generate, KerrReport) {
  const auto r = invoke({"generate", "--protocol", "kerr", "--M", "5", "--eta", "0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["protocol"], "kerr");
  EXPECT_GT(j["fidelity"].get<double>(), 1.0 - 1e-10);
  EXPECT_EQ(j["amplitudes"].size(), 20u);
  EXPECT_TRUE(j["contract"]["met"].get<bool>());
  EXPECT_DOUBLE_EQ(j["target_phi"].get<double>(), pi / 2.0);
}

TEST(Generate, DispersiveReport) {
  const auto r = invoke({"generate", "--protocol", "dispersive", "--M", "3", "--eta", "0.5", "--theta", "0.6",
                         "--phi", "pi/4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["fidelity"].get<double>(), 1.0 - 1e-10);
  EXPECT_NEAR(j["success_prob_g"].get<double>() + j["success_prob_e"].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(j["contract"]["met"].get<bool>());

  // Away from the half turn there is no target contract.
  const auto off = invoke({"generate", "--protocol", "dispersive", "--g2t", "1.0", "--phi", "pi/2"});
  ASSERT_EQ(off.code, 0) << off.err;
  const auto k = nlohmann::json::parse(off.out);
  EXPECT_FALSE(k.contains("contract"));
  EXPECT_LT(k["fidelity"].get<double>(), 0.999);
}

TEST(Verify, PassesAndNegativeControlFails) {
  const auto ok = invoke({"verify", "--json"});
  ASSERT_EQ(ok.code, 0) << ok.out << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GE(j["checks"].size(), 15u);
  EXPECT_LT(j["seconds"].get<double>(), 300.0);

  const auto bad = invoke({"verify", "--tolerance", "1e-300"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(count_lines(bad.err), 1u);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(binary_status("fig1 --grid-step 0.2"), 0);
  EXPECT_EQ(binary_status("--help"), 0);
  EXPECT_EQ(binary_status("pn --eta 2"), 1);
  EXPECT_EQ(binary_status("pn --M 50 --eta 0.9999"), 2);
  EXPECT_EQ(binary_status("fig2 --out /nonexistent/dir/x.csv"), 3);
}

}  // namespace
}  // namespace negbin::cli
