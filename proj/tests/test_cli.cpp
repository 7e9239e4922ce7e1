#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "swk/cli.hpp"
#include "swk/errors.hpp"

using swk::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "swk");
  std::ostringstream o, e;
  int code = run(args, o, e);
  return {code, o.str(), e.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("swk_cli_" + name)).string();
}

std::string write(const std::string& name, const std::string& body) {
  std::string p = tmp(name);
  std::ofstream(p) << body;
  return p;
}

std::string slurp(const std::string& p) {
  std::ifstream f(p);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

const char* kConstant6 = "[run]\ncase = 6d-perturbed\n[grid]\nkind = full\nsamples = 8\n[constants]\nr0 = 1\nr1 = 1\n";

}  // namespace

TEST_CASE("complex and decimal parsing") {
  using swk::cli::parse_complex;
  CHECK(parse_complex("2") == std::complex<double>(2, 0));
  CHECK(parse_complex("-2") == std::complex<double>(-2, 0));
  CHECK(parse_complex("i") == std::complex<double>(0, 1));
  CHECK(parse_complex("-i") == std::complex<double>(0, -1));
  CHECK(parse_complex("1.5-2i") == std::complex<double>(1.5, -2));
  CHECK(parse_complex("1e-3+1e+2i") == std::complex<double>(1e-3, 100));
  CHECK_THROWS_AS(parse_complex("abc"), swk::ConfigError);
  CHECK(swk::cli::decimal(0.1) == "0.1");
  CHECK(std::stod(swk::cli::decimal(M_PI)) == M_PI);
}

TEST_CASE("verify subcommands") {
  CHECK(call({"verify", "clifford", "--dim", "6"}).code == 0);
  CHECK(call({"verify", "clifford", "--dim", "5"}).code == 0);
  Result k = call({"verify", "kahler", "--n", "3", "--trials", "0"});
  CHECK(k.code == 0);
  CHECK(k.out.find("matrix units") != std::string::npos);
  CHECK(call({"verify", "exalg"}).code == 0);
  CHECK(call({"verify", "clifford", "--dim", "7"}).code == 2);
}

TEST_CASE("assemble constant case reports 8 pi") {
  std::string cfg = write("c6.ini", kConstant6);
  std::string out = tmp("c6.json");
  Result r = call({"assemble", "--config", cfg, "--out", out});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["status"] == "PASS");
  CHECK(j["config"]["constants"]["r0"] == "1");
  double phi2 = std::stod(j["results"]["residual"]["scalars"]["|phi|^2 max"].get<std::string>());
  CHECK(std::abs(phi2 - 8 * M_PI) < 1e-12 * 8 * M_PI);
  CHECK(j["results"]["constants"]["a0"]["provenance"] == "computed-from-integral");
}

TEST_CASE("reports are deterministic") {
  std::string cfg = write("det.ini", kConstant6);
  call({"assemble", "--config", cfg, "--out", tmp("det1.json")});
  call({"assemble", "--config", cfg, "--out", tmp("det2.json")});
  CHECK(slurp(tmp("det1.json")) == slurp(tmp("det2.json")));
}

TEST_CASE("config errors exit with 2") {
  std::string bad = write("bad.ini", "[grid]\nsamples = 8\nbogus = 1\n");
  Result r = call({"assemble", "--config", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("bogus") != std::string::npos);
  CHECK(call({"assemble", "--case", "7d"}).code == 2);
  CHECK(call({"assemble", "--set", "grid.samples=eight"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
}

TEST_CASE("flags override file values") {
  std::string cfg = write("ovr.ini", kConstant6);
  std::string out = tmp("ovr.json");
  CHECK(call({"assemble", "--config", cfg, "--set", "constants.r0=2", "--out", out}).code == 0);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["config"]["constants"]["r0"] == "2");
  double phi2 = std::stod(j["results"]["residual"]["scalars"]["|phi|^2 max"].get<std::string>());
  CHECK(std::abs(phi2 - 16 * M_PI) < 1e-11);
}

TEST_CASE("failing checks exit with 1") {
  std::string cfg = write("inf.ini",
                          "[run]\ncase = 8d-perturbed\n[grid]\nsamples = 8\n[constants]\nr0 = 1\nr1 = 2\n");
  Result r = call({"assemble", "--config", cfg});
  CHECK(r.code == 1);
  CHECK(r.out.find("first failing check") != std::string::npos);
  CHECK(call({"assemble", "--case", "6d", "--set", "grid.kind=full", "--set", "grid.samples=8"}).code == 1);
}

TEST_CASE("family, scale, reduced and kw commands") {
  std::string cfg = write("fs.ini", kConstant6);
  CHECK(call({"family", "--config", cfg, "--t", "0,1,10"}).code == 0);
  CHECK(call({"scale", "--config", cfg, "--a", "3", "--b", "-2"}).code == 0);
  CHECK(call({"scale", "--config", cfg, "--a", "0", "--b", "1"}).code == 2);
  std::string red = write("red.ini", "[run]\ncase = 5d-reduced\n[reduced]\nvariant = 3\n[grid]\nsamples = 64\n");
  CHECK(call({"assemble", "--config", red}).code == 0);
  CHECK(call({"assemble", "--config", red, "--set", "reduced.g_offset=0.1"}).code == 1);
  CHECK(call({"assemble", "--case", "sigma-c2", "--set", "reduced.variant=psi", "--set", "grid.samples=64"}).code == 0);
  std::string kw = write("kw.ini", "[grid]\nsamples = 32\n[kw]\ndensity = constant\nc = 2\n");
  CHECK(call({"kw", "solve", "--config", kw}).code == 0);
  CHECK(call({"kw", "solve", "--config", kw, "--set", "kw.c=-1"}).code == 1);
}
