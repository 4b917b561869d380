// sixv-verify: runs the numerical verification suites and writes a report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sixv/error.hpp"
#include "sixv/runner.hpp"

namespace {

constexpr int kExitConfig = 2;

sixv::cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw sixv::Error(sixv::ErrorCode::ConfigError, "cannot parse complex number '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

sixv::RunConfig build_config(int size, const std::string& gamma, const std::string& root, const std::string& mu,
                             std::uint64_t seed, const std::string& suites, const std::vector<std::string>& tols,
                             int draws, const std::string& out) {
  using sixv::Error;
  using sixv::ErrorCode;
  sixv::RunConfig cfg;
  cfg.L = size;
  cfg.seed = seed;
  cfg.draws = draws;
  cfg.output_path = out;
  if (!gamma.empty() && !root.empty()) throw Error(ErrorCode::ConfigError, "--gamma and --root-of-unity exclude each other");
  if (!gamma.empty()) cfg.gamma = parse_complex(gamma);
  if (!root.empty()) {
    const auto parts = split(root, '/');
    if (parts.size() != 2) throw Error(ErrorCode::ConfigError, "--root-of-unity expects K/L");
    try {
      cfg.root = sixv::RootOfUnitySpec{std::stoi(parts[0]), std::stoi(parts[1])};
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "--root-of-unity expects integers K/L");
    }
  }
  if (mu == "zero") {
    cfg.mu_mode = sixv::MuMode::Zero;
  } else if (mu == "random") {
    cfg.mu_mode = sixv::MuMode::Random;
  } else {
    cfg.mu_mode = sixv::MuMode::Explicit;
    for (const auto& item : split(mu, ';')) cfg.mu_values.push_back(parse_complex(item));
  }
  cfg.suites = sixv::default_suites(cfg.root.has_value());
  if (!suites.empty()) {
    cfg.suites.clear();
    for (const auto& name : split(suites, ',')) cfg.suites.push_back(sixv::parse_suite(name));
  }
  for (const auto& t : tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::ConfigError, "--tol expects NAME=VAL");
    try {
      cfg.tol_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "bad tolerance value in '" + t + "'");
    }
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of the twisted six-vertex functional relations"};
  int size = 2;
  std::string gamma;
  std::string root;
  std::string mu = "random";
  std::uint64_t seed = 42;
  std::string suites;
  std::vector<std::string> tols;
  int draws = 3;
  std::string out;
  app.add_option("--size", size, "Lattice size L in [1, 8]");
  app.add_option("--gamma", gamma, "Anisotropy RE,IM");
  app.add_option("--root-of-unity", root, "Anisotropy i*pi*K/L given as K/L");
  app.add_option("--mu", mu, "Inhomogeneities: zero, random or RE,IM;RE,IM;...");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--suite", suites, "Comma separated: structural,dwbc,functional,theorem,zeros,rou");
  app.add_option("--tol", tols, "Tolerance override NAME=VAL (NAME* matches by prefix)");
  app.add_option("--draws", draws, "Random repetitions per check");
  app.add_option("--out", out, "Report path (default: stdout)");
  app.set_version_flag("--version", std::string(sixv::version()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  sixv::RunConfig cfg;
  sixv::RunResult result;
  try {
    cfg = build_config(size, gamma, root, mu, seed, suites, tols, draws, out);
    result = sixv::run(cfg);
  } catch (const sixv::Error& e) {
    std::cerr << "sixv-verify: " << e.what() << "\n";
    return e.code() == sixv::ErrorCode::ConfigError ? kExitConfig : 1;
  }

  const std::string text = sixv::render_report(cfg, result);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) {
      std::cerr << "sixv-verify: cannot write " << out << "\n";
      return kExitConfig;
    }
    file << text;
  }
  std::fprintf(stderr, "%zu checks, %zu failed\n", result.report.records.size(), result.report.failures());
  return result.exit_code;
}
