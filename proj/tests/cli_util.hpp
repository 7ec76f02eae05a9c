// Helpers for driving the CLI binary from tests.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_util {

inline std::string cli_path() {
  if (const char* env = std::getenv("CGLASSO_CLI")) return env;
  return "cglasso";
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs `cglasso <args>`, capturing stdout; stderr is left on the test log.
inline RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto out_path = std::filesystem::temp_directory_path() /
                        ("cglasso_cli_out_" + std::to_string(counter++));
  const std::string cmd =
      cli_path() + " " + args + " > " + out_path.string();
  const int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  std::filesystem::remove(out_path);
  return res;
}

inline std::string slurp_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cli_util
