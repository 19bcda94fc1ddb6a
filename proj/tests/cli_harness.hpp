#pragma once

// Runs the thvg executable in a scratch directory and captures its output.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace thvg::testing {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream(p, std::ios::binary) << bytes;
}

class CliSandbox {
 public:
  explicit CliSandbox(const std::string& tag)
      : dir_(std::filesystem::temp_directory_path() /
             ("thvg_" + tag + "_" + std::to_string(::getpid()))) {
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  ~CliSandbox() { std::filesystem::remove_all(dir_); }
  CliSandbox(const CliSandbox&) = delete;
  CliSandbox& operator=(const CliSandbox&) = delete;

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path operator/(const std::string& name) const { return dir_ / name; }

  /// `args` is appended to the executable path; runs with cwd = dir().
  RunResult run(const std::string& args, const std::string& env = "") const {
    const auto out = dir_ / ".stdout";
    const auto err = dir_ / ".stderr";
    const std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" + THVG_CLI + "' " +
                            args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

 private:
  std::filesystem::path dir_;
};

inline std::string fixture(const std::string& name) {
  return std::string(THVG_FIXTURES) + "/" + name;
}

}  // namespace thvg::testing
