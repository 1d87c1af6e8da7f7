#pragma once

#include <array>
#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "eulersums/bigreal.hpp"

namespace testing_util {

inline eulersums::BigReal ref(const char* decimal, int digits = 60) {
  return eulersums::BigReal(std::string_view(decimal), digits);
}

// |a - b| <= 10^-exp10
inline bool within(const eulersums::BigReal& a, const eulersums::BigReal& b, long exp10) {
  const int d = std::min(a.digits(), b.digits());
  return eulersums::abs(a - b) <= eulersums::BigReal::pow10(-exp10, d);
}

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the CLI with `args` (shell syntax), capturing stdout; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  CliResult r;
  const std::string cmd = std::string(EULERSUMS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace testing_util
