#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sl2tilt::cli {

enum ExitCode { kOk = 0, kUsage = 1, kViolation = 2 };

struct RunConfig {
  int p = 0;
  int n = 0;
  std::string block = "all";
  std::string format = "text";
  std::string mode = "simulate";
  std::string oracle = "auto";
  std::string steps;  ///< "a:b", "a" or empty for all
  bool fast = false;
};

struct HomdimConfig {
  int p = 0;
  int n = 0;
  std::int64_t j = 0;
  std::int64_t b = 0;
  std::int64_t jj = 0;
  std::int64_t c = 0;
  std::string kind = "hom";
  bool oracle = false;
  bool trace = false;
  bool dump = false;
};

int cmd_tilt(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_homdim(const HomdimConfig& config, std::ostream& out);
int cmd_frobenius(const RunConfig& config, std::ostream& out);
int cmd_tables(const std::optional<std::string>& name, bool show, std::ostream& out);

int run_cli(int argc, char** argv);

}  // namespace sl2tilt::cli
