#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "heckeho/ff.hpp"
#include "heckeho/gln.hpp"
#include "heckeho/weyl.hpp"

namespace heckeho::cli {

enum class Format { json, csv, text };

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_domain = 2, exit_disagree = 3 };

struct CommandResult {
  std::string output;
  std::vector<std::string> warnings;
  int exit_code = exit_ok;
};

Format parse_format(const std::string& name);

CommandResult cmd_faces(const weyl::GroupSpec& spec, Format format);
CommandResult cmd_chars(const weyl::GroupSpec& spec, Format format, std::size_t cap);
CommandResult cmd_classify(const gln::SimpleSS& m, const gln::SimpleSS& other, Format format);
CommandResult cmd_sweep(const weyl::GroupSpec& spec, ff::Field field, Format format, std::size_t cap);
CommandResult cmd_oracle_check(const weyl::GroupSpec& spec, ff::Field field, Format format, std::size_t cap);

// Full command line front end. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string csv_field(const std::string& s);

}  // namespace heckeho::cli
