#pragma once

#include <string>
#include <vector>

namespace scalg {

struct CommandResult {
  int exit_code;  // 0 all checks pass, 1 a check failed, 2 parse or build error
  std::string text;
};

/// verify <file> | centre <file> [--out <file>] | double <file> | crosscheck <file>
CommandResult run(const std::string& command, const std::vector<std::string>& args);

}  // namespace scalg
