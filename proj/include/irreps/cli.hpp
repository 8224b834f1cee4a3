#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irreps {

struct SubcommandInfo {
  std::string name;
  std::string summary;
  std::vector<std::string> ops;  // library operations this subcommand exposes
};

const std::vector<SubcommandInfo>& cli_subcommands();

// Entry point shared by the binary and the in-process tests. Emits exactly
// one JSON document on `out`; diagnostics go to `err`. Returns 0 on success,
// 2 on a parse error, 1 on a domain error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irreps
