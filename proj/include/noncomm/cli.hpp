#pragma once

#include <string>
#include <vector>

namespace noncomm {

/// `noncomm simulate|measure|sweep|bound-select --config <file>
///  [--curves <file>] --out <dir> [--threads n] [--dump-states]`.
/// Returns 0 on success, 1 on config errors, 2 on runtime errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace noncomm
