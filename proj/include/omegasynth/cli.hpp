#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omegasynth {

/// Command-line driver (synth / verify / bench / triplet). Exposed so tests
/// can run commands in-process. Exit codes: 0 success or `equal`,
/// 1 verification failure, 2 usage error, 3 input error, 4 timeout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegasynth
