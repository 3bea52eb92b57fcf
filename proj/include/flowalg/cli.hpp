#pragma once

// Command-line front end. Reports are JSON with keys in a fixed order:
// command, inputs, results, checks, timings.

#include <string>
#include <vector>

namespace flowalg::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2, kCapacityError = 3 };

struct Outcome {
  int exit_code = kOk;
  std::string report;  // empty when the command did not run
  std::string error;   // message for stderr, if any
};

/// `args` excludes the program name. Help and version requests land in
/// `report` with exit code 0.
Outcome run(const std::vector<std::string>& args);

int main(int argc, char** argv);

}  // namespace flowalg::cli
