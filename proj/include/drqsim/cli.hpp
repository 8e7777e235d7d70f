#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "drqsim/workload.hpp"

namespace drqsim::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2 };

// args excludes the program name. Everything the command prints goes to out
// or err, which makes the whole front end testable in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Bundled id or a path to a .csv / .json file. Throws IoError when the file
// cannot be read, WorkloadError when it does not parse.
std::pair<std::string, Workload> load_dataset(const std::string& spec);

// Expands "ds1..ds10" style ranges; other tokens pass through.
std::vector<std::string> expand_dataset_list(const std::vector<std::string>& tokens);

// The illustration walkthrough printed by `reproduce`.
void reproduce(std::ostream& out);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace drqsim::cli
