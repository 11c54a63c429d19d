#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rankone::cli {

inline constexpr std::string_view kVersion = "r1 1.0.0";

struct Outcome {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage error
  std::string out;
  std::string err;
};

// Runs the r1 command line. argv[0] is the program name. "-" as a file
// argument reads from stdin_data.
Outcome run(const std::vector<std::string>& argv, std::string_view stdin_data = {});

}  // namespace rankone::cli
