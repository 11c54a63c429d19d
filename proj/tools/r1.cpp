#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "rankone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::string input;
  // Only slurp stdin when some argument asks for it.
  for (const auto& a : args) {
    if (a == "-") {
      input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      break;
    }
  }
  const auto outcome = rankone::cli::run(args, input);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
