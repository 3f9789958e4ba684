#ifndef ILAB_CLI_HPP
#define ILAB_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace ilab {

/// Entry point shared by the binary and the tests.  Exit codes: 0 success,
/// 1 check failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ilab

#endif
