#pragma once

#include <iosfwd>

namespace ratsing {

// Exit status: 0 success, 1 a check or verification failed, 2 usage or input error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ratsing
