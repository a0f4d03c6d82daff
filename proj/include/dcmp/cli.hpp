#pragma once

#include <iosfwd>

namespace dcmp {

// exit codes: 0 all checks pass, 1 a checked property fails, 2 usage or input error
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace dcmp
