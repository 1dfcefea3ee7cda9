#pragma once

#include <iosfwd>

namespace rlat::cli {

/// Entry point of the rlat tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rlat::cli
