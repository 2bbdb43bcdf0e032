#pragma once

#include <iosfwd>

namespace modlat::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modlat::cli
