#pragma once

#include <iosfwd>

namespace coxroots::cli {

// Exit codes: 0 property holds / word reduced, 1 property fails / word not
// reduced, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxroots::cli
