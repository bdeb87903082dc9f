// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>

namespace skewroots::cli {

// Full command-line driver; returns the process exit code.
//   0  success
//   1  verification ran and found disagreements
//   2  malformed command line or malformed codec input
//   3  domain error (invalid field, polynomial out of range, ...)
//   4  search finished with no hits
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace skewroots::cli
