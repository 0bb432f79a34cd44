#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace berge::cli {

/// Batch command-line surface. Exit status: 0 success, 1 asserted-negative
/// domain result (e.g. --assert-free when a cycle exists), 2 usage, parse or
/// file errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace berge::cli
