#pragma once

#include <iosfwd>

namespace ramsey::cli {

// Exit codes: 0 success/verified, 1 bad/falsified, 2 parameter error,
// 3 inconclusive/budget-bound.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
