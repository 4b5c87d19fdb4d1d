#pragma once

#include <ostream>

namespace permpoly::cli {

/// Runs one `perm` invocation. Exit codes: 0 success, 1 a check failed
/// (or a computation hit an error), 2 bad command line or input syntax.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permpoly::cli
