#pragma once

#include <iosfwd>

namespace hankelforge {

/// Entry point behind the hankelforge binary, separated so tests can drive
/// the full command surface in-process. Exit codes: 0 success, 1 any
/// verification failure, 2 usage or parse error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hankelforge
