#pragma once

namespace radon {

// Parses argv and runs one subcommand. Returns 0 on success, 2 on usage
// errors (diagnostic on stderr), 1 on runtime failures.
int run_cli(int argc, const char* const* argv);

}  // namespace radon
