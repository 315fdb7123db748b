#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace navlog
{

enum exit_status : int
{
    exit_answered = 0,
    exit_verdict_false = 1, // only with --fail-on-false
    exit_usage = 2,
    exit_internal = 3
};

// Runs one command line. `args` excludes the program name.
int run_cli( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace navlog
