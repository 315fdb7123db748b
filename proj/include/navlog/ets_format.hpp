#pragma once

#include "navlog/system.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace navlog
{

// Line-oriented system description:
//
//   # comment
//   views v1 v2 ...
//   instructions i0 i1 ...
//   state <name> <view>
//   trans <from> <instruction> <to>
//
// Declarations must precede use. Identifiers match [A-Za-z_][A-Za-z0-9_]*.
raw_system read_raw_system( std::string_view text );

epistemic_transition_system parse_system( std::string_view text );
epistemic_transition_system load_system( const std::filesystem::path& path );

// Emits the format above; parse_system( write_system( s ) ) rebuilds s.
std::string write_system( const epistemic_transition_system& system );

std::string read_file( const std::filesystem::path& path );

} // namespace navlog
