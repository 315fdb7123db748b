#pragma once

#include "navlog/ets_format.hpp"
#include "navlog/fixtures.hpp"
#include "navlog/formula.hpp"
#include "navlog/strategy.hpp"

#include <string>

#ifndef NAVLOG_FIXTURE_DIR
#error "NAVLOG_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace test
{

using namespace navlog;

inline std::string fixture_path( const std::string& name ) { return std::string{ NAVLOG_FIXTURE_DIR } + "/" + name; }

inline view_set vs( const epistemic_transition_system& sys, const std::string& text )
{
    return parse_view_set( text, sys.views() );
}

inline atom at( const epistemic_transition_system& sys, const std::string& text )
{
    return parse_atom( text, sys.views() );
}

inline state_id st( const epistemic_transition_system& sys, const std::string& name ) { return *sys.states().find( name ); }

inline instruction_id in( const epistemic_transition_system& sys, const std::string& name )
{
    return *sys.instructions().find( name );
}

inline amnesic_strategy constant( const epistemic_transition_system& sys, const std::string& name )
{
    return amnesic_strategy::constant( sys.view_count(), in( sys, name ) );
}

inline until_objective objective( const epistemic_transition_system& sys, const std::string& a, const std::string& b,
                                  const std::string& c )
{
    return { vs( sys, a ), vs( sys, b ), vs( sys, c ) };
}

} // namespace test
