#include "navlog/system.hpp"

#include <algorithm>

namespace navlog
{

std::string diagnostic::to_string() const
{
    std::string out;
    if ( line > 0 )
    {
        out += "line " + std::to_string( line );
        if ( column > 0 )
            out += ", column " + std::to_string( column );
        out += ": ";
    }
    return out + message;
}

namespace
{

std::string join_diagnostics( const std::vector< diagnostic >& ds )
{
    std::string out;
    for ( const auto& d : ds )
    {
        if ( !out.empty() )
            out += '\n';
        out += d.to_string();
    }
    return out;
}

} // namespace

input_error::input_error( std::vector< diagnostic > diagnostics )
    : std::runtime_error{ join_diagnostics( diagnostics ) }, _diagnostics{ std::move( diagnostics ) }
{
}

input_error::input_error( int line, int column, std::string message )
    : input_error{ std::vector< diagnostic >{ { line, column, std::move( message ) } } }
{
}

view_universe make_view_universe( const std::vector< std::string >& names )
{
    view_universe u;
    for ( const auto& n : names )
        if ( !u.add( n ) )
            throw input_error( 0, 0, "duplicate view '" + n + "'" );
    if ( u.size() > max_views )
        throw input_error( 0, 0, "too many views (limit " + std::to_string( max_views ) + ")" );
    return u;
}

view_id system_builder::add_view( std::string name, int line )
{
    auto id = _sys._views.add( name );
    if ( !id )
    {
        _errors.push_back( { line, 0, "duplicate view '" + name + "'" } );
        return *_sys._views.find( name );
    }
    _sys._class.emplace_back();
    return *id;
}

instruction_id system_builder::add_instruction( std::string name, int line )
{
    auto id = _sys._instructions.add( name );
    if ( !id )
    {
        _errors.push_back( { line, 0, "duplicate instruction '" + name + "'" } );
        return *_sys._instructions.find( name );
    }
    return *id;
}

state_id system_builder::add_state( std::string name, view_id view, int line )
{
    auto id = _sys._states.add( name );
    if ( !id )
    {
        _errors.push_back( { line, 0, "duplicate state '" + name + "'" } );
        return *_sys._states.find( name );
    }
    _sys._observation.push_back( view );
    return *id;
}

void system_builder::add_transition( state_id from, instruction_id instruction, state_id to )
{
    _sys._transitions.push_back( { from, instruction, to } );
}

epistemic_transition_system system_builder::build() &&
{
    if ( _sys._instructions.size() == 0 )
        _errors.push_back( { 0, 0, "system declares no instructions" } );
    if ( _sys._views.size() > max_views )
        _errors.push_back( { 0, 0, "too many views (limit " + std::to_string( max_views ) + ")" } );
    if ( !_errors.empty() )
        throw input_error( std::move( _errors ) );

    auto& sys = _sys;
    const auto n_states = sys._states.size();
    const auto n_instr = sys._instructions.size();

    for ( std::size_t s = 0; s < n_states; ++s )
    {
        const auto v = sys._observation[ s ];
        if ( v.index >= sys._views.size() )
            throw usage_error( "state observes an undeclared view" );
        sys._class[ v.index ].push_back( state_id{ s } );
    }

    std::sort( sys._transitions.begin(), sys._transitions.end() );
    sys._transitions.erase( std::unique( sys._transitions.begin(), sys._transitions.end() ), sys._transitions.end() );

    sys._successors.assign( n_states * n_instr, {} );
    for ( const auto& t : sys._transitions )
    {
        if ( t.from.index >= n_states || t.to.index >= n_states || t.instruction.index >= n_instr )
            throw usage_error( "transition refers to an undeclared state or instruction" );
        sys._successors[ t.from.index * n_instr + t.instruction.index ].push_back( t.to );
    }
    // Transitions are sorted by (from, instruction, to) so each list is already in state order.
    return std::move( sys );
}

epistemic_transition_system validate_system( const raw_system& raw )
{
    system_builder builder;
    std::vector< diagnostic > errors;

    view_universe views;
    name_table< instruction_id > instructions;
    name_table< state_id > states;

    for ( const auto& v : raw.views )
    {
        if ( !views.add( v.name ) )
            errors.push_back( { v.line, 0, "duplicate view '" + v.name + "'" } );
        else
            builder.add_view( v.name, v.line );
    }
    for ( const auto& i : raw.instructions )
    {
        if ( !instructions.add( i.name ) )
            errors.push_back( { i.line, 0, "duplicate instruction '" + i.name + "'" } );
        else
            builder.add_instruction( i.name, i.line );
    }
    for ( const auto& s : raw.states )
    {
        auto view = views.find( s.view );
        if ( !view )
        {
            errors.push_back( { s.line, 0, "state '" + s.name + "' observes unknown view '" + s.view + "'" } );
            continue;
        }
        if ( !states.add( s.name ) )
        {
            errors.push_back( { s.line, 0, "duplicate state '" + s.name + "'" } );
            continue;
        }
        builder.add_state( s.name, *view, s.line );
    }
    for ( const auto& t : raw.transitions )
    {
        auto from = states.find( t.from );
        auto instr = instructions.find( t.instruction );
        auto to = states.find( t.to );
        if ( !from )
            errors.push_back( { t.line, 0, "transition from unknown state '" + t.from + "'" } );
        if ( !instr )
            errors.push_back( { t.line, 0, "transition uses unknown instruction '" + t.instruction + "'" } );
        if ( !to )
            errors.push_back( { t.line, 0, "transition to unknown state '" + t.to + "'" } );
        if ( from && instr && to )
            builder.add_transition( *from, *instr, *to );
    }
    if ( !errors.empty() )
        throw input_error( std::move( errors ) );
    return std::move( builder ).build();
}

std::span< const state_id > successors( const epistemic_transition_system& system, state_id s, instruction_id i )
{
    return system.successors( s, i );
}

} // namespace navlog
