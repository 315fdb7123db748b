#pragma once

#include "navlog/error.hpp"
#include "navlog/view_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace navlog
{

// Ordered, finite set of interned names. Declaration order is the canonical order.
template < typename Id >
class name_table
{
    std::vector< std::string > _names;
    std::unordered_map< std::string, Id > _index;

public:
    // Returns nullopt if the name was already present.
    std::optional< Id > add( std::string name )
    {
        Id id{ _names.size() };
        if ( !_index.emplace( name, id ).second )
            return std::nullopt;
        _names.push_back( std::move( name ) );
        return id;
    }

    [[nodiscard]] std::optional< Id > find( std::string_view name ) const
    {
        auto it = _index.find( std::string{ name } );
        if ( it == _index.end() )
            return std::nullopt;
        return it->second;
    }

    [[nodiscard]] const std::string& name( Id id ) const { return _names.at( id.index ); }
    [[nodiscard]] std::size_t size() const { return _names.size(); }
    [[nodiscard]] const std::vector< std::string >& names() const { return _names; }
};

using view_universe = name_table< view_id >;

view_universe make_view_universe( const std::vector< std::string >& names );

// Unresolved system description, as read from text. Every entry remembers its source line.
struct raw_system
{
    struct named
    {
        std::string name;
        int line = 0;
    };

    struct state_decl
    {
        std::string name;
        std::string view;
        int line = 0;
    };

    struct transition_decl
    {
        std::string from;
        std::string instruction;
        std::string to;
        int line = 0;
    };

    std::vector< named > views;
    std::vector< named > instructions;
    std::vector< state_decl > states;
    std::vector< transition_decl > transitions;
};

struct transition
{
    state_id from;
    instruction_id instruction;
    state_id to;

    friend auto operator<=>( const transition&, const transition& ) = default;
};

// Finite epistemic transition system: states, an observation map into views, and one
// (possibly nondeterministic, possibly terminating) transition relation per instruction.
// Immutable once built.
class epistemic_transition_system
{
    friend class system_builder;

    view_universe _views;
    name_table< instruction_id > _instructions;
    name_table< state_id > _states;
    std::vector< view_id > _observation;
    std::vector< transition > _transitions;
    // Successor lists indexed by state * |I| + instruction; each sorted by state order.
    std::vector< std::vector< state_id > > _successors;
    // States observing each view, in state order.
    std::vector< std::vector< state_id > > _class;

public:
    [[nodiscard]] const view_universe& views() const { return _views; }
    [[nodiscard]] const name_table< instruction_id >& instructions() const { return _instructions; }
    [[nodiscard]] const name_table< state_id >& states() const { return _states; }

    [[nodiscard]] std::size_t view_count() const { return _views.size(); }
    [[nodiscard]] std::size_t instruction_count() const { return _instructions.size(); }
    [[nodiscard]] std::size_t state_count() const { return _states.size(); }

    [[nodiscard]] view_set all_views() const { return view_set::full( view_count() ); }

    [[nodiscard]] view_id observe( state_id s ) const { return _observation.at( s.index ); }

    // Exactly { v | (s, i, v) is a transition }; empty means the instruction terminates in s.
    [[nodiscard]] std::span< const state_id > successors( state_id s, instruction_id i ) const
    {
        return _successors[ s.index * instruction_count() + i.index ];
    }

    // States with observation v (the indistinguishability class of v); may be empty.
    [[nodiscard]] std::span< const state_id > observers( view_id v ) const { return _class.at( v.index ); }

    [[nodiscard]] const std::vector< transition >& transitions() const { return _transitions; }
};

// Index-based construction. Names must be unique per kind; build() validates.
class system_builder
{
    epistemic_transition_system _sys;
    std::vector< diagnostic > _errors;

public:
    view_id add_view( std::string name, int line = 0 );
    instruction_id add_instruction( std::string name, int line = 0 );
    state_id add_state( std::string name, view_id view, int line = 0 );
    void add_transition( state_id from, instruction_id instruction, state_id to );

    // Throws input_error listing every problem found.
    epistemic_transition_system build() &&;
};

// Resolves names and checks all invariants; reports every violation with its line.
epistemic_transition_system validate_system( const raw_system& raw );

std::span< const state_id > successors( const epistemic_transition_system& system, state_id s, instruction_id i );

} // namespace navlog
