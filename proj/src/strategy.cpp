#include "navlog/strategy.hpp"

#include <algorithm>

namespace navlog
{

std::string to_string( failure_reason r )
{
    switch ( r )
    {
    case failure_reason::left_corridor:
        return "LeftCorridor";
    case failure_reason::dead_end:
        return "DeadEnd";
    case failure_reason::never_reaches:
        return "NeverReaches";
    }
    return "?";
}

void require_strategy_fits( const epistemic_transition_system& system, const amnesic_strategy& strategy )
{
    if ( strategy.size() != system.view_count() )
        throw usage_error( "strategy must be defined on every view of the system" );
    for ( auto i : strategy.choices() )
        if ( i.index >= system.instruction_count() )
            throw usage_error( "strategy selects an undeclared instruction" );
}

void require_objective_fits( const epistemic_transition_system& system, const until_objective& objective )
{
    const auto all = system.all_views();
    if ( !objective.start.subset_of( all ) || !objective.corridor.subset_of( all ) ||
         !objective.target.subset_of( all ) )
        throw usage_error( "objective mentions views outside the system's universe" );
}

strategy_result check_strategy( const epistemic_transition_system& system, const amnesic_strategy& strategy,
                                const until_objective& objective )
{
    require_strategy_fits( system, strategy );
    require_objective_fits( system, objective );

    enum class mark : unsigned char { unseen, on_path, done };
    std::vector< mark > marks( system.state_count(), mark::unseen );

    struct frame
    {
        state_id state;
        std::size_t next = 0;
    };
    std::vector< frame > stack;

    auto path_of = [ & ] {
        std::vector< state_id > path;
        path.reserve( stack.size() );
        for ( const auto& f : stack )
            path.push_back( f.state );
        return path;
    };

    // Classifies a freshly reached state. Returns a witness if it ends the search.
    auto enter = [ & ]( state_id s ) -> std::optional< path_witness > {
        const auto v = system.observe( s );
        if ( objective.target.contains( v ) )
        {
            marks[ s.index ] = mark::done;
            return std::nullopt;
        }
        stack.push_back( { s } );
        if ( !objective.corridor.contains( v ) )
            return path_witness{ path_of(), std::nullopt, failure_reason::left_corridor };
        if ( system.successors( s, strategy( v ) ).empty() )
            return path_witness{ path_of(), std::nullopt, failure_reason::dead_end };
        marks[ s.index ] = mark::on_path;
        return std::nullopt;
    };

    for ( std::size_t root = 0; root < system.state_count(); ++root )
    {
        const state_id r{ root };
        if ( !objective.start.contains( system.observe( r ) ) || marks[ root ] != mark::unseen )
            continue;
        if ( auto w = enter( r ) )
            return *w;

        while ( !stack.empty() )
        {
            auto& top = stack.back();
            const auto succ = system.successors( top.state, strategy( system.observe( top.state ) ) );
            if ( top.next == succ.size() )
            {
                marks[ top.state.index ] = mark::done;
                stack.pop_back();
                continue;
            }
            const auto next = succ[ top.next++ ];
            switch ( marks[ next.index ] )
            {
            case mark::done:
                break;
            case mark::on_path: {
                auto path = path_of();
                auto at = std::find( path.begin(), path.end(), next ) - path.begin();
                return path_witness{ std::move( path ), static_cast< std::size_t >( at ),
                                     failure_reason::never_reaches };
            }
            case mark::unseen:
                if ( auto w = enter( next ) )
                    return *w;
                break;
            }
        }
    }
    return strategy_ok{};
}

std::optional< std::string > replay_witness( const epistemic_transition_system& system,
                                             const amnesic_strategy& strategy, const until_objective& objective,
                                             const path_witness& witness )
{
    const auto& path = witness.states;
    if ( path.empty() )
        return "empty path";
    for ( auto s : path )
        if ( s.index >= system.state_count() )
            return "undeclared state in path";
    if ( !objective.start.contains( system.observe( path.front() ) ) )
        return "path does not start in the start set";

    auto step_ok = [ & ]( state_id from, state_id to ) {
        auto succ = system.successors( from, strategy( system.observe( from ) ) );
        return std::find( succ.begin(), succ.end(), to ) != succ.end();
    };
    for ( std::size_t k = 0; k + 1 < path.size(); ++k )
        if ( !step_ok( path[ k ], path[ k + 1 ] ) )
            return "step " + std::to_string( k ) + " is not a strategy transition";

    const auto inner = objective.corridor - objective.target;
    auto in_inner = [ & ]( state_id s ) { return inner.contains( system.observe( s ) ); };
    const auto last = path.back();

    switch ( witness.reason )
    {
    case failure_reason::left_corridor:
        if ( witness.loop_start )
            return "LeftCorridor witness must be finite";
        if ( !std::all_of( path.begin(), path.end() - 1, in_inner ) )
            return "a prior state is outside corridor minus target";
        if ( ( objective.corridor | objective.target ).contains( system.observe( last ) ) )
            return "final state is inside corridor or target";
        return std::nullopt;
    case failure_reason::dead_end:
        if ( witness.loop_start )
            return "DeadEnd witness must be finite";
        if ( !std::all_of( path.begin(), path.end(), in_inner ) )
            return "a state is outside corridor minus target";
        if ( !system.successors( last, strategy( system.observe( last ) ) ).empty() )
            return "final state has a successor";
        return std::nullopt;
    case failure_reason::never_reaches:
        if ( !witness.loop_start || *witness.loop_start >= path.size() )
            return "NeverReaches witness needs a loop start inside the path";
        if ( !std::all_of( path.begin(), path.end(), in_inner ) )
            return "a state is outside corridor minus target";
        if ( !step_ok( last, path[ *witness.loop_start ] ) )
            return "cycle is not closed under the strategy";
        return std::nullopt;
    }
    return "unknown reason";
}

} // namespace navlog
