#include "navlog/recall.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace navlog
{

std::vector< belief > initial_beliefs( const epistemic_transition_system& system, view_set start )
{
    std::vector< belief > out;
    start.for_each( [ & ]( view_id v ) {
        const auto cls = system.observers( v );
        if ( !cls.empty() )
            out.push_back( { v, { cls.begin(), cls.end() } } );
    } );
    return out;
}

belief_step belief_successors( const epistemic_transition_system& system, const belief& b, instruction_id i )
{
    std::vector< std::vector< state_id > > by_view( system.view_count() );
    for ( auto s : b.possible )
    {
        const auto succ = system.successors( s, i );
        if ( succ.empty() )
            return dead_end_flag{};
        for ( auto t : succ )
            by_view[ system.observe( t ).index ].push_back( t );
    }
    std::vector< belief > out;
    for ( std::size_t v = 0; v < by_view.size(); ++v )
    {
        auto& states = by_view[ v ];
        if ( states.empty() )
            continue;
        std::sort( states.begin(), states.end() );
        states.erase( std::unique( states.begin(), states.end() ), states.end() );
        out.push_back( { view_id{ v }, std::move( states ) } );
    }
    return out;
}

namespace
{

constexpr std::size_t not_won = static_cast< std::size_t >( -1 );

struct belief_graph
{
    std::vector< belief > nodes;
    std::map< belief, std::size_t > index;
    // moves[n][i]: successor node indices, or nullopt for a dead end. Empty for unexpanded nodes.
    std::vector< std::vector< std::optional< std::vector< std::size_t > > > > moves;
};

} // namespace

recall_decision check_atom_recall( const epistemic_transition_system& system, const atom& a )
{
    belief_graph g;
    std::deque< std::size_t > queue;
    auto intern = [ & ]( const belief& b ) {
        auto [ it, inserted ] = g.index.emplace( b, g.nodes.size() );
        if ( inserted )
        {
            g.nodes.push_back( b );
            g.moves.emplace_back();
            queue.push_back( it->second );
        }
        return it->second;
    };

    std::vector< std::size_t > initial;
    for ( const auto& b : initial_beliefs( system, a.start ) )
        initial.push_back( intern( b ) );

    const auto inner = a.corridor - a.target;
    while ( !queue.empty() )
    {
        const auto n = queue.front();
        queue.pop_front();
        if ( !inner.contains( g.nodes[ n ].view ) )
            continue;
        std::vector< std::optional< std::vector< std::size_t > > > moves;
        for ( std::size_t i = 0; i < system.instruction_count(); ++i )
        {
            auto step = belief_successors( system, g.nodes[ n ], instruction_id{ i } );
            if ( std::holds_alternative< dead_end_flag >( step ) )
            {
                moves.emplace_back( std::nullopt );
                continue;
            }
            std::vector< std::size_t > succ;
            for ( const auto& b : std::get< std::vector< belief > >( step ) )
                succ.push_back( intern( b ) );
            moves.emplace_back( std::move( succ ) );
        }
        g.moves[ n ] = std::move( moves );
    }

    // rank[n] is the fixpoint round in which n became winning.
    std::vector< std::size_t > rank( g.nodes.size(), not_won );
    std::vector< std::optional< instruction_id > > choice( g.nodes.size() );
    for ( std::size_t n = 0; n < g.nodes.size(); ++n )
        if ( a.target.contains( g.nodes[ n ].view ) )
            rank[ n ] = 0;

    for ( std::size_t round = 1;; ++round )
    {
        bool changed = false;
        for ( std::size_t n = 0; n < g.nodes.size(); ++n )
        {
            if ( rank[ n ] != not_won || !inner.contains( g.nodes[ n ].view ) )
                continue;
            for ( std::size_t i = 0; i < g.moves[ n ].size(); ++i )
            {
                const auto& m = g.moves[ n ][ i ];
                if ( !m )
                    continue;
                const bool wins = std::all_of( m->begin(), m->end(), [ & ]( std::size_t s ) {
                    return rank[ s ] != not_won && rank[ s ] < round;
                } );
                if ( wins )
                {
                    rank[ n ] = round;
                    choice[ n ] = instruction_id{ i };
                    changed = true;
                    break;
                }
            }
        }
        if ( !changed )
            break;
    }

    recall_decision decision;
    decision.explored = g.nodes.size();
    decision.holds = std::all_of( initial.begin(), initial.end(), [ & ]( std::size_t n ) { return rank[ n ] != not_won; } );
    if ( !decision.holds )
        return decision;
    // Keep only beliefs the witness itself can lead to; ranks strictly decrease along moves.
    std::vector< std::size_t > stack = initial;
    std::vector< bool > seen( g.nodes.size(), false );
    while ( !stack.empty() )
    {
        const auto n = stack.back();
        stack.pop_back();
        if ( seen[ n ] || !choice[ n ] )
            continue;
        seen[ n ] = true;
        decision.witness.emplace( g.nodes[ n ], *choice[ n ] );
        for ( auto s : *g.moves[ n ][ choice[ n ]->index ] )
            stack.push_back( s );
    }
    return decision;
}

std::optional< std::string > replay_recall_witness( const epistemic_transition_system& system, const atom& a,
                                                    const recall_decision& decision )
{
    if ( !decision.holds )
        return "decision does not hold";
    const auto bound = decision.witness.size() + 1;
    std::set< belief > verified;

    // Depth-first over every environment resolution.
    auto play = [ & ]( auto&& self, const belief& b, std::size_t depth ) -> std::optional< std::string > {
        if ( a.target.contains( b.view ) )
            return std::nullopt;
        if ( !a.corridor.contains( b.view ) )
            return "left the corridor at view " + system.views().name( b.view );
        if ( depth >= bound )
            return "play exceeds the number of witness beliefs";
        if ( verified.count( b ) )
            return std::nullopt;
        for ( auto s : b.possible )
            if ( system.observe( s ) != b.view )
                return "belief mixes views";
        auto it = decision.witness.find( b );
        if ( it == decision.witness.end() )
            return "no instruction for a reached belief at view " + system.views().name( b.view );
        auto step = belief_successors( system, b, it->second );
        if ( std::holds_alternative< dead_end_flag >( step ) )
            return "witness instruction terminates at view " + system.views().name( b.view );
        for ( const auto& next : std::get< std::vector< belief > >( step ) )
            if ( auto err = self( self, next, depth + 1 ) )
                return err;
        verified.insert( b );
        return std::nullopt;
    };

    for ( const auto& b : initial_beliefs( system, a.start ) )
        if ( auto err = play( play, b, 0 ) )
            return err;
    return std::nullopt;
}

} // namespace navlog
