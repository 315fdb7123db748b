#include "navlog/amnesic.hpp"

#include "navlog/recall.hpp"

#include <iomanip>
#include <sstream>

namespace navlog
{

until_objective to_objective( const atom& a ) { return { a.start, a.corridor, a.target }; }

namespace
{

constexpr int unassigned = -1;

// Backtracking over partial strategies. A partial strategy is explored from the start
// states; states whose view has no instruction yet form the frontier. A definite
// counterexample among assigned views prunes the branch.
class strategy_search
{
    const epistemic_transition_system& _sys;
    until_objective _obj;

    enum class mark : unsigned char { unseen, on_path, done };
    std::vector< mark > _marks;
    struct frame
    {
        state_id state;
        std::size_t next = 0;
    };
    std::vector< frame > _stack;

public:
    std::vector< int > assignment;
    std::uint64_t nodes = 0;

    strategy_search( const epistemic_transition_system& sys, until_objective obj )
        : _sys{ sys }, _obj{ obj }, _marks( sys.state_count() ), assignment( sys.view_count(), unassigned )
    {
    }

    bool search()
    {
        ++nodes;
        const auto pending = explore();
        if ( pending == failed )
            return false;
        if ( pending == complete )
            return true;
        for ( std::size_t i = 0; i < _sys.instruction_count(); ++i )
        {
            assignment[ pending ] = static_cast< int >( i );
            if ( search() )
                return true;
        }
        assignment[ pending ] = unassigned;
        return false;
    }

    [[nodiscard]] amnesic_strategy completed() const
    {
        std::vector< instruction_id > choice;
        choice.reserve( assignment.size() );
        for ( auto a : assignment )
            choice.emplace_back( a == unassigned ? 0 : static_cast< std::size_t >( a ) );
        return amnesic_strategy{ std::move( choice ) };
    }

private:
    static constexpr int failed = -2;
    static constexpr int complete = -1;

    // Returns failed, complete, or the first frontier view encountered.
    int explore()
    {
        std::fill( _marks.begin(), _marks.end(), mark::unseen );
        _stack.clear();
        int frontier = complete;

        // false when the state refutes the partial strategy outright
        auto enter = [ & ]( state_id s ) {
            const auto v = _sys.observe( s );
            if ( _obj.target.contains( v ) )
            {
                _marks[ s.index ] = mark::done;
                return true;
            }
            if ( !_obj.corridor.contains( v ) )
                return false;
            const auto choice = assignment[ v.index ];
            if ( choice == unassigned )
            {
                if ( frontier == complete )
                    frontier = static_cast< int >( v.index );
                _marks[ s.index ] = mark::done;
                return true;
            }
            if ( _sys.successors( s, instruction_id{ static_cast< std::size_t >( choice ) } ).empty() )
                return false;
            _marks[ s.index ] = mark::on_path;
            _stack.push_back( { s } );
            return true;
        };

        for ( std::size_t root = 0; root < _sys.state_count(); ++root )
        {
            const state_id r{ root };
            if ( !_obj.start.contains( _sys.observe( r ) ) || _marks[ root ] != mark::unseen )
                continue;
            if ( !enter( r ) )
                return failed;
            while ( !_stack.empty() )
            {
                auto& top = _stack.back();
                const auto choice = assignment[ _sys.observe( top.state ).index ];
                const auto succ = _sys.successors( top.state, instruction_id{ static_cast< std::size_t >( choice ) } );
                if ( top.next == succ.size() )
                {
                    _marks[ top.state.index ] = mark::done;
                    _stack.pop_back();
                    continue;
                }
                const auto next = succ[ top.next++ ];
                if ( _marks[ next.index ] == mark::on_path )
                    return failed;
                if ( _marks[ next.index ] == mark::unseen && !enter( next ) )
                    return failed;
            }
        }
        return frontier;
    }
};

} // namespace

amnesic_decision check_atom_amnesic( const epistemic_transition_system& system, const atom& a,
                                     amnesic_options options )
{
    const auto objective = to_objective( a );
    require_objective_fits( system, objective );

    amnesic_decision decision;
    strategy_search search{ system, objective };
    decision.holds = search.search();
    if ( !decision.holds )
    {
        decision.strategies_examined = search.nodes;
        return decision;
    }
    if ( !options.canonical_witness )
    {
        decision.witness = search.completed();
        decision.strategies_examined = search.nodes;
        return decision;
    }

    for ( std::size_t i = 0; i < system.instruction_count(); ++i )
    {
        auto constant = amnesic_strategy::constant( system.view_count(), instruction_id{ i } );
        ++search.nodes;
        if ( is_ok( check_strategy( system, constant, objective ) ) )
        {
            decision.witness = std::move( constant );
            decision.strategies_examined = search.nodes;
            return decision;
        }
    }

    // Fix views one at a time to the least instruction that still admits a solution.
    std::fill( search.assignment.begin(), search.assignment.end(), unassigned );
    for ( std::size_t v = 0; v < system.view_count(); ++v )
    {
        bool fixed = false;
        for ( std::size_t i = 0; i < system.instruction_count() && !fixed; ++i )
        {
            search.assignment[ v ] = static_cast< int >( i );
            auto probe = search.assignment;
            fixed = search.search();
            search.assignment = std::move( probe );
        }
        if ( !fixed )
            throw std::logic_error( "amnesic search lost its solution while canonicalizing" );
    }
    decision.witness = search.completed();
    decision.strategies_examined = search.nodes;
    return decision;
}

bool evaluate( const epistemic_transition_system& system, const formula& f )
{
    if ( const auto* a = std::get_if< atom >( &f.get() ) )
        return check_atom_amnesic( system, *a, { .canonical_witness = false } ).holds;
    if ( const auto* n = std::get_if< negation >( &f.get() ) )
        return !evaluate( system, *n->operand );
    const auto& imp = std::get< implication >( f.get() );
    return !evaluate( system, *imp.antecedent ) || evaluate( system, *imp.consequent );
}

navigability_table build_navigability_table( const epistemic_transition_system& system,
                                             const std::vector< view_id >& classes, navigability_modes modes )
{
    navigability_table table;
    table.classes = classes;
    const auto all = system.all_views();
    for ( auto row : classes )
    {
        auto& cells = table.cells.emplace_back();
        for ( auto col : classes )
        {
            const atom a{ view_set::single( row ), all, view_set::single( col ) };
            if ( modes.amnesic && check_atom_amnesic( system, a, { .canonical_witness = false } ).holds )
                cells.push_back( navigation_kind::amnesic );
            else if ( modes.recall && check_atom_recall( system, a ).holds )
                cells.push_back( navigation_kind::recall_only );
            else
                cells.push_back( navigation_kind::none );
        }
    }
    return table;
}

std::string render_table( const navigability_table& table, const view_universe& views )
{
    std::size_t width = 1;
    for ( auto c : table.classes )
        width = std::max( width, views.name( c ).size() );

    std::ostringstream out;
    out << std::left << std::setw( static_cast< int >( width ) ) << "" << " |";
    for ( auto c : table.classes )
        out << ' ' << std::setw( static_cast< int >( width ) ) << views.name( c );
    out << '\n';
    for ( std::size_t r = 0; r < table.classes.size(); ++r )
    {
        out << std::setw( static_cast< int >( width ) ) << views.name( table.classes[ r ] ) << " |";
        std::string row;
        for ( auto cell : table.cells[ r ] )
        {
            row += ' ';
            row += static_cast< char >( cell );
            row.append( width - 1, ' ' );
        }
        out << row.substr( 0, row.find_last_not_of( ' ' ) + 1 ) << '\n';
    }
    return out.str();
}

} // namespace navlog
