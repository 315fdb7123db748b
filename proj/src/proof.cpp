#include "navlog/proof.hpp"

#include <cstdlib>
#include <deque>
#include <functional>

namespace navlog
{

std::string to_string( rule r )
{
    switch ( r )
    {
    case rule::assumption:
        return "Assumption";
    case rule::reflexivity:
        return "Reflexivity";
    case rule::augmentation:
        return "Augmentation";
    case rule::transitivity:
        return "Transitivity";
    case rule::early_bird:
        return "EarlyBird";
    case rule::trivial_path:
        return "TrivialPath";
    case rule::path_to_nowhere:
        return "PathToNowhere";
    }
    return "?";
}

std::size_t saturation_view_limit()
{
    if ( const char* env = std::getenv( "NAVLOG_MAX_VIEWS" ) )
    {
        char* end = nullptr;
        const auto value = std::strtoul( env, &end, 10 );
        if ( end != env && *end == '\0' )
            return std::min< std::size_t >( value, hard_saturation_views );
    }
    return default_saturation_views;
}

std::size_t closure::index_of( const atom& a ) const
{
    const auto n = view_count();
    const auto all = all_views();
    if ( !a.start.subset_of( all ) || !a.corridor.subset_of( all ) || !a.target.subset_of( all ) )
        throw usage_error( "atom mentions views outside the closure's universe" );
    return static_cast< std::size_t >( a.start.bits() | ( a.corridor.bits() << n ) | ( a.target.bits() << ( 2 * n ) ) );
}

atom closure::atom_at( std::size_t index ) const
{
    const auto n = view_count();
    const auto mask = all_views().bits();
    return { view_set{ index & mask }, view_set{ ( index >> n ) & mask }, view_set{ ( index >> ( 2 * n ) ) & mask } };
}

std::vector< atom > closure::derived_atoms() const
{
    std::vector< atom > out;
    out.reserve( _derived_count );
    for ( std::size_t k = 0; k < _derived.size(); ++k )
        if ( _derived[ k ] )
            out.push_back( atom_at( k ) );
    return out;
}

provenance closure::how( const atom& a ) const
{
    const auto k = index_of( a );
    if ( !_derived[ k ] )
        throw usage_error( "atom is not derived" );
    const auto& p = _provenance[ k ];
    provenance out;
    out.by = p.by;
    switch ( p.by )
    {
    case rule::assumption:
    case rule::reflexivity:
        break;
    case rule::transitivity:
        out.premises[ 1 ] = atom_at( p.second );
        out.premise_count = 1;
        [[fallthrough]];
    default:
        out.premises[ 0 ] = atom_at( p.first );
        ++out.premise_count;
    }
    out.augment_by = view_set{ p.augment_by };
    return out;
}

closure saturate( view_universe universe, const std::vector< atom >& assumptions, std::size_t view_limit )
{
    const auto n = universe.size();
    if ( n > std::min( view_limit, hard_saturation_views ) )
        throw usage_error( "universe of " + std::to_string( n ) + " views exceeds the saturation limit of " +
                           std::to_string( std::min( view_limit, hard_saturation_views ) ) );

    closure c;
    c._universe = std::move( universe );
    c._assumptions = assumptions;
    const std::size_t subsets = std::size_t{ 1 } << n;
    const std::size_t atoms = subsets * subsets * subsets;
    c._derived.assign( atoms, 0 );
    c._provenance.assign( atoms, {} );

    // Derived atoms grouped by first and by third component, for joining Transitivity premises.
    std::vector< std::vector< std::uint32_t > > by_start( subsets ), by_target( subsets );
    std::deque< std::uint32_t > work;

    auto add = [ & ]( const atom& a, rule by, std::uint32_t first = 0, std::uint32_t second = 0,
                      view_set d = {} ) {
        const auto k = static_cast< std::uint32_t >( c.index_of( a ) );
        if ( c._derived[ k ] )
            return;
        c._derived[ k ] = 1;
        ++c._derived_count;
        c._provenance[ k ] = { first, second, static_cast< std::uint32_t >( d.bits() ), by };
        by_start[ a.start.bits() ].push_back( k );
        by_target[ a.target.bits() ].push_back( k );
        work.push_back( k );
    };

    for ( const auto& a : assumptions )
        add( a, rule::assumption );

    const auto all = view_set::full( n );
    for_each_subset( all, [ & ]( view_set target ) {
        for_each_subset( target, [ & ]( view_set start ) {
            for_each_subset( all, [ & ]( view_set corridor ) { add( { start, corridor, target }, rule::reflexivity ); } );
        } );
    } );

    while ( !work.empty() )
    {
        const auto k = work.front();
        work.pop_front();
        const auto x = c.atom_at( k );

        for_each_subset( all - ( x.start & x.target ),
                         [ & ]( view_set d ) { add( { x.start | d, x.corridor, x.target | d }, rule::augmentation, k, 0, d ); } );

        add( { x.start, x.corridor - x.target, x.target }, rule::early_bird, k );
        if ( x.corridor.empty() )
            add( { x.start - x.target, {}, {} }, rule::trivial_path, k );
        if ( x.target.empty() )
            add( { x.start, {}, {} }, rule::path_to_nowhere, k );

        // x as the first premise: x = A ▷_B C, y = C ▷_D E.
        {
            const auto& list = by_start[ x.target.bits() ];
            for ( std::size_t j = 0; j < list.size(); ++j )
            {
                const auto yk = list[ j ];
                const auto y = c.atom_at( yk );
                if ( x.corridor.disjoint( y.corridor ) )
                    add( { x.start, x.corridor | y.corridor, y.target }, rule::transitivity, k, yk );
            }
        }
        // x as the second premise: y = A ▷_B C, x = C ▷_D E.
        {
            const auto& list = by_target[ x.start.bits() ];
            for ( std::size_t j = 0; j < list.size(); ++j )
            {
                const auto yk = list[ j ];
                const auto y = c.atom_at( yk );
                if ( y.corridor.disjoint( x.corridor ) )
                    add( { y.start, y.corridor | x.corridor, x.target }, rule::transitivity, yk, k );
            }
        }
    }
    return c;
}

bool derives( const closure& c, const atom& a ) { return c.contains( a ); }

std::optional< atom > find_unclosed( const closure& c )
{
    const auto all = c.all_views();
    for ( const auto& a : c.assumptions() )
        if ( !c.contains( a ) )
            return a;

    std::optional< atom > missing;
    auto need = [ & ]( const atom& a ) {
        if ( !missing && !c.contains( a ) )
            missing = a;
    };

    std::vector< std::vector< atom > > by_start( std::size_t{ 1 } << c.view_count() );
    const auto derived = c.derived_atoms();
    for ( const auto& x : derived )
        by_start[ x.start.bits() ].push_back( x );

    for_each_subset( all, [ & ]( view_set target ) {
        for_each_subset( target, [ & ]( view_set start ) {
            for_each_subset( all, [ & ]( view_set corridor ) { need( { start, corridor, target } ); } );
        } );
    } );
    for ( const auto& x : derived )
    {
        for_each_subset( all, [ & ]( view_set d ) { need( { x.start | d, x.corridor, x.target | d } ); } );
        need( { x.start, x.corridor - x.target, x.target } );
        if ( x.corridor.empty() )
            need( { x.start - x.target, {}, {} } );
        if ( x.target.empty() )
            need( { x.start, {}, {} } );
        for ( const auto& y : by_start[ x.target.bits() ] )
            if ( x.corridor.disjoint( y.corridor ) )
                need( { x.start, x.corridor | y.corridor, y.target } );
        if ( missing )
            break;
    }
    return missing;
}

bool valid_instance( const provenance& p, const atom& conclusion )
{
    const auto& x = p.premises[ 0 ];
    switch ( p.by )
    {
    case rule::assumption:
        return p.premise_count == 0;
    case rule::reflexivity:
        return p.premise_count == 0 && conclusion.start.subset_of( conclusion.target );
    case rule::augmentation:
        return p.premise_count == 1 &&
               conclusion == atom{ x.start | p.augment_by, x.corridor, x.target | p.augment_by };
    case rule::transitivity: {
        const auto& y = p.premises[ 1 ];
        return p.premise_count == 2 && x.target == y.start && x.corridor.disjoint( y.corridor ) &&
               conclusion == atom{ x.start, x.corridor | y.corridor, y.target };
    }
    case rule::early_bird:
        return p.premise_count == 1 && conclusion == atom{ x.start, x.corridor - x.target, x.target };
    case rule::trivial_path:
        return p.premise_count == 1 && x.corridor.empty() && conclusion == atom{ x.start - x.target, {}, {} };
    case rule::path_to_nowhere:
        return p.premise_count == 1 && x.target.empty() && conclusion == atom{ x.start, {}, {} };
    }
    return false;
}

std::size_t derivation_tree::node_count() const
{
    std::size_t n = 1;
    for ( const auto& c : children )
        n += c.node_count();
    return n;
}

derivation_tree explain( const closure& c, const atom& a )
{
    if ( !c.contains( a ) )
        throw usage_error( "atom is not derivable" );
    const auto p = c.how( a );
    derivation_tree t{ a, p.by, p.augment_by, {} };
    for ( std::size_t k = 0; k < p.premise_count; ++k )
        t.children.push_back( explain( c, p.premises[ k ] ) );
    return t;
}

std::string render_tree( const derivation_tree& t, const view_universe& views )
{
    std::string out;
    std::function< void( const derivation_tree&, std::size_t ) > walk = [ & ]( const derivation_tree& node,
                                                                              std::size_t depth ) {
        out += std::string( depth * 2, ' ' ) + render_atom( node.root, views ) + "  [" + to_string( node.by );
        if ( node.by == rule::augmentation )
            out += " D=" + render_view_set( node.augment_by, views );
        out += "]\n";
        for ( const auto& child : node.children )
            walk( child, depth + 1 );
    };
    walk( t, 0 );
    return out;
}

std::uint64_t lemma_report::total_violations() const
{
    std::uint64_t total = 0;
    for ( const auto& s : sweeps )
        total += s.violations;
    return total;
}

lemma_report check_derived_lemmas( const closure& c )
{
    constexpr std::size_t sample_cap = 20;
    lemma_report report;
    const auto all = c.all_views();
    const auto derived = c.derived_atoms();

    auto sweep = [ & ]( const std::string& name, auto&& body ) {
        lemma_sweep s{ name };
        auto expect = [ & ]( std::vector< atom > premises, const atom& conclusion ) {
            ++s.instances;
            if ( c.contains( conclusion ) )
                return;
            ++s.violations;
            if ( report.violations.size() < sample_cap )
                report.violations.push_back( { name, std::move( premises ), conclusion } );
        };
        body( expect );
        report.sweeps.push_back( s );
    };

    sweep( "remove-left", [ & ]( auto&& expect ) {
        for ( const auto& x : derived )
            for_each_subset( x.start, [ & ]( view_set a2 ) { expect( { x }, { a2, x.corridor, x.target } ); } );
    } );
    sweep( "add-down", [ & ]( auto&& expect ) {
        for ( const auto& x : derived )
            for_each_subset( all - x.corridor, [ & ]( view_set extra ) {
                expect( { x }, { x.start, x.corridor | extra, x.target } );
            } );
    } );
    sweep( "add-right", [ & ]( auto&& expect ) {
        for ( const auto& x : derived )
            for_each_subset( all - x.target, [ & ]( view_set extra ) {
                expect( { x }, { x.start, x.corridor, x.target | extra } );
            } );
    } );
    sweep( "remove-void", [ & ]( auto&& expect ) {
        for_each_subset( all, [ & ]( view_set void_views ) {
            const atom empty_classes{ void_views, {}, {} };
            if ( !c.contains( empty_classes ) )
                return;
            for ( const auto& x : derived )
                expect( { empty_classes, x }, { x.start, x.corridor - void_views, x.target } );
        } );
    } );
    sweep( "super-transitivity", [ & ]( auto&& expect ) {
        std::vector< std::vector< atom > > by_start( std::size_t{ 1 } << c.view_count() );
        for ( const auto& x : derived )
            by_start[ x.start.bits() ].push_back( x );
        for ( const auto& x : derived )
            for ( const auto& y : by_start[ x.target.bits() ] )
                if ( ( x.corridor & y.corridor ).subset_of( x.target ) )
                    expect( { x, y }, { x.start, x.corridor | y.corridor, y.target } );
    } );
    return report;
}

} // namespace navlog
