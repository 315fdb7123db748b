#include "navlog/amnesic.hpp"
#include "navlog/canonical.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

using namespace navlog;
using namespace test;

namespace
{

closure theory( const std::vector< std::string >& views, const std::vector< std::string >& assumptions )
{
    const auto u = make_view_universe( views );
    std::vector< atom > xs;
    for ( const auto& a : assumptions )
        xs.push_back( parse_atom( a, u ) );
    return saturate( u, xs );
}

view_set set_of( const closure& c, const std::string& text ) { return parse_view_set( text, c.universe() ); }

using triple = std::tuple< std::uint64_t, std::uint64_t, std::uint64_t >;

std::set< triple > triples( const std::vector< canonical_instruction >& is )
{
    std::set< triple > out;
    for ( const auto& i : is )
        out.emplace( i.start.bits(), i.middle.bits(), i.target.bits() );
    return out;
}

// Instruction set recomputed from its defining condition over all subset triples.
std::set< triple > expected_instructions( const closure& c )
{
    const auto valid = valid_views( c );
    std::set< triple > out;
    const auto sets = std::uint64_t{ 1 } << c.view_count();
    for ( std::uint64_t a = 0; a < sets; ++a )
        for ( std::uint64_t b = 0; b < sets; ++b )
            for ( std::uint64_t t = 0; t < sets; ++t )
            {
                const view_set A{ a }, B{ b }, C{ t };
                if ( ( A | B | C ).subset_of( valid ) && A.disjoint( B ) && A.disjoint( C ) && B.disjoint( C ) &&
                     c.contains( { A, A | B, C } ) )
                    out.emplace( a, b, t );
            }
    return out;
}

std::vector< std::size_t > random_canonical_strategy( std::mt19937_64& rng, const canonical_model& m )
{
    std::vector< std::size_t > s( m.system.view_count() );
    for ( auto& x : s )
        x = rng() % m.instructions.size();
    return s;
}

} // namespace

TEST_CASE( "valid views" )
{
    CHECK( valid_views( theory( { "x" }, {} ) ) == view_set::full( 1 ) );
    CHECK( valid_views( theory( { "x" }, { "nav({x}; {}; {})" } ) ).empty() );
    const auto c = theory( { "x", "y" }, { "nav({x}; {}; {y})" } );
    CHECK( valid_views( c ) == set_of( c, "{y}" ) );
}

TEST_CASE( "canonical instructions" )
{
    const auto one = theory( { "x" }, {} );
    const auto x = set_of( one, "{x}" );
    CHECK( triples( canonical_instructions( one ) ) ==
           std::set< triple >{ { 0, 0, 0 }, { 0, x.bits(), 0 }, { 0, 0, x.bits() } } );

    const auto none = theory( { "x" }, { "nav({x}; {}; {})" } );
    CHECK( triples( canonical_instructions( none ) ) == std::set< triple >{ { 0, 0, 0 } } );

    const auto two = theory( { "x", "y" }, { "nav({x}; {}; {y})" } );
    const auto is = triples( canonical_instructions( two ) );
    const auto xb = set_of( two, "{x}" ).bits();
    const auto yb = set_of( two, "{y}" ).bits();
    CHECK( !is.contains( { xb, 0, yb } ) );
    CHECK( is.contains( { 0, 0, yb } ) );
}

TEST_CASE( "canonical systems" )
{
    const auto one = build_canonical( theory( { "x" }, {} ) );
    CHECK( one.system.state_count() == 4 );
    CHECK( one.instructions.size() == 3 );
    for ( std::size_t s = 0; s < 4; ++s )
        CHECK( one.system.views().name( one.system.observe( state_id{ s } ) ) == "x" );

    const auto empty = build_canonical( theory( { "x" }, { "nav({x}; {}; {})" } ) );
    CHECK( empty.system.state_count() == 0 );
    CHECK( empty.system.view_count() == 1 );

    const auto c = theory( { "x", "y" }, { "nav({x}; {y}; {y})" } );
    const auto m = build_canonical( c );
    CHECK( check_atom_amnesic( m.system, parse_atom( "nav({x}; {y}; {y})", m.system.views() ) ).holds );
}

TEST_CASE( "truth lemma on small theories" )
{
    const auto one = theory( { "x" }, {} );
    auto r = verify_truth_lemma( one, default_truth_lemma_policy( one ) );
    CHECK( r.checked == 8 );
    CHECK( r.mismatches.empty() );

    const auto none = theory( { "x" }, { "nav({x}; {}; {})" } );
    CHECK( verify_truth_lemma( none, default_truth_lemma_policy( none ) ).mismatches.empty() );
    CHECK( check_atom_amnesic( build_canonical( none ).system, { view_set::full( 1 ), {}, {} } ).holds );

    const auto two = theory( { "x", "y" }, { "nav({x}; {y}; {y})" } );
    r = verify_truth_lemma( two, default_truth_lemma_policy( two ) );
    CHECK( r.checked == 64 );
    CHECK( r.mismatches.empty() );

    const auto four = saturate( oracle::universe_of_size( 4 ), {} );
    const auto p = default_truth_lemma_policy( four );
    CHECK_FALSE( p.exhaustive );
    r = verify_truth_lemma( four, { false, 64, 9, 0 } );
    CHECK( r.checked == 64 );
    CHECK( r.mismatches.empty() );
}

TEST_CASE( "canonical model invariants" )
{
    std::mt19937_64 rng{ 61 };
    for ( int trial = 0; trial < 40; ++trial )
    {
        const auto n = 1 + rng() % 3;
        const auto c = saturate( oracle::universe_of_size( n ), oracle::random_theory( rng, n ) );
        const auto m = build_canonical( c );
        const auto valid = valid_views( c );
        CHECK( m.valid == valid );
        CHECK( triples( m.instructions ) == expected_instructions( c ) );
        for ( const auto& i : m.instructions )
            if ( i.target.empty() )
                CHECK( i.start.empty() );

        REQUIRE( m.states.size() == m.system.state_count() );
        CHECK( m.system.state_count() == valid.size() * ( 1 + m.instructions.size() ) );
        for ( std::size_t s = 0; s < m.states.size(); ++s )
        {
            const auto v = m.system.observe( state_id{ s } );
            CHECK( valid.contains( v ) );
            std::visit( [ & ]( const auto& x ) { CHECK( x.view == v ); }, m.states[ s ] );
        }

        // Rebuild the relation from its three clauses and compare.
        const auto is_plain = [ & ]( std::size_t s ) { return std::holds_alternative< plain_state >( m.states[ s ] ); };
        const auto view_of = [ & ]( std::size_t s ) { return m.system.observe( state_id{ s } ); };
        const auto partial_for = [ & ]( std::size_t s, std::size_t i ) {
            const auto* p = std::get_if< partial_state >( &m.states[ s ] );
            return p && p->instruction == i;
        };
        std::set< std::tuple< std::size_t, std::size_t, std::size_t > > expected;
        for ( std::size_t i = 0; i < m.instructions.size(); ++i )
        {
            const auto& [ A, B, C ] = m.instructions[ i ];
            for ( std::size_t u = 0; u < m.states.size(); ++u )
                for ( std::size_t w = 0; w < m.states.size(); ++w )
                {
                    const bool full = A.contains( view_of( u ) ) && is_plain( w ) && C.contains( view_of( w ) );
                    const bool entry = A.contains( view_of( u ) ) && !partial_for( u, i ) && partial_for( w, i ) &&
                                       ( A | B ).contains( view_of( w ) );
                    const bool completion = partial_for( u, i ) && ( A | B ).contains( view_of( u ) ) &&
                                            is_plain( w ) && C.contains( view_of( w ) );
                    if ( full || entry || completion )
                        expected.emplace( u, i, w );
                }
        }
        std::set< std::tuple< std::size_t, std::size_t, std::size_t > > actual;
        for ( const auto& t : m.system.transitions() )
            actual.emplace( t.from.index, t.instruction.index, t.to.index );
        CHECK( actual == expected );
    }
}

TEST_CASE( "g chain with nothing to add" )
{
    const auto c = theory( { "x" }, {} );
    const auto m = build_canonical( c );
    const auto chain = gstar_chain( m, { 0 }, view_set::full( 1 ), {} );
    CHECK( chain.stages.empty() );
    CHECK( chain.g_star.empty() );
}

TEST_CASE( "g chain on a two-view theory" )
{
    const auto c = theory( { "x", "y" }, { "nav({x}; {x}; {y})" } );
    const auto m = build_canonical( c );
    // Pick the instruction ({x}, {}, {y}) for x.
    const canonical_instruction want{ set_of( c, "{x}" ), {}, set_of( c, "{y}" ) };
    const auto it = std::find( m.instructions.begin(), m.instructions.end(), want );
    REQUIRE( it != m.instructions.end() );
    const auto idx = static_cast< std::size_t >( it - m.instructions.begin() );
    const auto chain = gstar_chain( m, { idx, 0 }, set_of( c, "{x,y}" ), set_of( c, "{y}" ) );
    REQUIRE( chain.stages.size() == 1 );
    CHECK( chain.stages[ 0 ].g == set_of( c, "{x,y}" ) );
    for ( const auto& ck : certify_gchain( c, chain ) )
    {
        CHECK( ck.base_ok );
        CHECK( ck.main_ok );
    }
    CHECK_THROWS_AS( gstar_chain( m, { idx }, {}, {} ), usage_error );
    CHECK_THROWS_AS( gstar_chain( m, { idx, m.instructions.size() }, {}, {} ), usage_error );
}

TEST_CASE( "g chain with two stages" )
{
    const auto c = theory( { "x", "y", "z" }, { "nav({y}; {y}; {z})", "nav({x}; {x}; {y})" } );
    const auto m = build_canonical( c );
    auto index_of = [ & ]( const char* a, const char* t ) {
        const canonical_instruction want{ set_of( c, a ), {}, set_of( c, t ) };
        const auto it = std::find( m.instructions.begin(), m.instructions.end(), want );
        REQUIRE( it != m.instructions.end() );
        return static_cast< std::size_t >( it - m.instructions.begin() );
    };
    const auto to_y = index_of( "{x}", "{y}" );
    const auto to_z = index_of( "{y}", "{z}" );
    for ( const auto order : { scan_order::forward, scan_order::reverse } )
    {
        const auto chain = gstar_chain( m, { to_y, to_z, 0 }, view_set::full( 3 ), set_of( c, "{z}" ), order );
        REQUIRE( chain.stages.size() == 2 );
        CHECK( chain.stages[ 0 ].g == set_of( c, "{y,z}" ) );
        CHECK( chain.g_star == view_set::full( 3 ) );
        for ( const auto& ck : certify_gchain( c, chain ) )
        {
            CHECK( ck.base_ok );
            CHECK( ck.main_ok );
        }
    }
}

TEST_CASE( "g chains on random configurations" )
{
    std::mt19937_64 rng{ 67 };
    for ( int trial = 0; trial < 60; ++trial )
    {
        const auto n = 1 + rng() % 3;
        const auto c = saturate( oracle::universe_of_size( n ), oracle::random_theory( rng, n ) );
        const auto m = build_canonical( c );
        const auto s = random_canonical_strategy( rng, m );
        const auto f = oracle::random_set( rng, n );
        const auto g = oracle::random_set( rng, n );
        const auto chain = gstar_chain( m, s, f, g );

        view_set prev = g;
        view_set h;
        std::set< std::size_t > used;
        for ( const auto& st : chain.stages )
        {
            const auto& [ A, B, C ] = st.chosen;
            CHECK( ( A | B ).subset_of( f | g ) );
            CHECK( !( st.start_plus - prev ).empty() );
            CHECK( ( A - st.start_plus ).subset_of( prev ) );
            CHECK( ( B - st.middle_plus ).subset_of( prev ) );
            CHECK( C.subset_of( prev ) );
            st.start_plus.for_each( [ & ]( view_id v ) { CHECK( s[ v.index ] == st.instruction ); } );
            CHECK( st.g == ( st.start_plus | prev ) );
            CHECK( st.h == ( st.middle_plus | h ) );
            CHECK( used.insert( st.instruction ).second );
            prev = st.g;
            h = st.h;
        }
        CHECK( chain.g_star == prev );

        for ( const auto& ck : certify_gchain( c, chain ) )
        {
            CHECK( ck.base_ok );
            CHECK( ck.main_ok );
        }
        CHECK( gstar_chain( m, s, f, g, scan_order::reverse ).g_star == chain.g_star );
    }
}
