#include "navlog/amnesic.hpp"
#include "navlog/fuzz.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace navlog;
using namespace test;

namespace
{

bool holds( const epistemic_transition_system& sys, const std::string& text )
{
    return check_atom_amnesic( sys, at( sys, text ) ).holds;
}

std::vector< std::string > rows_of( const navigability_table& t )
{
    std::vector< std::string > out;
    for ( const auto& row : t.cells )
    {
        std::string r;
        for ( auto c : row )
            r += ( r.empty() ? "" : " " ) + std::string( 1, static_cast< char >( c ) );
        out.push_back( r );
    }
    return out;
}

std::vector< view_id > classes( const epistemic_transition_system& sys, std::initializer_list< const char* > names )
{
    std::vector< view_id > out;
    for ( auto n : names )
        out.push_back( *sys.views().find( n ) );
    return out;
}

} // namespace

TEST_CASE( "t0 atoms" )
{
    const auto t0 = fixtures::t0();
    const auto d = check_atom_amnesic( t0, at( t0, "nav({v1}; ALL; {v3})" ) );
    REQUIRE( d.holds );
    CHECK( *d.witness == constant( t0, "1" ) );

    CHECK_FALSE( holds( t0, "nav({v1}; {v1,v2,v3,v4,v6}; {v3})" ) );
    CHECK_FALSE( holds( t0, "nav({v3}; ALL; {v1})" ) );
    CHECK( holds( t0, "nav({v1}; ALL; {v6})" ) );
    CHECK( holds( t0, "nav({v6}; ALL; {v2})" ) );
    CHECK_FALSE( holds( t0, "nav({v1}; ALL; {v2})" ) );
    CHECK( *check_atom_amnesic( t0, at( t0, "nav({v1}; ALL; {v6})" ) ).witness == constant( t0, "0" ) );
    CHECK( *check_atom_amnesic( t0, at( t0, "nav({v6}; ALL; {v2})" ) ).witness == constant( t0, "1" ) );
}

TEST_CASE( "start inside target holds with any strategy" )
{
    const auto t0 = fixtures::t0();
    for ( const char* q : { "nav({v1,v3}; {}; {v1,v3,v5})", "nav({}; {}; {})", "nav({v4}; {}; {v4})" } )
    {
        const auto d = check_atom_amnesic( t0, at( t0, q ) );
        REQUIRE( d.holds );
        CHECK( *d.witness == constant( t0, "0" ) );
    }
}

TEST_CASE( "unvisited views get the first instruction" )
{
    // p must use 1 and q must use 0; r is a target and u is never observed.
    const auto sys = parse_system( R"(views u p q r
instructions 0 1
state s0 p
state s1 q
state s2 r
trans s0 1 s1
trans s1 0 s2
)" );
    const auto d = check_atom_amnesic( sys, at( sys, "nav({p}; {p,q}; {r})" ) );
    REQUIRE( d.holds );
    CHECK( *d.witness == amnesic_strategy{ { in( sys, "0" ), in( sys, "1" ), in( sys, "0" ), in( sys, "0" ) } } );
}

TEST_CASE( "evaluate uses classical connectives" )
{
    const auto t0 = fixtures::t0();
    CHECK_FALSE( evaluate( t0, *parse_formula( "nav({v1};ALL;{v6}) -> nav({v6};ALL;{v2}) -> nav({v1};ALL;{v2})",
                                                t0.views() ) ) );
    CHECK( evaluate( t0, *parse_formula( "nav({};{};{})", t0.views() ) ) );
    CHECK( evaluate( t0, *parse_formula( "!nav({v3};ALL;{v1})", t0.views() ) ) );
    CHECK( evaluate( t0, *parse_formula( "nav({v3};ALL;{v1}) -> nav({v4};{};{})", t0.views() ) ) );
    CHECK_FALSE( evaluate( t0, *parse_formula( "!!nav({v3};ALL;{v1})", t0.views() ) ) );

    const auto t1 = fixtures::t1();
    CHECK_FALSE( evaluate( t1, *parse_formula( "nav({vb,vf}; ALL; {vd})", t1.views() ) ) );
}

TEST_CASE( "t1 claims" )
{
    const auto t1 = fixtures::t1();
    CHECK( t1.state_count() == 5 );
    CHECK( t1.observe( st( t1, "c" ) ) == t1.observe( st( t1, "e" ) ) );

    const auto b = check_atom_amnesic( t1, at( t1, "nav({vb}; ALL; {vd})" ) );
    REQUIRE( b.holds );
    CHECK( *b.witness == constant( t1, "1" ) );
    const auto f = check_atom_amnesic( t1, at( t1, "nav({vf}; ALL; {vd})" ) );
    REQUIRE( f.holds );
    CHECK( *f.witness == constant( t1, "0" ) );
    CHECK_FALSE( holds( t1, "nav({vb,vf}; ALL; {vd})" ) );

    // Neither constant strategy serves the other start.
    CHECK_FALSE( is_ok( check_strategy( t1, constant( t1, "0" ), objective( t1, "{vb}", "ALL", "{vd}" ) ) ) );
    CHECK_FALSE( is_ok( check_strategy( t1, constant( t1, "1" ), objective( t1, "{vf}", "ALL", "{vd}" ) ) ) );
}

TEST_CASE( "t0 navigability table" )
{
    const auto t0 = fixtures::t0();
    const auto t = build_navigability_table( t0, classes( t0, { "v1", "v2", "v3", "v4", "v5", "v6" } ) );
    CHECK( rows_of( t ) == std::vector< std::string >{ "a r a r r a", "a a a a r a", "- - a r - -", "- - - a - -",
                                                         "a r a a a a", "a a a a a a" } );

    const auto single = build_navigability_table( t0, classes( t0, { "v4" } ) );
    CHECK( rows_of( single ) == std::vector< std::string >{ "a" } );

    const auto amnesic_only = build_navigability_table( t0, classes( t0, { "v1", "v2" } ), { true, false } );
    CHECK( rows_of( amnesic_only ) == std::vector< std::string >{ "a -", "a a" } );

    const auto text = render_table( t, t0.views() );
    CHECK( text.find( "v3 | -  -  a  r  -  -\n" ) != std::string::npos );
}

TEST_CASE( "t1 navigability table" )
{
    const auto t1 = fixtures::t1();
    const auto t = build_navigability_table( t1, classes( t1, { "vb", "vf", "vd" } ) );
    CHECK( static_cast< char >( t.cells[ 0 ][ 2 ] ) == 'a' );
    CHECK( static_cast< char >( t.cells[ 1 ][ 2 ] ) == 'a' );
    CHECK( static_cast< char >( t.cells[ 2 ][ 2 ] ) == 'a' );
}

TEST_CASE( "search agrees with exhaustive enumeration" )
{
    fuzz_config config;
    config.max_views = 4;
    config.max_instructions = 3;
    std::mt19937_64 rng{ 99 };
    for ( std::size_t trial = 0; trial < 150; ++trial )
    {
        const auto sys = generate_random_system( config, trial );
        const auto n = sys.view_count();
        for ( int k = 0; k < 12; ++k )
        {
            const auto a = oracle::random_atom( rng, n );
            const auto d = check_atom_amnesic( sys, a );
            const auto e = oracle::enumerate_strategies( sys, a.start, a.corridor, a.target );
            REQUIRE( d.holds == e.holds );
            if ( !d.holds )
            {
                CHECK( !d.witness );
                continue;
            }
            std::vector< std::size_t > w;
            for ( auto i : d.witness->choices() )
                w.push_back( i.index );
            CHECK( w == e.witness );
            CHECK( is_ok( check_strategy( sys, *d.witness, to_objective( a ) ) ) );
            CHECK( check_atom_amnesic( sys, a, { .canonical_witness = false } ).holds );
        }
    }
}

TEST_CASE( "empty classes" )
{
    const auto sys = parse_system( "views v w\ninstructions i\nstate s v\ntrans s i s\n" );
    CHECK( holds( sys, "nav({w}; {}; {})" ) );
    CHECK_FALSE( holds( sys, "nav({v}; {}; {})" ) );
    CHECK( holds( sys, "nav({w}; {}; {v})" ) );
    // Strategies are total even over unobserved views.
    const auto d = check_atom_amnesic( sys, at( sys, "nav({w}; {}; {})" ) );
    REQUIRE( d.witness );
    CHECK( d.witness->size() == 2 );
}

TEST_CASE( "semantic axioms on random systems" )
{
    fuzz_config config;
    std::mt19937_64 rng{ 5 };
    for ( std::size_t trial = 0; trial < 200; ++trial )
    {
        const auto sys = generate_random_system( config, trial + 1000 );
        const auto n = sys.view_count();
        auto ok = [ & ]( view_set a, view_set b, view_set c ) { return check_atom_amnesic( sys, { a, b, c } ).holds; };
        for ( int k = 0; k < 8; ++k )
        {
            const auto A = oracle::random_set( rng, n );
            const auto B = oracle::random_set( rng, n );
            const auto C = oracle::random_set( rng, n );
            const auto D = oracle::random_set( rng, n );
            const auto E = oracle::random_set( rng, n );
            CHECK( ok( A, B, A | C ) );
            if ( ok( A, B, C ) )
            {
                CHECK( ok( A | D, B, C | D ) );
                CHECK( ok( A, B - C, C ) );
                if ( ok( C, D - B, E ) )
                    CHECK( ok( A, B | ( D - B ), E ) );
            }
            if ( ok( A, {}, B ) )
                CHECK( ok( A - B, {}, {} ) );
            if ( ok( A, B, {} ) )
                CHECK( ok( A, {}, {} ) );
            bool unobserved = true;
            A.for_each( [ & ]( view_id v ) { unobserved = unobserved && sys.observers( v ).empty(); } );
            CHECK( ok( A, {}, {} ) == unobserved );
        }
    }
}
