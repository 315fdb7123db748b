#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace navlog;
using namespace test;

namespace
{

const view_universe& t0_views()
{
    static const auto sys = fixtures::t0();
    return sys.views();
}

formula_ptr random_formula( std::mt19937_64& rng, std::size_t n, int depth )
{
    const auto pick = depth == 0 ? 0 : rng() % 3;
    if ( pick == 0 )
        return make_atom( oracle::random_atom( rng, n ) );
    if ( pick == 1 )
        return make_not( random_formula( rng, n, depth - 1 ) );
    auto lhs = random_formula( rng, n, depth - 1 );
    return make_implies( lhs, random_formula( rng, n, depth - 1 ) );
}

int error_column( const std::string& text )
{
    try
    {
        parse_formula( text, t0_views() );
    }
    catch ( const input_error& e )
    {
        return e.diagnostics().front().column;
    }
    return -1;
}

} // namespace

TEST_CASE( "atoms parse into view sets" )
{
    const auto f = parse_formula( "nav({v1}; ALL; {v3})", t0_views() );
    const auto* a = std::get_if< atom >( &f->get() );
    REQUIRE( a );
    CHECK( a->start == parse_view_set( "{v1}", t0_views() ) );
    CHECK( a->corridor == view_set::full( 6 ) );
    CHECK( a->corridor.size() == 6 );
    CHECK( a->target.size() == 1 );
}

TEST_CASE( "implication associates to the right" )
{
    const auto f = parse_formula( "nav({v1};ALL;{v2}) -> nav({v2};ALL;{v3}) -> nav({v1};ALL;{v3})", t0_views() );
    const auto* top = std::get_if< implication >( &f->get() );
    REQUIRE( top );
    CHECK( std::holds_alternative< atom >( top->antecedent->get() ) );
    const auto* rest = std::get_if< implication >( &top->consequent->get() );
    REQUIRE( rest );
    CHECK( std::holds_alternative< atom >( rest->antecedent->get() ) );
    CHECK( std::holds_alternative< atom >( rest->consequent->get() ) );
}

TEST_CASE( "negation of the empty atom" )
{
    const auto f = parse_formula( "!nav({};{};{})", t0_views() );
    const auto* n = std::get_if< negation >( &f->get() );
    REQUIRE( n );
    const auto* a = std::get_if< atom >( &n->operand->get() );
    REQUIRE( a );
    CHECK( *a == atom{} );
}

TEST_CASE( "negation binds tighter than implication" )
{
    const auto f = parse_formula( "!nav({};{};{}) -> nav({v1};{};{v1})", t0_views() );
    CHECK( std::holds_alternative< implication >( f->get() ) );
    const auto g = parse_formula( "!(nav({};{};{}) -> nav({v1};{};{v1}))", t0_views() );
    CHECK( std::holds_alternative< negation >( g->get() ) );
}

TEST_CASE( "whitespace and comments are ignored" )
{
    const auto a = parse_formula( "nav( { v1 , v2 } ;ALL;{} ) # trailing note", t0_views() );
    const auto b = parse_formula( "nav({v1,v2};ALL;{})", t0_views() );
    CHECK( equal( *a, *b ) );
    const auto c = parse_formula( "nav({v1};{};{v1}) # first\n -> # second\n nav({};{};{})", t0_views() );
    CHECK( std::holds_alternative< implication >( c->get() ) );
}

TEST_CASE( "view order inside a set does not matter" )
{
    CHECK( parse_atom( "nav({v1,v2};{};{})", t0_views() ) == parse_atom( "nav({v2,v1};{};{})", t0_views() ) );
    CHECK( parse_atom( "nav({v2,v2};{};{})", t0_views() ) == parse_atom( "nav({v2};{};{})", t0_views() ) );
}

TEST_CASE( "parse errors report a column" )
{
    CHECK( error_column( "nav({v9};ALL;{})" ) == 6 );
    CHECK( error_column( "nav({v1};ALL)" ) > 0 );
    CHECK( error_column( "nav({v1};ALL;{v1}) nav({};{};{})" ) == 20 );
    CHECK( error_column( "" ) == 1 );
    CHECK( error_column( "!" ) == 2 );
    CHECK( error_column( "(nav({};{};{})" ) > 0 );
    CHECK( error_column( "nav({v1,};{};{})" ) > 0 );
    CHECK( error_column( "nav({v1} {};{};{})" ) > 0 );
    CHECK( error_column( "nav({};{};{}) ->" ) > 0 );
    CHECK_THROWS_AS( parse_atom( "!nav({};{};{})", t0_views() ), input_error );
}

TEST_CASE( "rendering" )
{
    const auto& u = t0_views();
    const atom a{ parse_view_set( "{v1}", u ), {}, parse_view_set( "{v1}", u ) };
    CHECK( render_atom( a, u ) == "nav({v1}; {}; {v1})" );
    CHECK( render_formula( *make_not( make_atom( a ) ), u ) == "!nav({v1}; {}; {v1})" );
    CHECK( render_view_set( view_set::full( 6 ), u ) == "{v1,v2,v3,v4,v5,v6}" );

    const auto x = make_atom( a );
    const auto left = make_implies( make_implies( x, x ), x );
    CHECK( render_formula( *left, u ) == "(nav({v1}; {}; {v1}) -> nav({v1}; {}; {v1})) -> nav({v1}; {}; {v1})" );
    const auto right = make_implies( x, make_implies( x, x ) );
    CHECK( render_formula( *right, u ) == "nav({v1}; {}; {v1}) -> nav({v1}; {}; {v1}) -> nav({v1}; {}; {v1})" );
    CHECK( render_formula( *make_not( left ), u ).starts_with( "!((" ) );
}

TEST_CASE( "render then parse is the identity" )
{
    const auto& u = t0_views();
    std::mt19937_64 rng{ 11 };
    for ( int k = 0; k < 2000; ++k )
    {
        const auto f = random_formula( rng, u.size(), static_cast< int >( rng() % 7 ) );
        const auto text = render_formula( *f, u );
        const auto back = parse_formula( text, u );
        CHECK_MESSAGE( equal( *f, *back ), text );
        CHECK( render_formula( *back, u ) == text );
    }
}
