#include "navlog/ets_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace navlog
{

namespace
{

// Instructions may also be plain numerals ("0", "1"), as in the usual presentation of examples.
bool is_instruction_name( std::string_view s )
{
    if ( s.empty() )
        return false;
    for ( auto c : s )
    {
        auto u = static_cast< unsigned char >( c );
        if ( !std::isalnum( u ) && u != '_' )
            return false;
    }
    return true;
}

bool is_identifier( std::string_view s )
{
    if ( s.empty() )
        return false;
    auto head = static_cast< unsigned char >( s.front() );
    if ( !std::isalpha( head ) && head != '_' )
        return false;
    for ( auto c : s.substr( 1 ) )
    {
        auto u = static_cast< unsigned char >( c );
        if ( !std::isalnum( u ) && u != '_' )
            return false;
    }
    return true;
}

struct token
{
    std::string text;
    int column = 0;
};

std::vector< token > tokenize( std::string_view line )
{
    std::vector< token > out;
    std::size_t k = 0;
    while ( k < line.size() )
    {
        if ( line[ k ] == '#' )
            break;
        if ( std::isspace( static_cast< unsigned char >( line[ k ] ) ) )
        {
            ++k;
            continue;
        }
        const auto begin = k;
        while ( k < line.size() && line[ k ] != '#' && !std::isspace( static_cast< unsigned char >( line[ k ] ) ) )
            ++k;
        out.push_back( { std::string{ line.substr( begin, k - begin ) }, static_cast< int >( begin + 1 ) } );
    }
    return out;
}

} // namespace

raw_system read_raw_system( std::string_view text )
{
    raw_system raw;
    std::vector< diagnostic > errors;
    // Names declared so far; a use before its declaration is reported here with a column.
    std::unordered_set< std::string > views, instructions, states;

    int line_no = 0;
    std::size_t pos = 0;
    while ( pos <= text.size() )
    {
        auto end = text.find( '\n', pos );
        if ( end == std::string_view::npos )
            end = text.size();
        auto line = text.substr( pos, end - pos );
        if ( !line.empty() && line.back() == '\r' )
            line.remove_suffix( 1 );
        pos = end + 1;
        ++line_no;

        auto toks = tokenize( line );
        if ( toks.empty() )
            continue;

        const auto& kw = toks.front().text;
        bool bad = false;
        for ( std::size_t k = 0; k < toks.size(); ++k )
        {
            const auto& t = toks[ k ];
            const bool instruction_slot = ( kw == "instructions" && k > 0 ) || ( kw == "trans" && k == 2 );
            if ( !( instruction_slot ? is_instruction_name( t.text ) : is_identifier( t.text ) ) )
            {
                errors.push_back( { line_no, t.column, "invalid identifier '" + t.text + "'" } );
                bad = true;
            }
        }
        if ( bad )
            continue;

        auto check_declared = [ & ]( const std::unordered_set< std::string >& set, const token& t,
                                     const char* what ) {
            if ( set.count( t.text ) )
                return true;
            errors.push_back( { line_no, t.column, std::string{ "unknown " } + what + " '" + t.text + "'" } );
            return false;
        };

        if ( kw == "views" || kw == "instructions" )
        {
            const bool is_view = kw == "views";
            for ( std::size_t k = 1; k < toks.size(); ++k )
            {
                if ( !( is_view ? views : instructions ).insert( toks[ k ].text ).second )
                {
                    errors.push_back( { line_no, toks[ k ].column,
                                        std::string{ is_view ? "duplicate view '" : "duplicate instruction '" } +
                                            toks[ k ].text + "'" } );
                    continue;
                }
                ( is_view ? raw.views : raw.instructions ).push_back( { toks[ k ].text, line_no } );
            }
        }
        else if ( kw == "state" )
        {
            if ( toks.size() == 2 )
            {
                errors.push_back( { line_no, 0, "state '" + toks[ 1 ].text + "' has no observation" } );
                continue;
            }
            if ( toks.size() != 3 )
            {
                errors.push_back( { line_no, 1, "expected 'state <name> <view>'" } );
                continue;
            }
            if ( !check_declared( views, toks[ 2 ], "view" ) )
                continue;
            if ( !states.insert( toks[ 1 ].text ).second )
            {
                errors.push_back( { line_no, toks[ 1 ].column, "duplicate state '" + toks[ 1 ].text + "'" } );
                continue;
            }
            raw.states.push_back( { toks[ 1 ].text, toks[ 2 ].text, line_no } );
        }
        else if ( kw == "trans" )
        {
            if ( toks.size() != 4 )
            {
                errors.push_back( { line_no, 1, "expected 'trans <from> <instruction> <to>'" } );
                continue;
            }
            bool ok = check_declared( states, toks[ 1 ], "state" );
            ok = check_declared( instructions, toks[ 2 ], "instruction" ) && ok;
            ok = check_declared( states, toks[ 3 ], "state" ) && ok;
            if ( ok )
                raw.transitions.push_back( { toks[ 1 ].text, toks[ 2 ].text, toks[ 3 ].text, line_no } );
        }
        else
        {
            errors.push_back( { line_no, toks.front().column, "unknown directive '" + kw + "'" } );
        }
    }

    if ( !errors.empty() )
        throw input_error( std::move( errors ) );
    return raw;
}

epistemic_transition_system parse_system( std::string_view text ) { return validate_system( read_raw_system( text ) ); }

std::string read_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw input_error( 0, 0, "cannot open '" + path.string() + "'" );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

epistemic_transition_system load_system( const std::filesystem::path& path )
{
    return parse_system( read_file( path ) );
}

std::string write_system( const epistemic_transition_system& system )
{
    std::string out = "views";
    for ( const auto& v : system.views().names() )
        out += " " + v;
    out += "\ninstructions";
    for ( const auto& i : system.instructions().names() )
        out += " " + i;
    out += "\n";
    for ( std::size_t s = 0; s < system.state_count(); ++s )
    {
        const state_id id{ s };
        out += "state " + system.states().name( id ) + " " + system.views().name( system.observe( id ) ) + "\n";
    }
    for ( const auto& t : system.transitions() )
        out += "trans " + system.states().name( t.from ) + " " + system.instructions().name( t.instruction ) + " " +
               system.states().name( t.to ) + "\n";
    return out;
}

} // namespace navlog
