#include "navlog/formula.hpp"

#include <cctype>

namespace navlog
{

formula_ptr make_atom( atom a ) { return std::make_shared< const formula >( a ); }

formula_ptr make_not( formula_ptr f ) { return std::make_shared< const formula >( negation{ std::move( f ) } ); }

formula_ptr make_implies( formula_ptr lhs, formula_ptr rhs )
{
    return std::make_shared< const formula >( implication{ std::move( lhs ), std::move( rhs ) } );
}

bool equal( const formula& a, const formula& b )
{
    if ( a.get().index() != b.get().index() )
        return false;
    if ( const auto* x = std::get_if< atom >( &a.get() ) )
        return *x == std::get< atom >( b.get() );
    if ( const auto* x = std::get_if< negation >( &a.get() ) )
        return equal( *x->operand, *std::get< negation >( b.get() ).operand );
    const auto& x = std::get< implication >( a.get() );
    const auto& y = std::get< implication >( b.get() );
    return equal( *x.antecedent, *y.antecedent ) && equal( *x.consequent, *y.consequent );
}

namespace
{

class parser
{
    std::string_view _text;
    std::size_t _pos = 0;
    const view_universe& _views;

public:
    parser( std::string_view text, const view_universe& views ) : _text{ text }, _views{ views } {}

    formula_ptr parse_all()
    {
        auto f = parse_implies();
        skip_space();
        if ( _pos != _text.size() )
            fail( "unexpected input after formula" );
        return f;
    }

    view_set parse_set_only()
    {
        auto s = parse_set();
        skip_space();
        if ( _pos != _text.size() )
            fail( "unexpected input after set" );
        return s;
    }

private:
    [[noreturn]] void fail( const std::string& message ) const
    {
        throw input_error( 1, static_cast< int >( _pos + 1 ), message );
    }

    void skip_space()
    {
        while ( _pos < _text.size() )
        {
            if ( std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
                ++_pos;
            else if ( _text[ _pos ] == '#' )
                while ( _pos < _text.size() && _text[ _pos ] != '\n' )
                    ++_pos;
            else
                break;
        }
    }

    bool accept( std::string_view token )
    {
        skip_space();
        if ( _text.substr( _pos, token.size() ) == token )
        {
            _pos += token.size();
            return true;
        }
        return false;
    }

    void expect( std::string_view token )
    {
        if ( !accept( token ) )
            fail( "expected '" + std::string{ token } + "'" );
    }

    std::string identifier()
    {
        skip_space();
        const auto begin = _pos;
        auto ident_char = [ & ]( std::size_t k, bool first ) {
            const auto c = static_cast< unsigned char >( _text[ k ] );
            return std::isalpha( c ) || c == '_' || ( !first && std::isdigit( c ) );
        };
        if ( _pos < _text.size() && ident_char( _pos, true ) )
            while ( _pos < _text.size() && ident_char( _pos, _pos == begin ) )
                ++_pos;
        if ( _pos == begin )
            fail( "expected identifier" );
        return std::string{ _text.substr( begin, _pos - begin ) };
    }

    formula_ptr parse_implies()
    {
        auto lhs = parse_unary();
        if ( accept( "->" ) )
            return make_implies( std::move( lhs ), parse_implies() );
        return lhs;
    }

    formula_ptr parse_unary()
    {
        if ( accept( "!" ) )
            return make_not( parse_unary() );
        if ( accept( "(" ) )
        {
            auto f = parse_implies();
            expect( ")" );
            return f;
        }
        return make_atom( parse_atom_body() );
    }

    atom parse_atom_body()
    {
        skip_space();
        const auto at = _pos;
        if ( identifier() != "nav" )
        {
            _pos = at;
            fail( "expected 'nav', '!' or '('" );
        }
        expect( "(" );
        atom a;
        a.start = parse_set();
        expect( ";" );
        a.corridor = parse_set();
        expect( ";" );
        a.target = parse_set();
        expect( ")" );
        return a;
    }

    view_set parse_set()
    {
        skip_space();
        const auto at = _pos;
        if ( accept( "{" ) )
        {
            view_set s;
            if ( accept( "}" ) )
                return s;
            do
            {
                skip_space();
                const auto name_at = _pos;
                auto name = identifier();
                auto v = _views.find( name );
                if ( !v )
                {
                    _pos = name_at;
                    fail( "unknown view '" + name + "'" );
                }
                s.insert( *v );
            } while ( accept( "," ) );
            expect( "}" );
            return s;
        }
        if ( _pos < _text.size() && std::isalpha( static_cast< unsigned char >( _text[ _pos ] ) ) &&
             identifier() == "ALL" )
            return view_set::full( _views.size() );
        _pos = at;
        fail( "expected '{' or 'ALL'" );
    }
};

} // namespace

formula_ptr parse_formula( std::string_view text, const view_universe& views )
{
    return parser{ text, views }.parse_all();
}

atom parse_atom( std::string_view text, const view_universe& views )
{
    auto f = parse_formula( text, views );
    if ( const auto* a = std::get_if< atom >( &f->get() ) )
        return *a;
    throw input_error( 1, 1, "expected a single nav(...) atom" );
}

view_set parse_view_set( std::string_view text, const view_universe& views )
{
    return parser{ text, views }.parse_set_only();
}

std::string render_view_set( view_set s, const view_universe& views )
{
    std::string out = "{";
    bool first = true;
    s.for_each( [ & ]( view_id v ) {
        if ( !first )
            out += ',';
        out += views.name( v );
        first = false;
    } );
    return out + "}";
}

std::string render_atom( const atom& a, const view_universe& views )
{
    return "nav(" + render_view_set( a.start, views ) + "; " + render_view_set( a.corridor, views ) + "; " +
           render_view_set( a.target, views ) + ")";
}

std::string render_formula( const formula& f, const view_universe& views )
{
    if ( const auto* a = std::get_if< atom >( &f.get() ) )
        return render_atom( *a, views );
    if ( const auto* n = std::get_if< negation >( &f.get() ) )
    {
        auto inner = render_formula( *n->operand, views );
        if ( std::holds_alternative< implication >( n->operand->get() ) )
            return "!(" + inner + ")";
        return "!" + inner;
    }
    const auto& imp = std::get< implication >( f.get() );
    auto lhs = render_formula( *imp.antecedent, views );
    if ( std::holds_alternative< implication >( imp.antecedent->get() ) )
        lhs = "(" + lhs + ")";
    return lhs + " -> " + render_formula( *imp.consequent, views );
}

} // namespace navlog
