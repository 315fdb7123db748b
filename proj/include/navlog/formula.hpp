#pragma once

#include "navlog/system.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace navlog
{

// A ▷_B C: from every start view in A, reach C while staying in B.
struct atom
{
    view_set start;
    view_set corridor;
    view_set target;

    friend auto operator<=>( const atom&, const atom& ) = default;
};

class formula;
using formula_ptr = std::shared_ptr< const formula >;

struct negation
{
    formula_ptr operand;
};

struct implication
{
    formula_ptr antecedent;
    formula_ptr consequent;
};

// Immutable formula tree; nodes are shared, so copies are cheap.
class formula
{
public:
    using node = std::variant< atom, negation, implication >;

    explicit formula( node n ) : _node{ std::move( n ) } {}

    [[nodiscard]] const node& get() const { return _node; }

private:
    node _node;
};

formula_ptr make_atom( atom a );
formula_ptr make_not( formula_ptr f );
formula_ptr make_implies( formula_ptr lhs, formula_ptr rhs );

// Structural equality.
bool equal( const formula& a, const formula& b );

// Throws input_error with 1-based column of the offending token.
formula_ptr parse_formula( std::string_view text, const view_universe& views );

// Parses a formula that must be a single atom.
atom parse_atom( std::string_view text, const view_universe& views );

// `{}`, `{a,b}` or `ALL`.
view_set parse_view_set( std::string_view text, const view_universe& views );

std::string render_view_set( view_set s, const view_universe& views );
std::string render_atom( const atom& a, const view_universe& views );
std::string render_formula( const formula& f, const view_universe& views );

} // namespace navlog
