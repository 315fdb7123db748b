#include "navlog/cli.hpp"

#include "navlog/amnesic.hpp"
#include "navlog/canonical.hpp"
#include "navlog/ets_format.hpp"
#include "navlog/fuzz.hpp"
#include "navlog/proof.hpp"
#include "navlog/recall.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

namespace navlog
{

namespace
{

using json = nlohmann::ordered_json;

// Raised when a checked invariant fails at runtime (exit 3).
class invariant_failure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class stopwatch
{
    std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();

public:
    [[nodiscard]] double ms() const
    {
        return std::chrono::duration< double, std::milli >( std::chrono::steady_clock::now() - _start ).count();
    }
};

std::vector< std::string > split_list( const std::string& text )
{
    std::vector< std::string > out;
    std::string item;
    std::istringstream in{ text };
    while ( std::getline( in, item, ',' ) )
    {
        const auto b = item.find_first_not_of( " \t" );
        const auto e = item.find_last_not_of( " \t" );
        if ( b == std::string::npos )
            throw usage_error( "empty entry in list '" + text + "'" );
        out.push_back( item.substr( b, e - b + 1 ) );
    }
    if ( out.empty() )
        throw usage_error( "empty list" );
    return out;
}

std::string verdict( bool holds ) { return holds ? "HOLDS" : "FAILS"; }

std::string render_strategy( const epistemic_transition_system& sys, const amnesic_strategy& s )
{
    std::string out;
    for ( std::size_t v = 0; v < s.size(); ++v )
    {
        if ( !out.empty() )
            out += ' ';
        out += sys.views().name( view_id{ v } ) + "→" + sys.instructions().name( s( view_id{ v } ) );
    }
    return out;
}

json strategy_json( const epistemic_transition_system& sys, const amnesic_strategy& s )
{
    json j = json::object();
    for ( std::size_t v = 0; v < s.size(); ++v )
        j[ sys.views().name( view_id{ v } ) ] = sys.instructions().name( s( view_id{ v } ) );
    return j;
}

std::vector< std::string > state_names( const epistemic_transition_system& sys, const std::vector< state_id >& states )
{
    std::vector< std::string > out;
    for ( auto s : states )
        out.push_back( sys.states().name( s ) );
    return out;
}

json belief_table_json( const epistemic_transition_system& sys, const recall_decision& d )
{
    json rows = json::array();
    for ( const auto& [ b, i ] : d.witness )
        rows.push_back( { { "view", sys.views().name( b.view ) },
                          { "states", state_names( sys, b.possible ) },
                          { "instruction", sys.instructions().name( i ) } } );
    return rows;
}

json path_json( const epistemic_transition_system& sys, const path_witness& w )
{
    return { { "states", state_names( sys, w.states ) },
             { "loop_start", w.loop_start ? json( *w.loop_start ) : json( nullptr ) },
             { "reason", to_string( w.reason ) } };
}

std::string render_path( const epistemic_transition_system& sys, const path_witness& w )
{
    std::string out;
    for ( std::size_t k = 0; k < w.states.size(); ++k )
    {
        if ( k )
            out += " -> ";
        if ( w.loop_start && *w.loop_start == k )
            out += "(";
        out += sys.states().name( w.states[ k ] );
    }
    if ( w.loop_start )
        out += ")*";
    return out;
}

// "v1=0,v2=1" or a single instruction name for a constant strategy.
amnesic_strategy parse_strategy_arg( const epistemic_transition_system& sys, const std::string& text )
{
    auto instr = [ & ]( const std::string& name ) {
        auto i = sys.instructions().find( name );
        if ( !i )
            throw input_error( 0, 0, "unknown instruction '" + name + "'" );
        return *i;
    };
    if ( text.find( '=' ) == std::string::npos )
        return amnesic_strategy::constant( sys.view_count(), instr( text ) );

    std::vector< std::optional< instruction_id > > choice( sys.view_count() );
    for ( const auto& item : split_list( text ) )
    {
        const auto eq = item.find( '=' );
        if ( eq == std::string::npos )
            throw input_error( 0, 0, "expected view=instruction, got '" + item + "'" );
        const auto view = sys.views().find( item.substr( 0, eq ) );
        if ( !view )
            throw input_error( 0, 0, "unknown view '" + item.substr( 0, eq ) + "'" );
        choice[ view->index ] = instr( item.substr( eq + 1 ) );
    }
    std::vector< instruction_id > total;
    for ( std::size_t v = 0; v < choice.size(); ++v )
    {
        if ( !choice[ v ] )
            throw input_error( 0, 0, "strategy leaves view '" + sys.views().name( view_id{ v } ) + "' unassigned" );
        total.push_back( *choice[ v ] );
    }
    return amnesic_strategy{ total };
}

// Classical evaluation with a pluggable atom decision.
template < typename Decide >
bool evaluate_with( const formula& f, Decide& decide )
{
    return std::visit(
        [ & ]( const auto& n ) -> bool {
            using T = std::decay_t< decltype( n ) >;
            if constexpr ( std::is_same_v< T, atom > )
                return decide( n );
            else if constexpr ( std::is_same_v< T, negation > )
                return !evaluate_with( *n.operand, decide );
            else
                return !evaluate_with( *n.antecedent, decide ) || evaluate_with( *n.consequent, decide );
        },
        f.get() );
}

struct common_flags
{
    bool json = false;
    bool fail_on_false = false;
};

int finish( bool holds, const common_flags& flags )
{
    return !holds && flags.fail_on_false ? exit_verdict_false : exit_answered;
}

// ---- check / eval / table -------------------------------------------------------------------

struct check_args
{
    std::string file;
    std::string formula;
    std::string mode = "amnesic";
    std::string strategy;
    bool witness = false;
    common_flags flags;
};

int run_check( const check_args& a, std::ostream& out )
{
    const auto sys = load_system( a.file );
    const auto f = parse_formula( a.formula, sys.views() );
    const bool recall_mode = a.mode == "recall";
    const auto* single = std::get_if< atom >( &f->get() );
    stopwatch clock;

    json report{ { "query", render_formula( *f, sys.views() ) }, { "mode", a.mode } };
    json stats = json::object();
    std::vector< std::string > lines;
    bool holds = false;
    json witness = nullptr;
    json counterexample = nullptr;

    if ( !a.strategy.empty() )
    {
        if ( recall_mode || !single )
            throw usage_error( "--strategy needs --mode amnesic and a single atom" );
        const auto s = parse_strategy_arg( sys, a.strategy );
        const auto r = check_strategy( sys, s, to_objective( *single ) );
        holds = is_ok( r );
        witness = strategy_json( sys, s );
        if ( const auto* w = std::get_if< path_witness >( &r ) )
        {
            if ( auto defect = replay_witness( sys, s, to_objective( *single ), *w ) )
                throw invariant_failure( "counterexample does not replay: " + *defect );
            counterexample = path_json( sys, *w );
            lines.push_back( "counterexample (" + to_string( w->reason ) + "): " + render_path( sys, *w ) );
        }
        stats[ "strategies_examined" ] = 1;
    }
    else if ( single && !recall_mode )
    {
        const auto d = check_atom_amnesic( sys, *single );
        holds = d.holds;
        stats[ "strategies_examined" ] = d.strategies_examined;
        if ( d.holds )
        {
            if ( !is_ok( check_strategy( sys, *d.witness, to_objective( *single ) ) ) )
                throw invariant_failure( "reported witness does not satisfy the query" );
            witness = strategy_json( sys, *d.witness );
            if ( a.witness )
                lines.push_back( "witness: " + render_strategy( sys, *d.witness ) );
        }
        if ( d.note )
            lines.push_back( "note: " + *d.note );
    }
    else if ( single )
    {
        const auto d = check_atom_recall( sys, *single );
        holds = d.holds;
        stats[ "beliefs_explored" ] = d.explored;
        if ( d.holds )
        {
            if ( auto defect = replay_recall_witness( sys, *single, d ) )
                throw invariant_failure( "recall witness does not replay: " + *defect );
            witness = belief_table_json( sys, d );
            if ( a.witness )
            {
                lines.push_back( "witness:" );
                for ( const auto& [ b, i ] : d.witness )
                {
                    std::string states;
                    for ( const auto& n : state_names( sys, b.possible ) )
                        states += ( states.empty() ? "" : "," ) + n;
                    lines.push_back( "  " + sys.views().name( b.view ) + " {" + states + "} -> " +
                                     sys.instructions().name( i ) );
                }
            }
        }
    }
    else
    {
        std::uint64_t examined = 0;
        auto decide = [ & ]( const atom& x ) {
            if ( recall_mode )
            {
                const auto d = check_atom_recall( sys, x );
                examined += d.explored;
                return d.holds;
            }
            const auto d = check_atom_amnesic( sys, x, { .canonical_witness = false } );
            examined += d.strategies_examined;
            return d.holds;
        };
        holds = evaluate_with( *f, decide );
        stats[ recall_mode ? "beliefs_explored" : "strategies_examined" ] = examined;
        if ( a.witness )
            lines.push_back( "note: witnesses are reported for single atoms only" );
    }

    stats[ "elapsed_ms" ] = clock.ms();
    report[ "holds" ] = holds;
    report[ "witness" ] = witness;
    report[ "counterexample" ] = counterexample;
    report[ "stats" ] = stats;

    if ( a.flags.json )
        out << report.dump( 2 ) << '\n';
    else
    {
        out << verdict( holds ) << '\n';
        for ( const auto& l : lines )
            out << l << '\n';
    }
    return finish( holds, a.flags );
}

struct table_args
{
    std::string file;
    std::string classes;
    bool amnesic_only = false;
    bool json = false;
};

int run_table( const table_args& a, std::ostream& out )
{
    const auto sys = load_system( a.file );
    std::vector< view_id > classes;
    for ( const auto& name : split_list( a.classes ) )
    {
        auto v = sys.views().find( name );
        if ( !v )
            throw input_error( 0, 0, "unknown view '" + name + "'" );
        classes.push_back( *v );
    }
    const auto t = build_navigability_table( sys, classes, { true, !a.amnesic_only } );
    if ( a.json )
    {
        json j{ { "classes", json::array() }, { "rows", json::array() } };
        for ( auto v : classes )
            j[ "classes" ].push_back( sys.views().name( v ) );
        for ( const auto& row : t.cells )
        {
            json r = json::array();
            for ( auto c : row )
                r.push_back( std::string( 1, static_cast< char >( c ) ) );
            j[ "rows" ].push_back( r );
        }
        out << j.dump( 2 ) << '\n';
    }
    else
        out << render_table( t, sys.views() );
    return exit_answered;
}

// ---- saturation family ----------------------------------------------------------------------

struct theory_args
{
    std::string views;
    std::vector< std::string > assume;
    std::string theory;
};

closure build_closure( const theory_args& a )
{
    const auto universe = make_view_universe( split_list( a.views ) );
    std::vector< atom > assumptions;
    for ( const auto& text : a.assume )
        assumptions.push_back( parse_atom( text, universe ) );
    if ( !a.theory.empty() )
    {
        std::istringstream in{ read_file( a.theory ) };
        std::string line;
        int number = 0;
        while ( std::getline( in, line ) )
        {
            ++number;
            const auto hash = line.find( '#' );
            if ( line.substr( 0, hash ).find_first_not_of( " \t\r" ) == std::string::npos )
                continue;
            try
            {
                assumptions.push_back( parse_atom( line, universe ) );
            }
            catch ( const input_error& e )
            {
                std::vector< diagnostic > ds;
                for ( auto d : e.diagnostics() )
                {
                    d.line = number;
                    ds.push_back( d );
                }
                throw input_error( ds );
            }
        }
    }
    return saturate( universe, assumptions );
}

std::vector< std::string > view_names( view_set s, const view_universe& u )
{
    std::vector< std::string > out;
    s.for_each( [ & ]( view_id v ) { out.push_back( u.name( v ) ); } );
    return out;
}

int run_saturate( const theory_args& a, bool list, bool as_json, std::ostream& out )
{
    stopwatch clock;
    const auto c = build_closure( a );
    if ( auto open = find_unclosed( c ) )
        throw invariant_failure( "closure misses " + render_atom( *open, c.universe() ) );
    const auto valid = valid_views( c );
    if ( as_json )
    {
        json j{ { "views", c.universe().names() },
                { "assumptions", json::array() },
                { "atom_count", c.atom_count() },
                { "derived_count", c.derived_count() },
                { "valid_views", view_names( valid, c.universe() ) } };
        for ( const auto& x : c.assumptions() )
            j[ "assumptions" ].push_back( render_atom( x, c.universe() ) );
        if ( list )
        {
            j[ "derived" ] = json::array();
            for ( const auto& x : c.derived_atoms() )
                j[ "derived" ].push_back( render_atom( x, c.universe() ) );
        }
        j[ "elapsed_ms" ] = clock.ms();
        out << j.dump( 2 ) << '\n';
        return exit_answered;
    }
    out << "derived " << c.derived_count() << " of " << c.atom_count() << " atoms\n";
    out << "valid views: " << render_view_set( valid, c.universe() ) << '\n';
    if ( list )
        for ( const auto& x : c.derived_atoms() )
            out << render_atom( x, c.universe() ) << '\n';
    return exit_answered;
}

int run_derive( const theory_args& a, const std::string& query, const common_flags& flags, std::ostream& out )
{
    const auto c = build_closure( a );
    const auto q = parse_atom( query, c.universe() );
    const bool yes = derives( c, q );
    if ( flags.json )
    {
        json j{ { "query", render_atom( q, c.universe() ) }, { "derivable", yes } };
        if ( yes )
            j[ "rule" ] = to_string( c.how( q ).by );
        out << j.dump( 2 ) << '\n';
    }
    else
        out << ( yes ? "DERIVABLE" : "NOT DERIVABLE" ) << '\n';
    return finish( yes, flags );
}

json tree_json( const derivation_tree& t, const view_universe& u )
{
    json j{ { "atom", render_atom( t.root, u ) }, { "rule", to_string( t.by ) } };
    if ( t.by == rule::augmentation )
        j[ "augment_by" ] = render_view_set( t.augment_by, u );
    j[ "premises" ] = json::array();
    for ( const auto& ch : t.children )
        j[ "premises" ].push_back( tree_json( ch, u ) );
    return j;
}

int run_explain( const theory_args& a, const std::string& query, const common_flags& flags, std::ostream& out )
{
    const auto c = build_closure( a );
    const auto q = parse_atom( query, c.universe() );
    if ( !derives( c, q ) )
    {
        if ( flags.json )
            out << json{ { "query", render_atom( q, c.universe() ) }, { "derivable", false } }.dump( 2 ) << '\n';
        else
            out << "NOT DERIVABLE\n";
        return finish( false, flags );
    }
    const auto t = explain( c, q );
    if ( flags.json )
        out << tree_json( t, c.universe() ).dump( 2 ) << '\n';
    else
        out << render_tree( t, c.universe() );
    return exit_answered;
}

struct canonical_args
{
    theory_args theory;
    std::string emit;
    bool verify = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool json = false;
};

int run_canonical( const canonical_args& a, std::ostream& out )
{
    const auto c = build_closure( a.theory );
    const auto model = build_canonical( c );
    if ( !a.emit.empty() )
    {
        std::ofstream file{ a.emit };
        if ( !file )
            throw usage_error( "cannot write '" + a.emit + "'" );
        file << write_system( model.system );
    }
    json j{ { "valid_views", view_names( model.valid, c.universe() ) },
            { "instructions", model.instructions.size() },
            { "states", model.system.state_count() },
            { "transitions", model.system.transitions().size() } };
    std::ostringstream text;
    text << "valid views: " << render_view_set( model.valid, c.universe() ) << '\n'
         << "instructions: " << model.instructions.size() << '\n'
         << "states: " << model.system.state_count() << '\n'
         << "transitions: " << model.system.transitions().size() << '\n';

    bool ok = true;
    if ( a.verify )
    {
        auto policy = default_truth_lemma_policy( c );
        if ( a.samples )
            policy = { false, a.samples, a.seed, 0 };
        const auto report = verify_truth_lemma( c, model, policy );
        ok = report.mismatches.empty();
        json mism = json::array();
        for ( const auto& m : report.mismatches )
            mism.push_back( { { "atom", render_atom( m.query, c.universe() ) },
                              { "derivable", m.derivable },
                              { "satisfied", m.satisfied } } );
        j[ "truth_lemma" ] = { { "exhaustive", policy.exhaustive },
                               { "checked", report.checked },
                               { "derivable", report.derivable },
                               { "mismatches", mism } };
        text << "truth lemma: " << report.checked << " atoms checked (" << report.derivable << " derivable), "
             << report.mismatches.size() << " mismatches\n";
        for ( const auto& m : report.mismatches )
            text << "  " << render_atom( m.query, c.universe() ) << " derivable=" << m.derivable
                 << " satisfied=" << m.satisfied << '\n';
    }
    out << ( a.json ? j.dump( 2 ) + "\n" : text.str() );
    return ok ? exit_answered : exit_internal;
}

struct gchain_args
{
    theory_args theory;
    std::string strategy;
    std::string f;
    std::string g;
    std::string order = "forward";
    bool json = false;
};

// Lines `<view> i<k>` or `<view> {A} {B} {C}`; views left out use instruction 0.
std::vector< std::size_t > read_canonical_strategy( const std::string& path, const canonical_model& model,
                                                    const view_universe& u )
{
    std::vector< std::size_t > s( u.size(), 0 );
    std::istringstream in{ read_file( path ) };
    std::string line;
    int number = 0;
    static const std::regex by_index{ R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s+i([0-9]+)\s*$)" };
    static const std::regex by_triple{ R"(^\s*([A-Za-z_][A-Za-z0-9_]*)\s+(\{[^}]*\})\s*(\{[^}]*\})\s*(\{[^}]*\})\s*$)" };
    while ( std::getline( in, line ) )
    {
        ++number;
        line = line.substr( 0, line.find( '#' ) );
        if ( line.find_first_not_of( " \t\r" ) == std::string::npos )
            continue;
        std::smatch m;
        auto view_of = [ & ]( const std::string& name ) {
            auto v = u.find( name );
            if ( !v )
                throw input_error( number, 1, "unknown view '" + name + "'" );
            return *v;
        };
        if ( std::regex_match( line, m, by_index ) )
        {
            const auto k = std::stoull( m[ 2 ].str() );
            if ( k >= model.instructions.size() )
                throw input_error( number, 1, "no canonical instruction i" + m[ 2 ].str() );
            s[ view_of( m[ 1 ].str() ).index ] = k;
        }
        else if ( std::regex_match( line, m, by_triple ) )
        {
            const canonical_instruction want{ parse_view_set( m[ 2 ].str(), u ), parse_view_set( m[ 3 ].str(), u ),
                                              parse_view_set( m[ 4 ].str(), u ) };
            auto it = std::find( model.instructions.begin(), model.instructions.end(), want );
            if ( it == model.instructions.end() )
                throw input_error( number, 1, "triple is not a canonical instruction" );
            s[ view_of( m[ 1 ].str() ).index ] = static_cast< std::size_t >( it - model.instructions.begin() );
        }
        else
            throw input_error( number, 1, "expected '<view> i<k>' or '<view> {A} {B} {C}'" );
    }
    return s;
}

int run_gchain( const gchain_args& a, std::ostream& out )
{
    const auto c = build_closure( a.theory );
    const auto model = build_canonical( c );
    if ( model.instructions.empty() )
        throw usage_error( "the canonical model has no instructions" );
    const auto& u = c.universe();
    const auto strategy = read_canonical_strategy( a.strategy, model, u );
    const auto order = a.order == "reverse" ? scan_order::reverse : scan_order::forward;
    const auto chain = gstar_chain( model, strategy, parse_view_set( a.f, u ), parse_view_set( a.g, u ), order );
    const auto checks = certify_gchain( c, chain );

    bool ok = true;
    json stages = json::array();
    std::ostringstream text;
    for ( std::size_t k = 0; k < chain.stages.size(); ++k )
    {
        const auto& st = chain.stages[ k ];
        const auto& ck = checks[ k ];
        ok = ok && ck.base_ok && ck.main_ok;
        stages.push_back( { { "n", st.n },
                            { "instruction", "i" + std::to_string( st.instruction ) },
                            { "A_plus", render_view_set( st.start_plus, u ) },
                            { "B_plus", render_view_set( st.middle_plus, u ) },
                            { "G", render_view_set( st.g, u ) },
                            { "H", render_view_set( st.h, u ) },
                            { "base_ok", ck.base_ok },
                            { "main_ok", ck.main_ok } } );
        text << "G_" << st.n << " = " << render_view_set( st.g, u ) << "  via i" << st.instruction << "  H_" << st.n
             << " = " << render_view_set( st.h, u ) << "  base " << ( ck.base_ok ? "ok" : "FAIL" ) << "  main "
             << ( ck.main_ok ? "ok" : "FAIL" ) << '\n';
    }
    text << "G* = " << render_view_set( chain.g_star, u ) << '\n';
    text << ( ok ? "CERTIFIED" : "NOT CERTIFIED" ) << '\n';
    if ( a.json )
        out << json{ { "stages", stages },
                     { "G_star", render_view_set( chain.g_star, u ) },
                     { "certified", ok } }
                   .dump( 2 )
            << '\n';
    else
        out << text.str();
    return ok ? exit_answered : exit_internal;
}

// ---- fuzz -----------------------------------------------------------------------------------

int run_fuzz( const fuzz_config& config, bool as_json, std::ostream& out )
{
    const auto r = fuzz_soundness( config );
    auto failure_json = []( const fuzz_failure& f ) {
        return json{ { "property", f.property },
                     { "trial", f.trial },
                     { "atoms", f.atoms },
                     { "detail", f.detail },
                     { "system", f.system } };
    };
    if ( as_json )
    {
        json j{ { "seed", config.seed }, { "trials", r.trials }, { "properties", json::array() } };
        for ( const auto& t : r.tallies )
            j[ "properties" ].push_back( { { "property", t.property },
                                           { "checked", t.checked },
                                           { "vacuous", t.vacuous },
                                           { "failures", t.failures } } );
        j[ "failures" ] = json::array();
        for ( const auto& f : r.failures )
            j[ "failures" ].push_back( failure_json( f ) );
        j[ "expected_counterexample_count" ] = r.expected_counterexample_count;
        j[ "expected_counterexamples" ] = json::array();
        for ( const auto& f : r.expected_counterexamples )
            j[ "expected_counterexamples" ].push_back( failure_json( f ) );
        j[ "elapsed_ms" ] = r.elapsed_ms;
        out << j.dump( 2 ) << '\n';
    }
    else
    {
        out << "trials: " << r.trials << "  seed: " << config.seed << '\n';
        for ( const auto& t : r.tallies )
            out << "  " << t.property << ": checked " << t.checked << ", vacuous " << t.vacuous << ", failures "
                << t.failures << '\n';
        out << "expected counterexamples (amnesic unrestricted transitivity): " << r.expected_counterexample_count
            << '\n';
        for ( const auto& f : r.failures )
        {
            out << "FAILURE " << f.property << " trial " << f.trial << ( f.detail.empty() ? "" : ": " + f.detail )
                << '\n';
            for ( const auto& x : f.atoms )
                out << "  " << x << '\n';
            out << f.system;
        }
        out << "total failures: " << r.total_failures() << "  (" << static_cast< long >( r.elapsed_ms ) << " ms)\n";
    }
    return r.total_failures() == 0 ? exit_answered : exit_internal;
}

void add_theory_options( CLI::App* cmd, theory_args& t )
{
    cmd->add_option( "--views", t.views, "comma-separated view universe" )->required();
    cmd->add_option( "--assume", t.assume, "assumed atom (repeatable)" );
    cmd->add_option( "--theory", t.theory, "file with one atom per line" );
}

} // namespace

int run_cli( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "navigability checker and proof engine", "navlog" };
    app.require_subcommand( 1 );

    check_args check;
    auto* c_check = app.add_subcommand( "check", "decide a formula on a system" );
    c_check->add_option( "file", check.file, ".ets system" )->required();
    c_check->add_option( "formula", check.formula )->required();
    c_check->add_option( "--mode", check.mode )->check( CLI::IsMember( { "amnesic", "recall" } ) );
    c_check->add_option( "--strategy", check.strategy, "check one amnesic strategy: v1=0,v2=1 or an instruction" );
    c_check->add_flag( "--witness", check.witness );
    c_check->add_flag( "--json", check.flags.json );
    c_check->add_flag( "--fail-on-false", check.flags.fail_on_false, "exit 1 when the verdict is false" );

    check_args ev;
    auto* c_eval = app.add_subcommand( "eval", "evaluate a formula with amnesic atoms" );
    c_eval->add_option( "file", ev.file )->required();
    c_eval->add_option( "formula", ev.formula )->required();
    c_eval->add_flag( "--json", ev.flags.json );
    c_eval->add_flag( "--fail-on-false", ev.flags.fail_on_false );

    table_args table;
    auto* c_table = app.add_subcommand( "table", "navigability between classes" );
    c_table->add_option( "file", table.file )->required();
    c_table->add_option( "--classes", table.classes )->required();
    c_table->add_flag( "--amnesic-only", table.amnesic_only );
    c_table->add_flag( "--json", table.json );

    theory_args sat;
    bool sat_list = false;
    bool sat_json = false;
    auto* c_sat = app.add_subcommand( "saturate", "derive every consequence of a theory" );
    add_theory_options( c_sat, sat );
    c_sat->add_flag( "--list", sat_list, "print every derived atom" );
    c_sat->add_flag( "--json", sat_json );

    theory_args der;
    std::string der_query;
    common_flags der_flags;
    auto* c_der = app.add_subcommand( "derive", "is an atom derivable" );
    add_theory_options( c_der, der );
    c_der->add_option( "atom", der_query )->required();
    c_der->add_flag( "--json", der_flags.json );
    c_der->add_flag( "--fail-on-false", der_flags.fail_on_false );

    theory_args exp;
    std::string exp_query;
    common_flags exp_flags;
    auto* c_exp = app.add_subcommand( "explain", "print a derivation tree" );
    add_theory_options( c_exp, exp );
    c_exp->add_option( "atom", exp_query )->required();
    c_exp->add_flag( "--json", exp_flags.json );
    c_exp->add_flag( "--fail-on-false", exp_flags.fail_on_false );

    canonical_args can;
    auto* c_can = app.add_subcommand( "canonical", "build the canonical model of a theory" );
    add_theory_options( c_can, can.theory );
    c_can->add_option( "--emit", can.emit, "write the model as .ets" );
    c_can->add_flag( "--verify", can.verify, "compare derivability with model checking" );
    c_can->add_option( "--samples", can.samples, "sample this many atoms instead of the default policy" );
    c_can->add_option( "--seed", can.seed );
    c_can->add_flag( "--json", can.json );

    gchain_args gc;
    auto* c_gc = app.add_subcommand( "gchain", "build and certify the G chain of a canonical strategy" );
    add_theory_options( c_gc, gc.theory );
    c_gc->add_option( "--strategy", gc.strategy, "lines '<view> i<k>' or '<view> {A} {B} {C}'" )->required();
    c_gc->add_option( "--F", gc.f )->required();
    c_gc->add_option( "--G", gc.g )->required();
    c_gc->add_option( "--order", gc.order )->check( CLI::IsMember( { "forward", "reverse" } ) );
    c_gc->add_flag( "--json", gc.json );

    fuzz_config fz;
    bool fz_json = false;
    bool fz_no_fixture = false;
    auto* c_fz = app.add_subcommand( "fuzz", "soundness campaign on random systems" );
    c_fz->add_option( "--seed", fz.seed );
    c_fz->add_option( "--trials", fz.trials );
    c_fz->add_option( "--max-states", fz.max_states );
    c_fz->add_option( "--max-views", fz.max_views );
    c_fz->add_option( "--max-instructions", fz.max_instructions );
    c_fz->add_option( "--density", fz.transition_density );
    c_fz->add_option( "--samples", fz.samples_per_trial, "view-set tuples per trial" );
    c_fz->add_flag( "--no-fixture", fz_no_fixture );
    c_fz->add_flag( "--json", fz_json );

    std::vector< std::string > argv_store{ "navlog" };
    argv_store.insert( argv_store.end(), args.begin(), args.end() );
    std::vector< const char* > argv;
    for ( const auto& s : argv_store )
        argv.push_back( s.c_str() );

    try
    {
        app.parse( static_cast< int >( argv.size() ), argv.data() );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e, out, err );
        return code == 0 ? exit_answered : exit_usage;
    }

    try
    {
        if ( c_check->parsed() )
            return run_check( check, out );
        if ( c_eval->parsed() )
            return run_check( ev, out );
        if ( c_table->parsed() )
            return run_table( table, out );
        if ( c_sat->parsed() )
            return run_saturate( sat, sat_list, sat_json, out );
        if ( c_der->parsed() )
            return run_derive( der, der_query, der_flags, out );
        if ( c_exp->parsed() )
            return run_explain( exp, exp_query, exp_flags, out );
        if ( c_can->parsed() )
            return run_canonical( can, out );
        if ( c_gc->parsed() )
            return run_gchain( gc, out );
        if ( c_fz->parsed() )
        {
            fz.inject_fixture = !fz_no_fixture;
            return run_fuzz( fz, fz_json, out );
        }
    }
    catch ( const input_error& e )
    {
        for ( const auto& d : e.diagnostics() )
            err << "error: " << d.to_string() << '\n';
        return exit_usage;
    }
    catch ( const usage_error& e )
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch ( const invariant_failure& e )
    {
        err << "internal invariant violated: " << e.what() << '\n';
        return exit_internal;
    }
    catch ( const std::logic_error& e )
    {
        err << "internal invariant violated: " << e.what() << '\n';
        return exit_internal;
    }
    catch ( const std::exception& e )
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace navlog
