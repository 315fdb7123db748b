#include "navlog/canonical.hpp"

#include "navlog/amnesic.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

namespace navlog
{

view_set valid_views( const closure& c )
{
    view_set valid;
    for ( std::size_t v = 0; v < c.view_count(); ++v )
    {
        const auto single = view_set::single( view_id{ v } );
        if ( !c.contains( { single, {}, {} } ) )
            valid.insert( view_id{ v } );
    }
    return valid;
}

std::vector< canonical_instruction > canonical_instructions( const closure& c )
{
    const auto valid = valid_views( c ).members();
    std::vector< canonical_instruction > out;
    std::size_t combos = 1;
    for ( std::size_t k = 0; k < valid.size(); ++k )
        combos *= 4;
    for ( std::size_t code = 0; code < combos; ++code )
    {
        canonical_instruction i;
        auto rest = code;
        for ( auto v : valid )
        {
            switch ( rest % 4 )
            {
            case 1:
                i.start.insert( v );
                break;
            case 2:
                i.middle.insert( v );
                break;
            case 3:
                i.target.insert( v );
                break;
            default:
                break;
            }
            rest /= 4;
        }
        if ( c.contains( { i.start, i.start | i.middle, i.target } ) )
            out.push_back( i );
    }
    return out;
}

canonical_model build_canonical( const closure& c )
{
    canonical_model model{ valid_views( c ), canonical_instructions( c ), {}, {} };
    const auto valid = model.valid.members();
    const auto n_instr = model.instructions.size();

    system_builder builder;
    const auto& names = c.universe().names();
    for ( const auto& name : names )
        builder.add_view( name );
    for ( std::size_t i = 0; i < n_instr; ++i )
        builder.add_instruction( "i" + std::to_string( i ) );

    // Position of each valid view among the valid views.
    std::vector< std::size_t > pos( c.view_count(), 0 );
    for ( std::size_t k = 0; k < valid.size(); ++k )
        pos[ valid[ k ].index ] = k;

    for ( auto v : valid )
    {
        builder.add_state( names[ v.index ], v );
        model.states.push_back( plain_state{ v } );
    }
    for ( auto v : valid )
        for ( std::size_t i = 0; i < n_instr; ++i )
        {
            builder.add_state( names[ v.index ] + "__i" + std::to_string( i ), v );
            model.states.push_back( partial_state{ v, i } );
        }

    auto plain = [ & ]( view_id v ) { return state_id{ pos[ v.index ] }; };
    auto partial = [ & ]( view_id v, std::size_t i ) { return state_id{ valid.size() + pos[ v.index ] * n_instr + i }; };

    for ( std::size_t i = 0; i < n_instr; ++i )
    {
        const auto& [ a, b, target ] = model.instructions[ i ];
        const instruction_id label{ i };
        const auto targets = target.members();
        const auto entries = ( a | b ).members();

        a.for_each( [ & ]( view_id v ) {
            // Full transitions from A ⊔ (A × I) into C.
            for ( auto t : targets )
            {
                builder.add_transition( plain( v ), label, plain( t ) );
                for ( std::size_t j = 0; j < n_instr; ++j )
                    builder.add_transition( partial( v, j ), label, plain( t ) );
            }
            // Partial entries from A ⊔ (A × (I ∖ {i})) into (A ∪ B) × {i}.
            for ( auto e : entries )
            {
                builder.add_transition( plain( v ), label, partial( e, i ) );
                for ( std::size_t j = 0; j < n_instr; ++j )
                    if ( j != i )
                        builder.add_transition( partial( v, j ), label, partial( e, i ) );
            }
        } );
        // Completions from (A ∪ B) × {i} into C.
        for ( auto e : entries )
            for ( auto t : targets )
                builder.add_transition( partial( e, i ), label, plain( t ) );
    }

    model.system = std::move( builder ).build();
    return model;
}

truth_lemma_policy default_truth_lemma_policy( const closure& c )
{
    if ( c.view_count() <= 3 )
        return {};
    return { false, 256, 0, 0 };
}

truth_lemma_report verify_truth_lemma( const closure& c, const canonical_model& model,
                                       const truth_lemma_policy& policy )
{
    std::vector< std::size_t > queries;
    if ( policy.exhaustive )
    {
        queries.resize( c.atom_count() );
        for ( std::size_t k = 0; k < queries.size(); ++k )
            queries[ k ] = k;
    }
    else
    {
        std::mt19937_64 rng{ policy.seed };
        for ( std::size_t k = 0; k < policy.samples; ++k )
            queries.push_back( static_cast< std::size_t >( rng() % c.atom_count() ) );
    }

    std::vector< signed char > satisfied( queries.size(), -1 );
    std::atomic< std::size_t > next{ 0 };
    auto worker = [ & ] {
        for ( auto k = next++; k < queries.size(); k = next++ )
        {
            const auto a = c.atom_at( queries[ k ] );
            satisfied[ k ] = check_atom_amnesic( model.system, a, { .canonical_witness = false } ).holds ? 1 : 0;
        }
    };
    auto threads = policy.threads != 0 ? policy.threads : std::max( 1U, std::thread::hardware_concurrency() );
    threads = static_cast< unsigned >( std::min< std::size_t >( threads, std::max< std::size_t >( 1, queries.size() / 16 ) ) );
    std::vector< std::thread > pool;
    for ( unsigned t = 1; t < threads; ++t )
        pool.emplace_back( worker );
    worker();
    for ( auto& t : pool )
        t.join();

    truth_lemma_report report;
    for ( std::size_t k = 0; k < queries.size(); ++k )
    {
        const auto a = c.atom_at( queries[ k ] );
        const bool derivable = c.contains( a );
        const bool sat = satisfied[ k ] == 1;
        ++report.checked;
        report.derivable += derivable ? 1 : 0;
        if ( derivable != sat )
            report.mismatches.push_back( { a, derivable, sat } );
    }
    return report;
}

truth_lemma_report verify_truth_lemma( const closure& c, const truth_lemma_policy& policy )
{
    return verify_truth_lemma( c, build_canonical( c ), policy );
}

gchain gstar_chain( const canonical_model& model, const std::vector< std::size_t >& strategy, view_set f, view_set g,
                    scan_order order )
{
    const auto n_views = model.system.view_count();
    if ( strategy.size() != n_views )
        throw usage_error( "strategy must assign an instruction to every view" );
    for ( auto s : strategy )
        if ( s >= model.instructions.size() )
            throw usage_error( "strategy refers to an unknown canonical instruction" );
    if ( !f.subset_of( model.system.all_views() ) || !g.subset_of( model.system.all_views() ) )
        throw usage_error( "F and G must be sets of views of the universe" );

    gchain chain{ f, g, strategy, {}, g };
    view_set g_prev = g;
    view_set h_prev;

    // Views of `set` whose strategy choice is (resp. is not) instruction idx.
    auto choosing = [ & ]( view_set set, std::size_t idx ) {
        view_set out;
        set.for_each( [ & ]( view_id v ) {
            if ( strategy[ v.index ] == idx )
                out.insert( v );
        } );
        return out;
    };

    const auto count = model.instructions.size();
    for ( std::size_t n = 1;; ++n )
    {
        std::optional< std::size_t > picked;
        for ( std::size_t k = 0; k < count && !picked; ++k )
        {
            const auto idx = order == scan_order::forward ? k : count - 1 - k;
            const auto& [ a, b, c ] = model.instructions[ idx ];
            const auto a_plus = choosing( a, idx );
            const auto b_plus = choosing( b, idx );
            const bool ok = ( a | b ).subset_of( f | g )          // (a)
                            && !( a_plus - g_prev ).empty()        // (b)
                            && ( a - a_plus ).subset_of( g_prev )  // (c)
                            && ( b - b_plus ).subset_of( g_prev )  // (d)
                            && c.subset_of( g_prev );              // (e)
            if ( ok )
                picked = idx;
        }
        if ( !picked )
            break;
        const auto& chosen = model.instructions[ *picked ];
        gchain_stage stage;
        stage.n = n;
        stage.instruction = *picked;
        stage.chosen = chosen;
        stage.start_plus = choosing( chosen.start, *picked );
        stage.middle_plus = choosing( chosen.middle, *picked );
        stage.g = stage.start_plus | g_prev;
        stage.h = stage.middle_plus | h_prev;
        g_prev = stage.g;
        h_prev = stage.h;
        chain.stages.push_back( stage );
    }
    chain.g_star = g_prev;
    return chain;
}

std::vector< gchain_check > certify_gchain( const closure& c, const gchain& chain )
{
    std::vector< gchain_check > out;
    view_set g_prev = chain.g;
    for ( const auto& st : chain.stages )
    {
        gchain_check check;
        check.stage = st.n;
        check.base_ok = c.contains( { st.g, st.g | st.middle_plus, g_prev } );
        check.main_ok = c.contains( { st.g, st.g | st.h, chain.g } );
        out.push_back( check );
        g_prev = st.g;
    }
    return out;
}

} // namespace navlog
