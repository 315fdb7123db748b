#include "navlog/fuzz.hpp"

#include "navlog/amnesic.hpp"
#include "navlog/ets_format.hpp"
#include "navlog/fixtures.hpp"
#include "navlog/recall.hpp"

#include <chrono>
#include <map>
#include <random>

namespace navlog
{

void fuzz_config::validate() const
{
    if ( max_states < 1 || max_views < 1 || max_instructions < 1 )
        throw usage_error( "fuzz bounds must be at least 1" );
    if ( max_views > navlog::max_views )
        throw usage_error( "max_views exceeds " + std::to_string( navlog::max_views ) );
    if ( !( transition_density >= 0.0 && transition_density <= 1.0 ) )
        throw usage_error( "transition density must lie in [0, 1]" );
}

namespace
{

std::mt19937_64 trial_rng( std::uint64_t seed, std::size_t trial )
{
    std::seed_seq seq{ static_cast< std::uint32_t >( seed ), static_cast< std::uint32_t >( seed >> 32 ),
                       static_cast< std::uint32_t >( trial ), static_cast< std::uint32_t >( trial >> 32 ) };
    return std::mt19937_64{ seq };
}

std::size_t below( std::mt19937_64& rng, std::size_t n ) { return static_cast< std::size_t >( rng() % n ); }

bool coin( std::mt19937_64& rng, double p )
{
    // 53 random bits mapped to [0, 1).
    return static_cast< double >( rng() >> 11 ) * 0x1.0p-53 < p;
}

view_set random_set( std::mt19937_64& rng, std::size_t views )
{
    return view_set{ rng() } & view_set::full( views );
}

} // namespace

epistemic_transition_system generate_random_system( const fuzz_config& config, std::size_t trial )
{
    config.validate();
    auto rng = trial_rng( config.seed, trial );
    const auto n_states = 1 + below( rng, config.max_states );
    const auto n_views = 1 + below( rng, config.max_views );
    const auto n_instr = 1 + below( rng, config.max_instructions );

    system_builder b;
    for ( std::size_t v = 0; v < n_views; ++v )
        b.add_view( "v" + std::to_string( v + 1 ) );
    for ( std::size_t i = 0; i < n_instr; ++i )
        b.add_instruction( std::to_string( i ) );
    for ( std::size_t s = 0; s < n_states; ++s )
        b.add_state( "s" + std::to_string( s ), view_id{ below( rng, n_views ) } );
    for ( std::size_t s = 0; s < n_states; ++s )
        for ( std::size_t i = 0; i < n_instr; ++i )
            for ( std::size_t t = 0; t < n_states; ++t )
                if ( coin( rng, config.transition_density ) )
                    b.add_transition( state_id{ s }, instruction_id{ i }, state_id{ t } );
    return std::move( b ).build();
}

std::uint64_t fuzz_report::total_failures() const
{
    std::uint64_t total = 0;
    for ( const auto& t : tallies )
        total += t.failures;
    return total;
}

namespace
{

class campaign
{
    fuzz_report& _report;
    std::map< std::string, std::size_t > _slot;

public:
    explicit campaign( fuzz_report& report ) : _report{ report } {}

    property_tally& tally( const std::string& name )
    {
        auto [ it, inserted ] = _slot.emplace( name, _report.tallies.size() );
        if ( inserted )
            _report.tallies.push_back( { name } );
        return _report.tallies[ it->second ];
    }

    // Records one instance of an implication-shaped property.
    void implication( const std::string& name, bool premise, bool conclusion, std::size_t trial,
                      const epistemic_transition_system& sys, const std::vector< atom >& atoms,
                      const std::string& detail = {} )
    {
        auto& t = tally( name );
        if ( !premise )
        {
            ++t.vacuous;
            return;
        }
        ++t.checked;
        if ( conclusion )
            return;
        ++t.failures;
        _report.failures.push_back( record( name, trial, sys, atoms, detail ) );
    }

    static fuzz_failure record( const std::string& name, std::size_t trial, const epistemic_transition_system& sys,
                                const std::vector< atom >& atoms, const std::string& detail )
    {
        fuzz_failure f{ name, trial, write_system( sys ), {}, detail };
        for ( const auto& a : atoms )
            f.atoms.push_back( render_atom( a, sys.views() ) );
        return f;
    }
};

void probe_fixture( campaign& run, fuzz_report& report )
{
    const auto t0 = fixtures::t0();
    const auto& views = t0.views();
    const auto all = t0.all_views();
    auto single = [ & ]( const char* name ) { return view_set::single( *views.find( name ) ); };
    const atom first{ single( "v1" ), all, single( "v6" ) };
    const atom second{ single( "v6" ), all, single( "v2" ) };
    const atom composed{ single( "v1" ), all, single( "v2" ) };

    const bool p1 = check_atom_amnesic( t0, first ).holds;
    const bool p2 = check_atom_amnesic( t0, second ).holds;
    const bool c = check_atom_amnesic( t0, composed ).holds;
    const bool reproduced = p1 && p2 && !c;
    run.implication( "fixture-transitivity-counterexample", true, reproduced, 0, t0, { first, second, composed },
                     "fixture t0 must refute unrestricted amnesic transitivity" );
    if ( reproduced )
    {
        ++report.expected_counterexample_count;
        report.expected_counterexamples.push_back( campaign::record(
            "amnesic-unrestricted-transitivity", 0, t0, { first, second, composed }, "fixture t0" ) );
    }
}

} // namespace

fuzz_report fuzz_soundness( const fuzz_config& config )
{
    config.validate();
    const auto started = std::chrono::steady_clock::now();
    fuzz_report report;
    report.trials = config.trials;
    campaign run{ report };

    // Register in a fixed order so empty campaigns still list every property.
    for ( const char* name :
          { "reflexivity", "augmentation", "transitivity", "early-bird", "trivial-path", "path-to-nowhere",
            "empty-classes", "switch-s", "transitivity-composition", "amnesic-implies-recall", "recall-transitivity" } )
        run.tally( name );

    if ( config.inject_fixture && config.trials > 0 )
        probe_fixture( run, report );

    constexpr std::size_t expected_sample_cap = 10;

    for ( std::size_t trial = 0; trial < config.trials; ++trial )
    {
        const auto sys = generate_random_system( config, trial );
        auto rng = trial_rng( config.seed ^ 0x9e3779b97f4a7c15ULL, trial );
        const auto n = sys.view_count();
        const auto all = sys.all_views();

        auto holds = [ & ]( const atom& a ) { return check_atom_amnesic( sys, a, { .canonical_witness = false } ); };
        auto recall = [ & ]( const atom& a ) { return check_atom_recall( sys, a ).holds; };

        for ( std::size_t sample = 0; sample < config.samples_per_trial; ++sample )
        {
            const auto A = random_set( rng, n );
            const auto B = random_set( rng, n );
            const auto C = random_set( rng, n );
            const auto D = random_set( rng, n );
            const auto E = random_set( rng, n );

            const atom reflexive{ A, B, A | C };
            run.implication( "reflexivity", true, holds( reflexive ).holds, trial, sys, { reflexive } );

            const atom abc{ A, B, C };
            const auto d_abc = holds( abc );

            const atom augmented{ A | D, B, C | D };
            run.implication( "augmentation", d_abc.holds, d_abc.holds && holds( augmented ).holds, trial, sys,
                             { abc, augmented } );

            const auto D2 = D - B;
            const atom cde{ C, D2, E };
            const auto d_cde = holds( cde );
            const atom chained{ A, B | D2, E };
            const bool both = d_abc.holds && d_cde.holds;
            run.implication( "transitivity", both, both && holds( chained ).holds, trial, sys, { abc, cde, chained } );

            const atom early{ A, B - C, C };
            run.implication( "early-bird", d_abc.holds, d_abc.holds && holds( early ).holds, trial, sys,
                             { abc, early } );

            const atom direct{ A, {}, C };
            const bool direct_holds = holds( direct ).holds;
            const atom trivial{ A - C, {}, {} };
            run.implication( "trivial-path", direct_holds, direct_holds && holds( trivial ).holds, trial, sys,
                             { direct, trivial } );

            const atom nowhere{ A, B, {} };
            const bool nowhere_holds = holds( nowhere ).holds;
            const atom empty_route{ A, {}, {} };
            run.implication( "path-to-nowhere", nowhere_holds, nowhere_holds && holds( empty_route ).holds, trial,
                             sys, { nowhere, empty_route } );

            bool unobserved = true;
            A.for_each( [ & ]( view_id v ) { unobserved = unobserved && sys.observers( v ).empty(); } );
            run.implication( "empty-classes", true, holds( empty_route ).holds == unobserved, trial, sys,
                             { empty_route }, "nav(A;{};{}) must hold exactly when A's classes are empty" );

            if ( d_abc.holds )
            {
                auto s2 = *d_abc.witness;
                for ( std::size_t v = 0; v < n; ++v )
                    if ( !B.contains( view_id{ v } ) )
                        s2.set( view_id{ v }, instruction_id{ below( rng, sys.instruction_count() ) } );
                run.implication( "switch-s", true, is_ok( check_strategy( sys, s2, to_objective( abc ) ) ), trial,
                                 sys, { abc }, "strategy altered outside the corridor" );
            }
            else
            {
                ++run.tally( "switch-s" ).vacuous;
            }

            if ( both )
            {
                // s agrees with the first witness on B and with the second elsewhere.
                amnesic_strategy s = *d_cde.witness;
                B.for_each( [ & ]( view_id v ) { s.set( v, ( *d_abc.witness )( v ) ); } );
                run.implication( "transitivity-composition", true,
                                 is_ok( check_strategy( sys, s, to_objective( chained ) ) ), trial, sys,
                                 { abc, cde, chained }, "composed strategy" );
            }
            else
            {
                ++run.tally( "transitivity-composition" ).vacuous;
            }

            run.implication( "amnesic-implies-recall", d_abc.holds, d_abc.holds && recall( abc ), trial, sys, { abc } );

            const atom r1{ A, all, C };
            const atom r2{ C, all, E };
            const atom r3{ A, all, E };
            const bool r_premise = recall( r1 ) && recall( r2 );
            run.implication( "recall-transitivity", r_premise, r_premise && recall( r3 ), trial, sys, { r1, r2, r3 } );

            // Amnesic agents lose unrestricted transitivity; count the instances seen.
            if ( holds( r1 ).holds && holds( r2 ).holds && !holds( r3 ).holds )
            {
                ++report.expected_counterexample_count;
                if ( report.expected_counterexamples.size() < expected_sample_cap )
                    report.expected_counterexamples.push_back(
                        campaign::record( "amnesic-unrestricted-transitivity", trial, sys, { r1, r2, r3 }, {} ) );
            }
        }
    }

    report.elapsed_ms =
        std::chrono::duration< double, std::milli >( std::chrono::steady_clock::now() - started ).count();
    return report;
}

} // namespace navlog
