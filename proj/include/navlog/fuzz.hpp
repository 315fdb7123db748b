#pragma once

#include "navlog/system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace navlog
{

struct fuzz_config
{
    std::uint64_t seed = 1;
    std::size_t trials = 500;
    std::size_t max_states = 6;
    std::size_t max_views = 4;
    std::size_t max_instructions = 2;
    double transition_density = 0.5;
    std::size_t samples_per_trial = 8; // random view-set tuples checked per system
    bool inject_fixture = true;       // also probe the t0 transitivity counterexample on trial 0

    // Throws usage_error on out-of-range bounds.
    void validate() const;
};

// Deterministic in (seed, trial). State, view and instruction counts are uniform in
// [1, max]; observations are uniform over views; each candidate transition is present
// independently with probability transition_density.
epistemic_transition_system generate_random_system( const fuzz_config& config, std::size_t trial );

struct property_tally
{
    std::string property;
    std::uint64_t checked = 0; // instances whose premises held
    std::uint64_t vacuous = 0; // instances whose premises failed
    std::uint64_t failures = 0;
};

struct fuzz_failure
{
    std::string property;
    std::size_t trial = 0;
    std::string system;              // .ets text
    std::vector< std::string > atoms; // premises then conclusion, in formula syntax
    std::string detail;
};

struct fuzz_report
{
    std::vector< property_tally > tallies;
    std::vector< fuzz_failure > failures;
    // Known non-properties observed (amnesic unrestricted transitivity); not violations.
    std::vector< fuzz_failure > expected_counterexamples;
    std::uint64_t expected_counterexample_count = 0;
    std::size_t trials = 0;
    double elapsed_ms = 0;

    [[nodiscard]] std::uint64_t total_failures() const;
};

fuzz_report fuzz_soundness( const fuzz_config& config );

} // namespace navlog
