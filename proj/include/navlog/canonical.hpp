#pragma once

#include "navlog/proof.hpp"
#include "navlog/system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace navlog
{

// Triple (A, B, C) of pairwise disjoint valid views with A ▷_{A∪B} C derivable.
struct canonical_instruction
{
    view_set start;
    view_set middle;
    view_set target;

    friend auto operator<=>( const canonical_instruction&, const canonical_instruction& ) = default;
};

struct plain_state
{
    view_id view;
};

// Partial completion of an instruction, observed as `view`.
struct partial_state
{
    view_id view;
    std::size_t instruction; // index into canonical_model::instructions
};

using canonical_state = std::variant< plain_state, partial_state >;

struct canonical_model
{
    view_set valid;
    std::vector< canonical_instruction > instructions;
    std::vector< canonical_state > states; // parallel to system's state ids
    epistemic_transition_system system;
};

// Views v with v ▷_∅ ∅ not derivable.
view_set valid_views( const closure& c );

// Every qualifying triple, in canonical order: (A, B, C) enumerated by assigning each valid
// view to A, B, C or none, with the lowest view as the least significant digit.
std::vector< canonical_instruction > canonical_instructions( const closure& c );

// Plain states (valid views, in view order) followed by partial states (view-major,
// then instruction order). The system's view universe is the closure's full universe.
canonical_model build_canonical( const closure& c );

struct truth_lemma_mismatch
{
    atom query;
    bool derivable = false;
    bool satisfied = false;
};

struct truth_lemma_report
{
    std::uint64_t checked = 0;
    std::uint64_t derivable = 0;
    std::vector< truth_lemma_mismatch > mismatches;
};

struct truth_lemma_policy
{
    bool exhaustive = true;
    std::size_t samples = 0; // used when not exhaustive
    std::uint64_t seed = 0;
    unsigned threads = 0; // 0 = hardware concurrency
};

// Default policy: exhaustive for |V| <= 3, otherwise 256 sampled atoms.
truth_lemma_policy default_truth_lemma_policy( const closure& c );

// Compares derivability with model checking of the canonical system, atom by atom.
truth_lemma_report verify_truth_lemma( const closure& c, const canonical_model& model,
                                       const truth_lemma_policy& policy );
truth_lemma_report verify_truth_lemma( const closure& c, const truth_lemma_policy& policy );

struct gchain_stage
{
    std::size_t n = 0;
    std::size_t instruction = 0; // index into canonical instructions
    canonical_instruction chosen;
    view_set start_plus;  // A_n^+
    view_set middle_plus; // B_n^+
    view_set g;           // G_n
    view_set h;           // H_n
};

struct gchain
{
    view_set f;
    view_set g;
    std::vector< std::size_t > strategy; // canonical instruction index per view
    std::vector< gchain_stage > stages;
    view_set g_star;
};

enum class scan_order
{
    forward,
    reverse
};

// Extends G_0 = G, H_0 = ∅ with the first instruction (in scan order) meeting conditions
// (a)-(e), until none does. The strategy gives one canonical instruction index per view.
gchain gstar_chain( const canonical_model& model, const std::vector< std::size_t >& strategy, view_set f, view_set g,
                    scan_order order = scan_order::forward );

struct gchain_check
{
    std::size_t stage = 0;
    bool base_ok = false;  // G_n ▷_{G_n ∪ B_n^+} G_{n-1}
    bool main_ok = false;  // G_n ▷_{G_n ∪ H_n} G
};

std::vector< gchain_check > certify_gchain( const closure& c, const gchain& chain );

} // namespace navlog
