#pragma once

#include "navlog/formula.hpp"
#include "navlog/system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace navlog
{

// Set of states the agent cannot rule out after its observation history. Every state in
// `possible` observes `view`.
struct belief
{
    view_id view;
    std::vector< state_id > possible; // sorted, nonempty

    friend auto operator<=>( const belief&, const belief& ) = default;
};

struct dead_end_flag
{
    friend bool operator==( dead_end_flag, dead_end_flag ) = default;
};

using belief_step = std::variant< std::vector< belief >, dead_end_flag >;

struct recall_decision
{
    bool holds = false;
    // One instruction per winning belief outside the target, reachable from the initial beliefs.
    std::map< belief, instruction_id > witness;
    std::uint64_t explored = 0;
};

// One belief per view of `start` with at least one observing state.
std::vector< belief > initial_beliefs( const epistemic_transition_system& system, view_set start );

// dead_end_flag if some possible state terminates under the instruction; otherwise the
// successor states split by observed view (in view order).
belief_step belief_successors( const epistemic_transition_system& system, const belief& b, instruction_id i );

// Perfect-recall navigability: every initial belief lies in the least fixpoint of winning
// beliefs (target views win; corridor views win if one instruction leads only to winners).
recall_decision check_atom_recall( const epistemic_transition_system& system, const atom& a );

// Plays every environment resolution of the witness; returns the first defect found.
std::optional< std::string > replay_recall_witness( const epistemic_transition_system& system, const atom& a,
                                                    const recall_decision& decision );

} // namespace navlog
