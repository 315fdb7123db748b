#pragma once

#include "navlog/system.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace navlog
{

// Total map from views to instructions; the agent has no memory.
class amnesic_strategy
{
    std::vector< instruction_id > _choice;

public:
    amnesic_strategy() = default;
    explicit amnesic_strategy( std::vector< instruction_id > choice ) : _choice{ std::move( choice ) } {}

    static amnesic_strategy constant( std::size_t view_count, instruction_id i )
    {
        return amnesic_strategy{ std::vector< instruction_id >( view_count, i ) };
    }

    [[nodiscard]] instruction_id operator()( view_id v ) const { return _choice.at( v.index ); }
    [[nodiscard]] std::size_t size() const { return _choice.size(); }
    [[nodiscard]] const std::vector< instruction_id >& choices() const { return _choice; }

    void set( view_id v, instruction_id i ) { _choice.at( v.index ) = i; }

    friend auto operator<=>( const amnesic_strategy&, const amnesic_strategy& ) = default;
};

// Start in `start`, stay inside `corridor` strictly until the first `target` view.
struct until_objective
{
    view_set start;
    view_set corridor;
    view_set target;

    friend auto operator<=>( const until_objective&, const until_objective& ) = default;
};

enum class failure_reason
{
    left_corridor, // reached a view outside corridor and target
    dead_end,      // finite maximal path ending outside the target
    never_reaches  // lasso that avoids the target forever
};

std::string to_string( failure_reason r );

// A maximal path violating the objective. With loop_start set, the path is the lasso
// states[0..n) followed by states[loop_start..n) repeated forever.
struct path_witness
{
    std::vector< state_id > states;
    std::optional< std::size_t > loop_start;
    failure_reason reason = failure_reason::left_corridor;

    friend bool operator==( const path_witness&, const path_witness& ) = default;
};

struct strategy_ok
{
    friend bool operator==( strategy_ok, strategy_ok ) = default;
};

using strategy_result = std::variant< strategy_ok, path_witness >;

inline bool is_ok( const strategy_result& r ) { return std::holds_alternative< strategy_ok >( r ); }

// Decides MaxPath_s(start) ⊆ Until(corridor, target) for one fixed strategy. Depth-first from
// the start states in state order; returns the first counterexample found.
strategy_result check_strategy( const epistemic_transition_system& system, const amnesic_strategy& strategy,
                                const until_objective& objective );

// Confirms that `witness` is a genuine counterexample for (system, strategy, objective).
// Returns a description of the first defect, or nullopt when it replays.
std::optional< std::string > replay_witness( const epistemic_transition_system& system,
                                             const amnesic_strategy& strategy, const until_objective& objective,
                                             const path_witness& witness );

void require_strategy_fits( const epistemic_transition_system& system, const amnesic_strategy& strategy );
void require_objective_fits( const epistemic_transition_system& system, const until_objective& objective );

} // namespace navlog
