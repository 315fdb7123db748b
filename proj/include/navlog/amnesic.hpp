#pragma once

#include "navlog/formula.hpp"
#include "navlog/strategy.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace navlog
{

struct amnesic_decision
{
    bool holds = false;
    std::optional< amnesic_strategy > witness; // present iff holds
    std::uint64_t strategies_examined = 0;     // partial strategies visited by the search
    std::optional< std::string > note;
};

struct amnesic_options
{
    // Report the canonical witness (least constant strategy, else lexicographically least).
    // When false the first strategy found is reported, which is cheaper.
    bool canonical_witness = true;
};

until_objective to_objective( const atom& a );

// Decides whether some amnesic strategy satisfies the atom, by backtracking over partial
// strategies that only fix views actually reached from the start states.
amnesic_decision check_atom_amnesic( const epistemic_transition_system& system, const atom& a,
                                     amnesic_options options = {} );

// Classical evaluation with atoms decided by check_atom_amnesic.
bool evaluate( const epistemic_transition_system& system, const formula& f );

enum class navigation_kind : char
{
    amnesic = 'a',
    recall_only = 'r',
    none = '-'
};

struct navigability_modes
{
    bool amnesic = true;
    bool recall = true;
};

// cells[row][col] for nav({row}; ALL; {col}).
struct navigability_table
{
    std::vector< view_id > classes;
    std::vector< std::vector< navigation_kind > > cells;
};

navigability_table build_navigability_table( const epistemic_transition_system& system,
                                             const std::vector< view_id >& classes, navigability_modes modes = {} );

std::string render_table( const navigability_table& table, const view_universe& views );

} // namespace navlog
