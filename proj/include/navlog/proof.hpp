#pragma once

#include "navlog/formula.hpp"
#include "navlog/system.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace navlog
{

enum class rule : std::uint8_t
{
    assumption,
    reflexivity,     // A ▷_B C where A ⊆ C
    augmentation,    // A ▷_B C  ⊢  (A∪D) ▷_B (C∪D)
    transitivity,    // A ▷_B C, C ▷_D E  ⊢  A ▷_{B∪D} E   where B∩D = ∅
    early_bird,      // A ▷_B C  ⊢  A ▷_{B∖C} C
    trivial_path,    // A ▷_∅ B  ⊢  (A∖B) ▷_∅ ∅
    path_to_nowhere, // A ▷_B ∅  ⊢  A ▷_∅ ∅
};

std::string to_string( rule r );

struct provenance
{
    rule by = rule::assumption;
    std::array< atom, 2 > premises{}; // first `premise_count` entries are meaningful
    std::uint8_t premise_count = 0;
    view_set augment_by; // D, for augmentation
};

// Default cap on |V| for saturation; NAVLOG_MAX_VIEWS overrides it.
inline constexpr std::size_t default_saturation_views = 5;
// The atom space has 8^|V| entries, so this is a hard limit regardless of overrides.
inline constexpr std::size_t hard_saturation_views = 8;

std::size_t saturation_view_limit();

// Saturated set of atoms derivable from the assumptions over a fixed view universe.
// Only saturate() creates closures, so every closure is closed under all six rules.
class closure
{
    friend closure saturate( view_universe universe, const std::vector< atom >& assumptions,
                             std::size_t view_limit );

    struct packed_provenance
    {
        std::uint32_t first = 0;
        std::uint32_t second = 0;
        std::uint32_t augment_by = 0;
        rule by = rule::assumption;
    };

    view_universe _universe;
    std::vector< atom > _assumptions;
    std::vector< std::uint8_t > _derived; // by atom index
    std::vector< packed_provenance > _provenance;
    std::size_t _derived_count = 0;

    closure() = default;

public:
    [[nodiscard]] const view_universe& universe() const { return _universe; }
    [[nodiscard]] std::size_t view_count() const { return _universe.size(); }
    [[nodiscard]] view_set all_views() const { return view_set::full( view_count() ); }
    [[nodiscard]] const std::vector< atom >& assumptions() const { return _assumptions; }

    [[nodiscard]] std::size_t atom_count() const { return _derived.size(); }
    [[nodiscard]] std::size_t index_of( const atom& a ) const;
    [[nodiscard]] atom atom_at( std::size_t index ) const;

    [[nodiscard]] bool contains( const atom& a ) const { return _derived[ index_of( a ) ] != 0; }
    [[nodiscard]] std::size_t derived_count() const { return _derived_count; }
    [[nodiscard]] std::vector< atom > derived_atoms() const;

    // First derivation found for a derived atom.
    [[nodiscard]] provenance how( const atom& a ) const;
};

// Least set containing every Reflexivity instance and the assumptions, closed under the
// five conditional rules. Throws usage_error if |universe| exceeds the limit.
closure saturate( view_universe universe, const std::vector< atom >& assumptions,
                  std::size_t view_limit = saturation_view_limit() );

bool derives( const closure& c, const atom& a );

// Applies every rule to the derived set once more; returns an atom that would be added, if any.
std::optional< atom > find_unclosed( const closure& c );

// Checks the side conditions of one rule instance.
bool valid_instance( const provenance& p, const atom& conclusion );

struct derivation_tree
{
    atom root;
    rule by = rule::assumption;
    view_set augment_by;
    std::vector< derivation_tree > children;

    [[nodiscard]] std::size_t node_count() const;
};

// Throws usage_error if the atom is not derived.
derivation_tree explain( const closure& c, const atom& a );

std::string render_tree( const derivation_tree& t, const view_universe& views );

struct lemma_violation
{
    std::string lemma;
    std::vector< atom > premises;
    atom conclusion;
};

struct lemma_sweep
{
    std::string lemma;
    std::uint64_t instances = 0; // instances whose premises were all derived
    std::uint64_t violations = 0;
};

struct lemma_report
{
    std::vector< lemma_sweep > sweeps;
    std::vector< lemma_violation > violations; // capped sample

    [[nodiscard]] std::uint64_t total_violations() const;
};

// Checks remove-left, add-down, add-right, remove-void and super-transitivity over every
// instance in the universe.
lemma_report check_derived_lemmas( const closure& c );

} // namespace navlog
