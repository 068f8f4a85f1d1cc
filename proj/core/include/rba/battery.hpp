#ifndef RBA_BATTERY_HPP
#define RBA_BATTERY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rba/formula.hpp"
#include "rba/frames.hpp"
#include "rba/modal.hpp"

namespace rba {

/// Flat, index-based enumeration of every expanded formula over a small
/// proposition set, ordered by connective count with children before
/// parents. The sweep suites run on this instead of shared_ptr trees; the
/// ordering mirrors enumerate_formulas exactly.
struct FormulaArena {
    struct Node {
        Op op;
        std::uint8_t depth;      // modal depth
        std::uint8_t conn;       // connective count
        std::uint8_t prop_mask;  // which propositions occur
        std::int32_t a = -1, b = -1;
    };

    std::vector<std::string> props;
    std::vector<Node> nodes;
    std::vector<std::size_t> level_begin;  // nodes with conn == c start here

    static FormulaArena build(std::vector<std::string> props,
                              std::size_t max_connectives, bool include_modal,
                              std::size_t max_modal_depth = SIZE_MAX);

    std::size_t size() const { return nodes.size(); }
    Formula to_formula(std::size_t index) const;
};

/// Per-node h⁺ values for one assignment (props[i] -> values[i]).
/// `out` is resized and reused across calls.
void eval_all(const FormulaArena& arena, const AlgebraTable& alg,
              const std::vector<ElementId>* fk, const std::vector<ElementId>& values,
              std::vector<ElementId>& out);

/// Per-node (V, L) extensions over a model; props missing from the model are
/// an error.
void ext_all(const FormulaArena& arena, const AwarenessModel& m,
             std::vector<Extension>& out);

/// Per-node truth-table bitmask over the classical assignments to the arena
/// propositions (bit k = value under assignment k). Modal-free arenas only.
void taut_masks(const FormulaArena& arena, std::vector<std::uint32_t>& out);

}  // namespace rba

#endif
