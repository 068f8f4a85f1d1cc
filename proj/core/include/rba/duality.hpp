#ifndef RBA_DUALITY_HPP
#define RBA_DUALITY_HPP

#include <string>
#include <vector>

#include "rba/battery.hpp"
#include "rba/concrete.hpp"
#include "rba/filters.hpp"
#include "rba/frames.hpp"
#include "rba/modal.hpp"

namespace rba {

/// Model -> powerset algebra: the operator sends (A, B) to
/// ({w | R(w) ⊆ A} ∩ B, B), and h maps p to (V(p), L(p)).
struct ConcreteMrba {
    Universe universe;  // the model's worlds, in order
    Mrba mrba;
    Assignment assign;
};

ConcreteMrba model_to_mrba(const AwarenessModel& m, std::size_t element_cap = 0);

/// Algebra -> model over the domain-ultra filters: u >= v iff π₂(u) ⊇ π₂(v),
/// u R v iff f^K(X) ∈ u implies X ∈ v, L(p) = {u | 1_h(p) ∈ u},
/// V(p) = {u | h(p) ∈ u}.
AwarenessModel mrba_to_model(const Mrba& m, const Assignment& h);

/// Both directions of: R(u) ⊆ {v | x ∈ v} iff f^K(x) ∈ u, for every family
/// member u.
bool check_successor_containment(const Mrba& m, ElementId x);

struct DualityReport {
    std::string direction;
    std::size_t checked = 0;
    struct Mismatch {
        std::string formula, lhs, rhs;
    };
    std::vector<Mismatch> mismatches;  // storage capped at 32

    bool ok() const { return mismatches.empty(); }
};

/// h⁺(φ) computed in the powerset algebra must equal (V(φ), L(φ)) computed
/// in the model, for every battery formula.
DualityReport verify_prop1(const AwarenessModel& m, const std::vector<Formula>& battery);
DualityReport verify_prop1(const AwarenessModel& m, const FormulaArena& battery);

/// The dual model's (V(φ), L(φ)) must match filter membership of h⁺(φ) and
/// of its relative top.
DualityReport verify_prop2(const Mrba& m, const Assignment& h,
                           const std::vector<Formula>& battery);
DualityReport verify_prop2(const Mrba& m, const Assignment& h,
                           const FormulaArena& battery);

}  // namespace rba

#endif
