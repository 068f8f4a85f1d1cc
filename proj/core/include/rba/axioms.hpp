#ifndef RBA_AXIOMS_HPP
#define RBA_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rba/formula.hpp"

namespace rba {

enum class SchemaId { K, D, T, Four, FiveA, AGP, A0, KA };

std::optional<SchemaId> schema_from_name(const std::string& name);
std::string schema_name(SchemaId id);

// schema templates
Formula k_axiom(Formula phi, Formula psi);    // (Kφ & K(φ->ψ)) -> Kψ
Formula d_axiom();                            // ~K 0
Formula t_axiom(Formula phi);                 // Kφ -> φ
Formula four_axiom(Formula phi);              // Kφ -> KKφ
Formula five_a_axiom(Formula phi);            // (~Kφ & Aφ) -> K~Kφ
Formula agp_axiom(Formula phi, Formula psi);  // Aφ -> Aψ, props(ψ) ⊆ props(φ)
Formula a0_axiom(Formula phi);                // Kφ -> Aφ
Formula ka_axiom(Formula phi);                // Aφ <-> KAφ
Formula nec_ak(Formula phi);                  // Aφ -> Kφ, for validated φ

/// All instances with metavariables drawn from the pool. For the
/// awareness-generation schema the second formula ranges over the full modal
/// language of the first one's propositions, bounded by `budget` connectives.
std::vector<Formula> instantiate(SchemaId id, const std::vector<Formula>& pool,
                                 std::size_t budget = 5);

}  // namespace rba

#endif
