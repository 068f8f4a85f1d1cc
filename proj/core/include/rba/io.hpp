#ifndef RBA_IO_HPP
#define RBA_IO_HPP

#include <string>

#include "rba/duality.hpp"
#include "rba/filters.hpp"
#include "rba/frames.hpp"
#include "rba/glue.hpp"
#include "rba/modal.hpp"

namespace rba {

/// Algebra files come in three shapes:
///   { "elements": [...], "top": ..., "bottom": ..., "meet": [[...]],
///     "join": [[...]], "neg": [...] }
///   { "blocks": [...], "homs": { "B->R": { ... } } }   (run through glue)
///   { "universe": "W = {x,y}" }                        (materialized)
AlgebraTable load_algebra(const std::string& path, std::size_t element_cap = 0);
AlgebraTable load_algebra_text(const std::string& json_text, std::size_t element_cap = 0);

/// Algebra file plus "fk": [elementName]; an optional "assign" object maps
/// propositions to element names.
struct LoadedMrba {
    Mrba mrba;
    Assignment assign;  // may be empty
};
LoadedMrba load_mrba(const std::string& path, std::size_t element_cap = 0);
LoadedMrba load_mrba_text(const std::string& json_text, std::size_t element_cap = 0);

/// { "worlds": [...], "geq": [[w,w']...], "R": [[w,w']...],
///   "L": {p: [worlds]}, "V": {p: [worlds]} }; geq pairs are generators.
AwarenessModel load_model(const std::string& path);
AwarenessModel load_model_text(const std::string& json_text);

std::string algebra_to_json(const AlgebraTable& a);
std::string mrba_to_json(const Mrba& m, const Assignment& assign = {});
std::string model_to_json(const AwarenessModel& m);
std::string report_to_json(const AxiomReport& rep);

/// Parses "p=X_B,q=X_R" against an algebra's labels. Commas inside pair
/// labels like ({x},{x,y}) are honored.
Assignment parse_assignment(const AlgebraTable& a, const std::string& text);

/// Hasse diagram of the order, nodes colored per domain.
std::string render_hasse(const AlgebraTable& a);
/// Accessibility solid, preorder dashed, worlds colored by language.
std::string render_frame(const AwarenessModel& m);
/// The representation image: elements annotated with their subset pairs.
std::string render_embedding(const AlgebraTable& a, const StoneEmbedding& se);

}  // namespace rba

#endif
