#ifndef RBA_ISO_HPP
#define RBA_ISO_HPP

#include <optional>
#include <vector>

#include "rba/algebra.hpp"

namespace rba {

/// Backtracking search for an algebra isomorphism a -> b (preserving meet,
/// join, neg, top, bottom). Matching labels are tried first but are hints
/// only; the result is correct regardless of labelling.
std::optional<std::vector<ElementId>> find_isomorphism(const AlgebraTable& a,
                                                       const AlgebraTable& b);

}  // namespace rba

#endif
