#ifndef RBA_GLUE_HPP
#define RBA_GLUE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rba/algebra.hpp"

namespace rba {

/// Input for glueing Boolean blocks along a meet-semilattice of domains.
/// A hom entry "From->To" orients From >= To in the domain order; every hom
/// must be a Boolean homomorphism and the family must compose coherently.
/// Homomorphisms need not be surjective.
struct GlueInput {
    struct Block {
        std::string name;
        AlgebraTable table;  // must pass ba1..ba4
    };
    std::vector<Block> blocks;
    // (from block, to block) -> element-label map
    std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> homs;
};

/// Disjoint-union algebra: cross-block meet/join project both arguments to
/// the meet block and operate there. Element labels must be globally unique.
/// Throws Error on a non-Boolean block, a non-homomorphism map, an
/// incoherent family, or an index set that is not a meet-semilattice with a
/// greatest block.
AlgebraTable glue(const GlueInput& input);

/// Seeded random glued RBA: a chain of powerset blocks joined by preimage
/// homomorphisms. At most max_elements elements in total.
GlueInput random_glued_input(std::uint64_t seed, std::size_t max_elements = 20);

}  // namespace rba

#endif
