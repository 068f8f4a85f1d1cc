#ifndef RBA_CONCRETE_HPP
#define RBA_CONCRETE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rba/algebra.hpp"

namespace rba {

/// Ordered finite set of named points. Subsets are bit vectors over this
/// ordering; the default width cap is 16 points.
struct Universe {
    std::vector<std::string> points;

    std::size_t size() const { return points.size(); }
    std::uint32_t full_mask() const {
        return points.empty() ? 0u : (points.size() >= 32 ? ~0u : (1u << points.size()) - 1u);
    }
};

Universe make_universe(std::vector<std::string> points, std::size_t max_points = 16);

/// Parses "W = {x,y,z}" (the "W =" prefix is optional).
Universe parse_universe(const std::string& text, std::size_t max_points = 16);

/// Element (A, B) with A ⊆ B ⊆ W: defined at B, true at A.
struct SubsetPair {
    std::uint32_t truth = 0;   // A
    std::uint32_t domain = 0;  // B

    friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
};

SubsetPair make_pair_checked(std::uint32_t truth, std::uint32_t domain);

inline SubsetPair c_neg(SubsetPair p) { return {p.domain & ~p.truth, p.domain}; }
inline SubsetPair c_meet(SubsetPair p, SubsetPair q) {
    return {p.truth & q.truth, p.domain & q.domain};
}
inline SubsetPair c_join(SubsetPair p, SubsetPair q) {
    std::uint32_t d = p.domain & q.domain;
    return {(p.truth | q.truth) & d, d};
}

/// `({x},{x,y})` over the universe ordering.
std::string format_pair(const Universe& u, SubsetPair p);
SubsetPair parse_pair(const Universe& u, const std::string& text);

/// Full table over all 3^|W| subset pairs, in lexicographic (domain, truth)
/// bit order so the result is reproducible bit-exact. Throws Error when
/// 3^|W| would exceed `cap` (0 = unlimited).
AlgebraTable materialize(const Universe& u, std::size_t cap = 0);

/// Index of (A, B) in the materialize ordering, and back.
std::size_t index_of_pair(const Universe& u, SubsetPair p);
SubsetPair pair_of_index(const Universe& u, std::size_t index);

}  // namespace rba

#endif
