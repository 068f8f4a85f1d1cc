#ifndef RBA_FILTERS_HPP
#define RBA_FILTERS_HPP

#include <string>
#include <vector>

#include "rba/algebra.hpp"
#include "rba/concrete.hpp"

namespace rba {

/// A set of elements; the filter predicates below decide what it is.
struct Filter {
    std::vector<ElementId> members;  // sorted ascending

    bool contains(ElementId x) const;
    friend bool operator==(const Filter&, const Filter&) = default;
};

Filter make_filter(std::vector<ElementId> members);

/// 1 ∈ s, upward closed under leq, closed under meet.
bool is_filter(const AlgebraTable& a, const Filter& s);

/// Contains no element of the form X ∧ ¬X.
bool is_strongly_proper(const AlgebraTable& a, const Filter& s);

/// Strongly proper and maximal among the strongly proper filters. The
/// maximality scan assumes the host passed check_rba, where every filter is
/// a principal upset.
bool is_ultrafilter(const AlgebraTable& a, const Filter& s);

/// Upward closure of a single element; in an RBA this is always a filter.
Filter principal_upset(const AlgebraTable& a, ElementId x);

/// Every filter of the algebra, in canonical (generator index) order.
std::vector<Filter> enumerate_filters(const AlgebraTable& a);

enum class FilterKind { All, StronglyProper, Ultra, DomainUltra };

struct FilterFamily {
    std::vector<Filter> filters;
    FilterKind kind = FilterKind::All;
};

/// π₂(u): the relative tops inside u.
std::vector<ElementId> project_domains(const AlgebraTable& a, const Filter& u);

/// π₁(u, x): the part of u sharing x's domain.
std::vector<ElementId> project_local(const AlgebraTable& a, const Filter& u, ElementId x);

/// The filters whose trace on every domain they touch is an ultrafilter of
/// that local Boolean algebra; these are the points of the representation.
FilterFamily enumerate_domain_ultra(const AlgebraTable& a);

/// One extension step: { z ∧ y | z >= x, y ∈ f }, the least filter
/// containing f and x. When 1_x lies in π₂(f) and ¬x is outside f, the
/// result is again strongly proper with the same π₂.
Filter one_step_closure(const AlgebraTable& a, const Filter& f, ElementId x);

/// Extends a strongly proper filter f to a member of the domain-ultra family
/// containing f, with the same π₂ and with `avoid` still excluded. Greedy
/// one-step closures in canonical element order, run to a fixpoint and then
/// verified; a verification failure means the input algebra is not an RBA.
Filter extend_filter(const AlgebraTable& a, const Filter& f, ElementId avoid);

struct StoneEmbedding {
    Universe universe;               // one point per family member, "u0", "u1", ...
    FilterFamily family;
    std::vector<SubsetPair> image;   // element -> ({u | X ∈ u}, {u | 1_X ∈ u})
    AxiomReport verification;        // injectivity + homomorphism, exhaustive
};

StoneEmbedding stone_embed(const AlgebraTable& a);

}  // namespace rba

#endif
