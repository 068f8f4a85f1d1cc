#ifndef RBA_ALGEBRA_HPP
#define RBA_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rba {

using ElementId = std::uint32_t;

/// Finite algebra of Boolean similarity type, given by explicit operation
/// tables. Immutable after construction; safe to share across threads.
struct AlgebraTable {
    std::size_t n = 0;
    std::vector<ElementId> meet_table;  // n*n, row-major
    std::vector<ElementId> join_table;  // n*n
    std::vector<ElementId> neg_table;   // n
    ElementId top_id = 0;
    ElementId bottom_id = 0;
    std::vector<std::string> labels;  // always n entries

    std::size_t size() const { return n; }
    ElementId meet(ElementId x, ElementId y) const { return meet_table[x * n + y]; }
    ElementId join(ElementId x, ElementId y) const { return join_table[x * n + y]; }
    ElementId neg(ElementId x) const { return neg_table[x]; }
    ElementId top() const { return top_id; }
    ElementId bottom() const { return bottom_id; }
    const std::string& label(ElementId x) const { return labels[x]; }
    std::optional<ElementId> find(const std::string& name) const;
};

/// Builds a table with default labels e0..e{n-1} where none are given, and
/// throws Error unless every entry is in range and the tables are total.
AlgebraTable make_table(std::size_t n, std::vector<ElementId> meet,
                        std::vector<ElementId> join, std::vector<ElementId> neg,
                        ElementId top, ElementId bottom,
                        std::vector<std::string> labels = {});

struct AxiomViolation {
    std::string axiom;                 // rb1..rb5, ba1..ba4, f1..f3, fD, ...
    std::vector<std::string> witness;  // offending element/world names
    std::string detail;
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;  // storage capped; passed reflects the full scan
};

struct CheckOptions {
    std::size_t max_violations = 16;  // per axiom id
    std::size_t size_cap = 0;         // 0 = unlimited; otherwise throws above it
};

/// Decides rb1..rb5 by exhaustive scan over all element tuples.
AxiomReport check_rba(const AlgebraTable& alg, const CheckOptions& opts = {});

/// Decides ba1..ba4 the same way.
AxiomReport check_boolean(const AlgebraTable& alg, const CheckOptions& opts = {});

inline ElementId relative_top(const AlgebraTable& a, ElementId x) {
    return a.join(x, a.neg(x));
}
inline ElementId relative_bottom(const AlgebraTable& a, ElementId x) {
    return a.meet(x, a.neg(x));
}

/// x <= y, defined through the meet alone: x ∧ y = x. The join-based
/// condition is intentionally not used; see order_disagreements.
inline bool leq(const AlgebraTable& a, ElementId x, ElementId y) {
    return a.meet(x, y) == x;
}

/// All elements sharing x's relative top.
std::vector<ElementId> domain_of(const AlgebraTable& a, ElementId x);

struct DomainLattice {
    std::vector<ElementId> tops;  // canonical (index) order, deduplicated
    bool meet_closed = true;
    ElementId witness_x = 0, witness_y = 0;  // meaningful when !meet_closed
};

/// The set of relative tops, with a meet-closure check.
DomainLattice domain_lattice(const AlgebraTable& a);

struct LocalBoolean {
    AlgebraTable table;
    std::vector<ElementId> elements;  // local index -> parent element
};

/// Restricts the algebra to domain_of(x), with top 1_x and bottom 0_x.
/// Throws Error when the result fails ba1..ba4 (the input was not an RBA).
LocalBoolean extract_local_boolean(const AlgebraTable& a, ElementId x);

/// h_x(y) = y ∧ 1_x. Requires 1_y >= 1_x; throws Error otherwise.
ElementId project(const AlgebraTable& a, ElementId x, ElementId y);

/// Ordered pairs (x, y) where "x ∧ y = x" and "x ∨ y = y" disagree.
std::vector<std::pair<ElementId, ElementId>> order_disagreements(const AlgebraTable& a);

}  // namespace rba

#endif
