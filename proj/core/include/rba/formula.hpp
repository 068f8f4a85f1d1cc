#ifndef RBA_FORMULA_HPP
#define RBA_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rba {

enum class Op : std::uint8_t { Prop, Top, Neg, And, Aware, Know };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

/// Immutable formula tree in the core connectives. The surface forms
/// 0, v, ->, <-> are expanded at construction time, so two texts with the
/// same expansion parse to structurally equal trees.
struct FormulaNode {
    Op op;
    std::string name;  // Op::Prop only
    Formula lhs, rhs;  // rhs used by And only
};

Formula prop(const std::string& name);
Formula top();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula aware(Formula f);
Formula know(Formula f);

// surface abbreviations, expanded structurally
inline Formula bottom() { return neg(top()); }
inline Formula disj(Formula a, Formula b) { return neg(conj(neg(a), neg(b))); }
inline Formula implies(Formula a, Formula b) { return disj(neg(a), b); }
inline Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

bool structurally_equal(const Formula& a, const Formula& b);

std::set<std::string> props_of(const Formula& f);
std::size_t modal_depth(const Formula& f);
std::size_t connective_count(const Formula& f);
bool is_modal_free(const Formula& f);

/// Grammar: `~ & | -> <-> A K 1 0`, precedence ~/A/K > & > | > -> > <->,
/// right-associative ->. A and K are reserved; they cannot name propositions.
Formula parse(const std::string& text);

/// Core-form text (plus `0` for ~1); parse(to_string(f)) == f structurally.
std::string to_string(const Formula& f);

/// Truth-table evaluation over all assignments to the formula's propositions.
/// Throws Error when the formula contains a modality.
bool classical_tautology(const Formula& f);

/// All expanded formulas over `props` with at most max_connectives
/// connectives (and modal depth at most max_modal_depth when modal operators
/// are included), in a canonical size-then-shape order.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& props,
                                        std::size_t max_connectives,
                                        bool include_modal,
                                        std::size_t max_modal_depth = SIZE_MAX);

}  // namespace rba

#endif
