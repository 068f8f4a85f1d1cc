#ifndef RBA_MODAL_HPP
#define RBA_MODAL_HPP

#include <map>
#include <string>
#include <vector>

#include "rba/algebra.hpp"
#include "rba/formula.hpp"

namespace rba {

/// Algebra plus a knowledge operator table. The operator must preserve each
/// domain (f1), fix the top (f2), distribute over meet (f3), and fix every
/// relative bottom (fD).
struct Mrba {
    AlgebraTable algebra;
    std::vector<ElementId> fk;

    ElementId know_of(ElementId x) const { return fk[x]; }
};

struct MrbaCheckOptions {
    bool check_fD = true;  // the weaker operator class is admitted with --no-fD
    std::size_t max_violations = 16;
};

AxiomReport check_mrba(const Mrba& m, const MrbaCheckOptions& opts = {});

/// f^A(x) = f^K(1_x): derived awareness.
ElementId f_awareness(const Mrba& m, ElementId x);

/// Total map from proposition names to elements.
using Assignment = std::map<std::string, ElementId>;

/// h⁺(φ): structural recursion through the algebra operations and the
/// operator table. Throws Error on a proposition missing from h.
ElementId evaluate(const Mrba& m, const Assignment& h, const Formula& f);

/// Modal-free evaluation on a bare algebra; throws Error on A/K.
ElementId evaluate(const AlgebraTable& a, const Assignment& h, const Formula& f);

/// Valid when the value is its own relative top.
bool algebra_valid(const Mrba& m, const Assignment& h, const Formula& f);
bool algebra_valid(const AlgebraTable& a, const Assignment& h, const Formula& f);

/// Quantifies the assignment over all |RB|^|P(φ)| choices. Exponential;
/// refuses more than max_props propositions.
bool valid_all_assignments(const Mrba& m, const Formula& f, std::size_t max_props = 2);
bool valid_all_assignments(const AlgebraTable& a, const Formula& f,
                           std::size_t max_props = 2);

}  // namespace rba

#endif
