#include "rba/modal.hpp"

#include "rba/error.hpp"

namespace rba {

AxiomReport check_mrba(const Mrba& m, const MrbaCheckOptions& opts) {
    const AlgebraTable& a = m.algebra;
    if (m.fk.size() != a.size()) throw Error("operator table is not total");
    for (ElementId v : m.fk)
        if (v >= a.size()) throw Error("operator table entry out of range");
    AxiomReport rep;
    auto add = [&](const char* axiom, std::initializer_list<ElementId> ws,
                   const char* detail) {
        rep.passed = false;
        std::size_t count = 0;
        for (const auto& v : rep.violations)
            if (v.axiom == axiom) ++count;
        if (count >= opts.max_violations) return;
        AxiomViolation v;
        v.axiom = axiom;
        for (ElementId e : ws) v.witness.push_back(a.label(e));
        v.detail = detail;
        rep.violations.push_back(std::move(v));
    };
    for (ElementId x = 0; x < a.size(); ++x) {
        if (relative_top(a, m.fk[x]) != relative_top(a, x))
            add("f1", {x}, "operator leaves the domain");
        if (opts.check_fD) {
            ElementId bx = relative_bottom(a, x);
            if (m.fk[bx] != bx) add("fD", {x}, "relative bottom is not fixed");
        }
    }
    if (m.fk[a.top()] != a.top()) add("f2", {a.top()}, "top is not fixed");
    for (ElementId x = 0; x < a.size(); ++x)
        for (ElementId y = 0; y < a.size(); ++y)
            if (m.fk[a.meet(x, y)] != a.meet(m.fk[x], m.fk[y]))
                add("f3", {x, y}, "operator does not distribute over meet");
    return rep;
}

ElementId f_awareness(const Mrba& m, ElementId x) {
    return m.fk[relative_top(m.algebra, x)];
}

namespace {

ElementId eval_rec(const AlgebraTable& a, const std::vector<ElementId>* fk,
                   const Assignment& h, const Formula& f) {
    switch (f->op) {
        case Op::Top: return a.top();
        case Op::Prop: {
            auto it = h.find(f->name);
            if (it == h.end()) throw Error("unbound proposition '" + f->name + "'");
            return it->second;
        }
        case Op::Neg: return a.neg(eval_rec(a, fk, h, f->lhs));
        case Op::And:
            return a.meet(eval_rec(a, fk, h, f->lhs), eval_rec(a, fk, h, f->rhs));
        case Op::Know: {
            if (!fk) throw Error("modal formula evaluated over a bare algebra");
            return (*fk)[eval_rec(a, fk, h, f->lhs)];
        }
        case Op::Aware: {
            if (!fk) throw Error("modal formula evaluated over a bare algebra");
            return (*fk)[relative_top(a, eval_rec(a, fk, h, f->lhs))];
        }
    }
    throw Error("corrupt formula");
}

template <typename EvalValid>
bool sweep_assignments(const AlgebraTable& a, const Formula& f, std::size_t max_props,
                       EvalValid&& check) {
    auto names = props_of(f);
    if (names.size() > max_props)
        throw Error("formula has " + std::to_string(names.size()) +
                    " propositions; the assignment sweep cap is " +
                    std::to_string(max_props));
    std::vector<std::string> props(names.begin(), names.end());
    Assignment h;
    std::vector<ElementId> choice(props.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < props.size(); ++i) h[props[i]] = choice[i];
        if (!check(h)) return false;
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < a.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) return true;
    }
}

}  // namespace

ElementId evaluate(const Mrba& m, const Assignment& h, const Formula& f) {
    return eval_rec(m.algebra, &m.fk, h, f);
}

ElementId evaluate(const AlgebraTable& a, const Assignment& h, const Formula& f) {
    return eval_rec(a, nullptr, h, f);
}

bool algebra_valid(const Mrba& m, const Assignment& h, const Formula& f) {
    ElementId v = evaluate(m, h, f);
    return v == relative_top(m.algebra, v);
}

bool algebra_valid(const AlgebraTable& a, const Assignment& h, const Formula& f) {
    ElementId v = evaluate(a, h, f);
    return v == relative_top(a, v);
}

bool valid_all_assignments(const Mrba& m, const Formula& f, std::size_t max_props) {
    return sweep_assignments(m.algebra, f, max_props,
                             [&](const Assignment& h) { return algebra_valid(m, h, f); });
}

bool valid_all_assignments(const AlgebraTable& a, const Formula& f,
                           std::size_t max_props) {
    return sweep_assignments(a, f, max_props,
                             [&](const Assignment& h) { return algebra_valid(a, h, f); });
}

}  // namespace rba
