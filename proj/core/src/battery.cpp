#include "rba/battery.hpp"

#include "rba/error.hpp"

namespace rba {

FormulaArena FormulaArena::build(std::vector<std::string> props,
                                 std::size_t max_connectives, bool include_modal,
                                 std::size_t max_modal_depth) {
    if (props.size() > 8) throw Error("arena supports at most 8 propositions");
    FormulaArena ar;
    ar.props = std::move(props);
    auto& nodes = ar.nodes;
    for (std::size_t i = 0; i < ar.props.size(); ++i)
        nodes.push_back({Op::Prop, 0, 0, static_cast<std::uint8_t>(1u << i),
                         static_cast<std::int32_t>(i), -1});
    nodes.push_back({Op::Top, 0, 0, 0, -1, -1});
    ar.level_begin.assign(max_connectives + 2, 0);
    ar.level_begin[0] = 0;
    ar.level_begin[1] = nodes.size();
    for (std::size_t c = 1; c <= max_connectives; ++c) {
        const std::size_t prev_begin = ar.level_begin[c - 1];
        const std::size_t prev_end = ar.level_begin[c];
        auto push_unary = [&](Op op, std::size_t child) {
            const Node& ch = nodes[child];
            std::uint8_t d = ch.depth;
            if (op != Op::Neg) {
                if (d + 1u > max_modal_depth) return;
                ++d;
            }
            nodes.push_back({op, d, static_cast<std::uint8_t>(c), ch.prop_mask,
                             static_cast<std::int32_t>(child), -1});
        };
        for (std::size_t i = prev_begin; i < prev_end; ++i) push_unary(Op::Neg, i);
        if (include_modal) {
            for (std::size_t i = prev_begin; i < prev_end; ++i) push_unary(Op::Aware, i);
            for (std::size_t i = prev_begin; i < prev_end; ++i) push_unary(Op::Know, i);
        }
        for (std::size_t ca = 0; ca <= c - 1; ++ca) {
            std::size_t cb = c - 1 - ca;
            for (std::size_t i = ar.level_begin[ca];
                 i < ar.level_begin[ca + 1]; ++i)
                for (std::size_t j = ar.level_begin[cb];
                     j < ar.level_begin[cb + 1]; ++j) {
                    const Node &na = nodes[i], &nb = nodes[j];
                    nodes.push_back({Op::And,
                                     std::max(na.depth, nb.depth),
                                     static_cast<std::uint8_t>(c),
                                     static_cast<std::uint8_t>(na.prop_mask | nb.prop_mask),
                                     static_cast<std::int32_t>(i),
                                     static_cast<std::int32_t>(j)});
                }
        }
        ar.level_begin[c + 1] = nodes.size();
    }
    return ar;
}

Formula FormulaArena::to_formula(std::size_t index) const {
    const Node& n = nodes[index];
    switch (n.op) {
        case Op::Prop: return prop(props[static_cast<std::size_t>(n.a)]);
        case Op::Top: return top();
        case Op::Neg: return neg(to_formula(static_cast<std::size_t>(n.a)));
        case Op::Aware: return aware(to_formula(static_cast<std::size_t>(n.a)));
        case Op::Know: return know(to_formula(static_cast<std::size_t>(n.a)));
        case Op::And:
            return conj(to_formula(static_cast<std::size_t>(n.a)),
                        to_formula(static_cast<std::size_t>(n.b)));
    }
    throw Error("corrupt arena node");
}

void eval_all(const FormulaArena& arena, const AlgebraTable& alg,
              const std::vector<ElementId>* fk, const std::vector<ElementId>& values,
              std::vector<ElementId>& out) {
    if (values.size() != arena.props.size())
        throw Error("assignment does not match the arena propositions");
    out.resize(arena.size());
    const std::size_t n = arena.size();
    for (std::size_t i = 0; i < n; ++i) {
        const FormulaArena::Node& nd = arena.nodes[i];
        switch (nd.op) {
            case Op::Prop: out[i] = values[static_cast<std::size_t>(nd.a)]; break;
            case Op::Top: out[i] = alg.top(); break;
            case Op::Neg: out[i] = alg.neg(out[static_cast<std::size_t>(nd.a)]); break;
            case Op::And:
                out[i] = alg.meet(out[static_cast<std::size_t>(nd.a)],
                                  out[static_cast<std::size_t>(nd.b)]);
                break;
            case Op::Know: {
                if (!fk) throw Error("modal arena evaluated over a bare algebra");
                out[i] = (*fk)[out[static_cast<std::size_t>(nd.a)]];
                break;
            }
            case Op::Aware: {
                if (!fk) throw Error("modal arena evaluated over a bare algebra");
                ElementId v = out[static_cast<std::size_t>(nd.a)];
                out[i] = (*fk)[alg.join(v, alg.neg(v))];
                break;
            }
        }
    }
}

void ext_all(const FormulaArena& arena, const AwarenessModel& m,
             std::vector<Extension>& out) {
    std::vector<std::size_t> prop_slot(arena.props.size());
    for (std::size_t i = 0; i < arena.props.size(); ++i) {
        auto s = m.prop_index(arena.props[i]);
        if (!s) throw Error("model lacks proposition '" + arena.props[i] + "'");
        prop_slot[i] = *s;
    }
    const WorldMask all = WorldMask::full(m.frame.size());
    out.resize(arena.size());
    for (std::size_t i = 0; i < arena.size(); ++i) {
        const FormulaArena::Node& nd = arena.nodes[i];
        switch (nd.op) {
            case Op::Prop: {
                std::size_t p = prop_slot[static_cast<std::size_t>(nd.a)];
                out[i] = {m.val[p], m.lang[p]};
                break;
            }
            case Op::Top: out[i] = {all, all}; break;
            case Op::Neg: out[i] = compose_neg(out[static_cast<std::size_t>(nd.a)]); break;
            case Op::And:
                out[i] = compose_and(out[static_cast<std::size_t>(nd.a)],
                                     out[static_cast<std::size_t>(nd.b)]);
                break;
            case Op::Know:
                out[i] = compose_know(m.frame, out[static_cast<std::size_t>(nd.a)]);
                break;
            case Op::Aware:
                out[i] = compose_aware(m.frame, out[static_cast<std::size_t>(nd.a)]);
                break;
        }
    }
}

void taut_masks(const FormulaArena& arena, std::vector<std::uint32_t>& out) {
    const std::size_t k = arena.props.size();
    const std::uint32_t assignments = 1u << k;
    const std::uint32_t fullmask =
        assignments >= 32 ? ~0u : (1u << assignments) - 1u;
    out.resize(arena.size());
    for (std::size_t i = 0; i < arena.size(); ++i) {
        const FormulaArena::Node& nd = arena.nodes[i];
        switch (nd.op) {
            case Op::Prop: {
                std::uint32_t mask = 0;
                for (std::uint32_t bits = 0; bits < assignments; ++bits)
                    if ((bits >> static_cast<std::size_t>(nd.a)) & 1) mask |= 1u << bits;
                out[i] = mask;
                break;
            }
            case Op::Top: out[i] = fullmask; break;
            case Op::Neg:
                out[i] = fullmask & ~out[static_cast<std::size_t>(nd.a)];
                break;
            case Op::And:
                out[i] = out[static_cast<std::size_t>(nd.a)] &
                         out[static_cast<std::size_t>(nd.b)];
                break;
            default:
                throw Error("taut_masks requires a modal-free arena");
        }
    }
}

}  // namespace rba
