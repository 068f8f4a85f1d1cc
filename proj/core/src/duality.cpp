#include "rba/duality.hpp"

#include <algorithm>

#include "rba/error.hpp"

namespace rba {

namespace {

constexpr std::size_t kMismatchCap = 32;

std::uint32_t to_u32(const WorldMask& m, std::size_t n) {
    if (n > 31) throw Error("model too large for a subset-pair conversion");
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (m.test(i)) out |= 1u << i;
    return out;
}

}  // namespace

ConcreteMrba model_to_mrba(const AwarenessModel& m, std::size_t element_cap) {
    AxiomReport ok = check_model(m);
    if (!ok.passed)
        throw Error("model_to_mrba: model fails " + ok.violations.front().axiom);
    ConcreteMrba out;
    out.universe = make_universe(m.frame.worlds, 31);
    out.mrba.algebra = materialize(out.universe, element_cap);
    const std::size_t n = out.mrba.algebra.size();
    const std::size_t w = m.frame.size();
    out.mrba.fk.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        SubsetPair p = pair_of_index(out.universe, i);
        std::uint32_t truth = 0;
        for (std::size_t ww = 0; ww < w; ++ww) {
            WorldMask succ = m.frame.access[ww];
            bool inside = true;
            for (std::size_t v = 0; v < w; ++v)
                if (succ.test(v) && !((p.truth >> v) & 1)) {
                    inside = false;
                    break;
                }
            if (inside) truth |= 1u << ww;
        }
        out.mrba.fk[i] =
            static_cast<ElementId>(index_of_pair(out.universe, {truth & p.domain, p.domain}));
    }
    for (std::size_t pi = 0; pi < m.props.size(); ++pi) {
        SubsetPair hp{to_u32(m.val[pi], w), to_u32(m.lang[pi], w)};
        out.assign[m.props[pi]] =
            static_cast<ElementId>(index_of_pair(out.universe, hp));
    }
    return out;
}

namespace {

struct DualParts {
    FilterFamily family;
    std::vector<WorldMask> contains;  // contains[e].test(i) iff e ∈ u_i
    std::vector<WorldMask> access;    // R over family indices
    std::vector<WorldMask> above;
};

DualParts dual_parts(const Mrba& m) {
    DualParts d;
    d.family = enumerate_domain_ultra(m.algebra);
    const std::size_t k = d.family.filters.size();
    if (k > kMaxWorlds) throw Error("domain-ultra family exceeds the world cap");
    const std::size_t n = m.algebra.size();
    d.contains.assign(n, {});
    for (std::size_t i = 0; i < k; ++i)
        for (ElementId e : d.family.filters[i].members) d.contains[e].set(i);

    std::vector<std::vector<ElementId>> pi2(k);
    for (std::size_t i = 0; i < k; ++i)
        pi2[i] = project_domains(m.algebra, d.family.filters[i]);
    d.above.assign(k, {});
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            // u_j >= u_i iff π₂(u_j) ⊇ π₂(u_i)
            bool super = std::includes(pi2[j].begin(), pi2[j].end(),
                                       pi2[i].begin(), pi2[i].end());
            if (super) d.above[i].set(j);
        }
    d.access.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
        // the elements forced into any successor
        std::vector<ElementId> need;
        for (ElementId x = 0; x < n; ++x)
            if (d.family.filters[i].contains(m.fk[x])) need.push_back(x);
        for (std::size_t j = 0; j < k; ++j) {
            bool ok = true;
            for (ElementId x : need)
                if (!d.family.filters[j].contains(x)) {
                    ok = false;
                    break;
                }
            if (ok) d.access[i].set(j);
        }
    }
    return d;
}

}  // namespace

AwarenessModel mrba_to_model(const Mrba& m, const Assignment& h) {
    DualParts d = dual_parts(m);
    const std::size_t k = d.family.filters.size();
    AwarenessFrame frame;
    frame.worlds.resize(k);
    for (std::size_t i = 0; i < k; ++i) frame.worlds[i] = "u" + std::to_string(i);
    frame.above = std::move(d.above);
    frame.access = std::move(d.access);

    std::vector<std::string> props;
    std::vector<WorldMask> lang, val;
    for (const auto& [name, e] : h) {
        if (e >= m.algebra.size()) throw Error("assignment element out of range");
        props.push_back(name);
        val.push_back(d.contains[e]);
        lang.push_back(d.contains[relative_top(m.algebra, e)]);
    }
    return make_model(std::move(frame), std::move(props), std::move(lang), std::move(val));
}

bool check_successor_containment(const Mrba& m, ElementId x) {
    DualParts d = dual_parts(m);
    const std::size_t k = d.family.filters.size();
    for (std::size_t i = 0; i < k; ++i) {
        bool all_succ_contain = d.access[i].subset_of(d.contains[x]);
        bool knows = d.family.filters[i].contains(m.fk[x]);
        if (all_succ_contain != knows) return false;
    }
    return true;
}

namespace {

DualityReport run_prop1(const AwarenessModel& m, const ConcreteMrba& cm,
                        const FormulaArena& arena) {
    DualityReport rep;
    rep.direction = "model->mrba";
    std::vector<ElementId> values(arena.props.size());
    for (std::size_t i = 0; i < arena.props.size(); ++i) {
        auto it = cm.assign.find(arena.props[i]);
        if (it == cm.assign.end()) throw Error("assignment lacks '" + arena.props[i] + "'");
        values[i] = it->second;
    }
    std::vector<ElementId> vals;
    eval_all(arena, cm.mrba.algebra, &cm.mrba.fk, values, vals);
    std::vector<Extension> exts;
    ext_all(arena, m, exts);
    const std::size_t w = m.frame.size();
    for (std::size_t i = 0; i < arena.size(); ++i) {
        SubsetPair lhs = pair_of_index(cm.universe, vals[i]);
        SubsetPair rhs{to_u32(exts[i].truth, w), to_u32(exts[i].domain, w)};
        ++rep.checked;
        if (lhs != rhs && rep.mismatches.size() < kMismatchCap)
            rep.mismatches.push_back({to_string(arena.to_formula(i)),
                                      format_pair(cm.universe, lhs),
                                      format_pair(cm.universe, rhs)});
    }
    return rep;
}

std::string mask_text(const WorldMask& m, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (m.test(i)) {
            if (!first) out += ",";
            out += names[i];
            first = false;
        }
    return out + "}";
}

}  // namespace

DualityReport verify_prop1(const AwarenessModel& m, const FormulaArena& arena) {
    ConcreteMrba cm = model_to_mrba(m);
    return run_prop1(m, cm, arena);
}

DualityReport verify_prop1(const AwarenessModel& m, const std::vector<Formula>& battery) {
    ConcreteMrba cm = model_to_mrba(m);
    DualityReport rep;
    rep.direction = "model->mrba";
    const std::size_t w = m.frame.size();
    for (const Formula& f : battery) {
        ElementId v = evaluate(cm.mrba, cm.assign, f);
        SubsetPair lhs = pair_of_index(cm.universe, v);
        Extension e = extension(m, f);
        SubsetPair rhs{to_u32(e.truth, w), to_u32(e.domain, w)};
        ++rep.checked;
        if (lhs != rhs && rep.mismatches.size() < kMismatchCap)
            rep.mismatches.push_back({to_string(f), format_pair(cm.universe, lhs),
                                      format_pair(cm.universe, rhs)});
    }
    return rep;
}

namespace {

DualityReport run_prop2(const Mrba& m, const Assignment& h, const AwarenessModel& model,
                        const DualParts& d, const FormulaArena& arena) {
    DualityReport rep;
    rep.direction = "mrba->model";
    std::vector<ElementId> values(arena.props.size());
    for (std::size_t i = 0; i < arena.props.size(); ++i) {
        auto it = h.find(arena.props[i]);
        if (it == h.end()) throw Error("assignment lacks '" + arena.props[i] + "'");
        values[i] = it->second;
    }
    std::vector<ElementId> vals;
    eval_all(arena, m.algebra, &m.fk, values, vals);
    std::vector<Extension> exts;
    ext_all(arena, model, exts);
    for (std::size_t i = 0; i < arena.size(); ++i) {
        WorldMask lhs_truth = d.contains[vals[i]];
        WorldMask lhs_domain = d.contains[relative_top(m.algebra, vals[i])];
        ++rep.checked;
        if ((lhs_truth != exts[i].truth || lhs_domain != exts[i].domain) &&
            rep.mismatches.size() < kMismatchCap)
            rep.mismatches.push_back(
                {to_string(arena.to_formula(i)),
                 mask_text(lhs_truth, model.frame.worlds) + "/" +
                     mask_text(lhs_domain, model.frame.worlds),
                 mask_text(exts[i].truth, model.frame.worlds) + "/" +
                     mask_text(exts[i].domain, model.frame.worlds)});
    }
    return rep;
}

}  // namespace

DualityReport verify_prop2(const Mrba& m, const Assignment& h, const FormulaArena& arena) {
    DualParts d = dual_parts(m);
    AwarenessModel model = mrba_to_model(m, h);
    return run_prop2(m, h, model, d, arena);
}

DualityReport verify_prop2(const Mrba& m, const Assignment& h,
                           const std::vector<Formula>& battery) {
    DualParts d = dual_parts(m);
    AwarenessModel model = mrba_to_model(m, h);
    DualityReport rep;
    rep.direction = "mrba->model";
    for (const Formula& f : battery) {
        ElementId v = evaluate(m, h, f);
        WorldMask lhs_truth = d.contains[v];
        WorldMask lhs_domain = d.contains[relative_top(m.algebra, v)];
        Extension e = extension(model, f);
        ++rep.checked;
        if ((lhs_truth != e.truth || lhs_domain != e.domain) &&
            rep.mismatches.size() < kMismatchCap)
            rep.mismatches.push_back({to_string(f),
                                      mask_text(lhs_truth, model.frame.worlds),
                                      mask_text(e.truth, model.frame.worlds)});
    }
    return rep;
}

}  // namespace rba
