#include "rba/filters.hpp"

#include <algorithm>

#include "rba/error.hpp"

namespace rba {

namespace {

std::vector<bool> member_mask(const AlgebraTable& a, const Filter& s) {
    std::vector<bool> m(a.size(), false);
    for (ElementId x : s.members) {
        if (x >= a.size()) throw Error("filter member out of range");
        m[x] = true;
    }
    return m;
}

Filter from_mask(const std::vector<bool>& m) {
    Filter f;
    for (ElementId x = 0; x < m.size(); ++x)
        if (m[x]) f.members.push_back(x);
    return f;
}

std::vector<bool> zero_forms(const AlgebraTable& a) {
    std::vector<bool> z(a.size(), false);
    for (ElementId x = 0; x < a.size(); ++x) z[relative_bottom(a, x)] = true;
    return z;
}

}  // namespace

bool Filter::contains(ElementId x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

Filter make_filter(std::vector<ElementId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Filter{std::move(members)};
}

bool is_filter(const AlgebraTable& a, const Filter& s) {
    std::vector<bool> m = member_mask(a, s);
    if (!m[a.top()]) return false;
    for (ElementId x : s.members) {
        for (ElementId y = 0; y < a.size(); ++y)
            if (leq(a, x, y) && !m[y]) return false;
        for (ElementId y : s.members)
            if (!m[a.meet(x, y)]) return false;
    }
    return true;
}

bool is_strongly_proper(const AlgebraTable& a, const Filter& s) {
    std::vector<bool> z = zero_forms(a);
    for (ElementId x : s.members)
        if (z[x]) return false;
    return true;
}

Filter principal_upset(const AlgebraTable& a, ElementId x) {
    Filter f;
    for (ElementId y = 0; y < a.size(); ++y)
        if (leq(a, x, y)) f.members.push_back(y);
    return f;
}

std::vector<Filter> enumerate_filters(const AlgebraTable& a) {
    // In a finite RBA every filter is the upset of its total meet, so the
    // principal upsets exhaust the filters.
    std::vector<Filter> out;
    out.reserve(a.size());
    for (ElementId x = 0; x < a.size(); ++x) out.push_back(principal_upset(a, x));
    return out;
}

bool is_ultrafilter(const AlgebraTable& a, const Filter& s) {
    if (!is_filter(a, s) || !is_strongly_proper(a, s)) return false;
    std::vector<bool> m = member_mask(a, s);
    for (const Filter& v : enumerate_filters(a)) {
        if (!is_strongly_proper(a, v)) continue;
        bool superset = true, strict = false;
        for (ElementId x = 0; x < a.size(); ++x) {
            bool in_s = m[x], in_v = v.contains(x);
            if (in_s && !in_v) { superset = false; break; }
            if (in_v && !in_s) strict = true;
        }
        if (superset && strict) return false;
    }
    return true;
}

std::vector<ElementId> project_domains(const AlgebraTable& a, const Filter& u) {
    std::vector<ElementId> out;
    for (ElementId x : u.members)
        if (relative_top(a, x) == x) out.push_back(x);
    return out;
}

std::vector<ElementId> project_local(const AlgebraTable& a, const Filter& u, ElementId x) {
    std::vector<ElementId> out;
    ElementId tx = relative_top(a, x);
    for (ElementId y : u.members)
        if (relative_top(a, y) == tx) out.push_back(y);
    return out;
}

namespace {

// trace of u on the domain of t is an ultrafilter of that local Boolean
// algebra: exactly one of z, ¬z for every z in the domain
bool local_trace_is_ultra(const AlgebraTable& a, const std::vector<bool>& m, ElementId t) {
    for (ElementId z = 0; z < a.size(); ++z) {
        if (relative_top(a, z) != t) continue;
        if (m[z] == m[a.neg(z)]) return false;
    }
    return true;
}

bool in_domain_ultra_family(const AlgebraTable& a, const std::vector<bool>& m) {
    for (ElementId t = 0; t < a.size(); ++t)
        if (m[t] && relative_top(a, t) == t && !local_trace_is_ultra(a, m, t))
            return false;
    return true;
}

}  // namespace

FilterFamily enumerate_domain_ultra(const AlgebraTable& a) {
    FilterFamily fam;
    fam.kind = FilterKind::DomainUltra;
    for (const Filter& u : enumerate_filters(a)) {
        std::vector<bool> m = member_mask(a, u);
        if (in_domain_ultra_family(a, m)) fam.filters.push_back(u);
    }
    return fam;
}

namespace {

std::vector<bool> closure_mask(const AlgebraTable& a, const std::vector<bool>& f,
                               ElementId c) {
    std::vector<bool> out(a.size(), false);
    for (ElementId z = 0; z < a.size(); ++z) {
        if (!leq(a, c, z)) continue;
        for (ElementId y = 0; y < a.size(); ++y)
            if (f[y]) out[a.meet(z, y)] = true;
    }
    return out;
}

bool same_domains(const AlgebraTable& a, const std::vector<bool>& f,
                  const std::vector<bool>& g) {
    for (ElementId t = 0; t < a.size(); ++t)
        if (relative_top(a, t) == t && f[t] != g[t]) return false;
    return true;
}

}  // namespace

Filter one_step_closure(const AlgebraTable& a, const Filter& f, ElementId x) {
    if (x >= a.size()) throw Error("element out of range");
    return from_mask(closure_mask(a, member_mask(a, f), x));
}

Filter extend_filter(const AlgebraTable& a, const Filter& f, ElementId avoid) {
    if (!is_filter(a, f)) throw Error("extend_filter: input is not a filter");
    if (!is_strongly_proper(a, f))
        throw Error("extend_filter: input filter is not strongly proper");
    if (f.contains(avoid))
        throw Error("extend_filter: '" + a.label(avoid) + "' is already in the filter");
    std::vector<bool> zeros = zero_forms(a);
    std::vector<bool> cur = member_mask(a, f);
    bool changed = true;
    while (changed) {
        changed = false;
        for (ElementId c = 0; c < a.size(); ++c) {
            if (cur[c]) continue;
            std::vector<bool> next = closure_mask(a, cur, c);
            if (next[avoid]) continue;
            bool sp = true;
            for (ElementId x = 0; x < a.size(); ++x)
                if (next[x] && zeros[x]) { sp = false; break; }
            if (!sp || !same_domains(a, cur, next)) continue;
            cur = std::move(next);
            changed = true;
        }
    }
    Filter u = from_mask(cur);
    if (!is_filter(a, u) || !in_domain_ultra_family(a, cur))
        throw Error("extend_filter: greedy extension failed to reach the "
                    "domain-ultra family; the input algebra is not an RBA");
    return u;
}

StoneEmbedding stone_embed(const AlgebraTable& a) {
    StoneEmbedding se;
    se.family = enumerate_domain_ultra(a);
    const std::size_t k = se.family.filters.size();
    if (k > 31) throw Error("stone_embed: more than 31 points, bit width exceeded");
    std::vector<std::string> names(k);
    for (std::size_t i = 0; i < k; ++i) names[i] = "u" + std::to_string(i);
    se.universe = make_universe(std::move(names), 31);

    se.image.resize(a.size());
    for (ElementId x = 0; x < a.size(); ++x) {
        std::uint32_t truth = 0, domain = 0;
        ElementId tx = relative_top(a, x);
        for (std::size_t i = 0; i < k; ++i) {
            if (se.family.filters[i].contains(x)) truth |= 1u << i;
            if (se.family.filters[i].contains(tx)) domain |= 1u << i;
        }
        se.image[x] = {truth, domain};
    }

    AxiomReport& rep = se.verification;
    auto fail = [&](const std::string& what, std::initializer_list<ElementId> ws) {
        rep.passed = false;
        if (rep.violations.size() >= 64) return;
        AxiomViolation v;
        v.axiom = "embedding";
        for (ElementId e : ws) v.witness.push_back(a.label(e));
        v.detail = what;
        rep.violations.push_back(std::move(v));
    };
    for (ElementId x = 0; x < a.size(); ++x) {
        if (se.image[x].truth & ~se.image[x].domain) fail("image pair violates A ⊆ B", {x});
        for (ElementId y = x + 1; y < a.size(); ++y)
            if (se.image[x] == se.image[y]) fail("not injective", {x, y});
    }
    const std::uint32_t full = se.universe.full_mask();
    if (se.image[a.top()] != SubsetPair{full, full}) fail("top does not map to (F,F)", {a.top()});
    for (ElementId x = 0; x < a.size(); ++x) {
        if (se.image[a.neg(x)] != c_neg(se.image[x])) fail("negation not preserved", {x});
        for (ElementId y = 0; y < a.size(); ++y) {
            if (se.image[a.meet(x, y)] != c_meet(se.image[x], se.image[y]))
                fail("meet not preserved", {x, y});
            if (se.image[a.join(x, y)] != c_join(se.image[x], se.image[y]))
                fail("join not preserved", {x, y});
        }
    }
    return se;
}

}  // namespace rba
