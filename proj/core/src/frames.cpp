#include "rba/frames.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "rba/error.hpp"

namespace rba {

WorldMask WorldMask::full(std::size_t n) {
    WorldMask m;
    if (n > kMaxWorlds) throw Error("more than 128 worlds");
    if (n >= 64) {
        m.lo = ~std::uint64_t(0);
        m.hi = n == 128 ? ~std::uint64_t(0) : (std::uint64_t(1) << (n - 64)) - 1;
    } else {
        m.lo = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
    }
    return m;
}

std::size_t WorldMask::count() const {
    return std::popcount(lo) + std::popcount(hi);
}

std::optional<std::size_t> AwarenessFrame::find(const std::string& name) const {
    for (std::size_t i = 0; i < worlds.size(); ++i)
        if (worlds[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> AwarenessModel::prop_index(const std::string& name) const {
    for (std::size_t i = 0; i < props.size(); ++i)
        if (props[i] == name) return i;
    return std::nullopt;
}

AwarenessFrame make_frame(std::vector<std::string> worlds,
                          const std::vector<std::pair<std::string, std::string>>& geq,
                          const std::vector<std::pair<std::string, std::string>>& access) {
    if (worlds.size() > kMaxWorlds) throw Error("more than 128 worlds");
    AwarenessFrame f;
    f.worlds = std::move(worlds);
    const std::size_t n = f.worlds.size();
    auto idx = [&](const std::string& w) {
        auto i = f.find(w);
        if (!i) throw Error("unknown world '" + w + "'");
        return *i;
    };
    // geq pairs read as (w, w'): w >= w'. above[v] collects the worlds >= v.
    std::vector<WorldMask> above(n), acc(n);
    for (std::size_t w = 0; w < n; ++w) above[w].set(w);
    for (const auto& [a, b] : geq) above[idx(b)].set(idx(a));
    // transitive closure
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                if (above[v].test(w) && !above[w].subset_of(above[v])) {
                    above[v] = above[v] | above[w];
                    changed = true;
                }
    }
    for (const auto& [a, b] : access) acc[idx(a)].set(idx(b));
    f.above = std::move(above);
    f.access = std::move(acc);
    return f;
}

AwarenessModel make_model(AwarenessFrame frame, std::vector<std::string> props,
                          std::vector<WorldMask> lang, std::vector<WorldMask> val) {
    if (props.size() != lang.size() || props.size() != val.size())
        throw Error("model proposition maps are not total");
    AwarenessModel m;
    m.frame = std::move(frame);
    m.props = std::move(props);
    m.lang = std::move(lang);
    m.val = std::move(val);
    return m;
}

AxiomReport check_model(const AwarenessModel& m) {
    AxiomReport rep;
    auto add = [&](const char* axiom, std::vector<std::string> witness,
                   const char* detail) {
        rep.passed = false;
        AxiomViolation v{axiom, std::move(witness), detail};
        rep.violations.push_back(std::move(v));
    };
    const AwarenessFrame& f = m.frame;
    const std::size_t n = f.size();
    for (std::size_t w = 0; w < n; ++w) {
        if (!f.above[w].test(w)) add("preorder", {f.worlds[w]}, "not reflexive");
        if (f.access[w].none()) add("serial", {f.worlds[w]}, "world has no successor");
        for (std::size_t v = 0; v < n; ++v)
            if (f.above[w].test(v) && !f.above[v].subset_of(f.above[w]))
                add("preorder", {f.worlds[w], f.worlds[v]}, "not transitive");
    }
    for (std::size_t p = 0; p < m.props.size(); ++p) {
        for (std::size_t w = 0; w < n; ++w) {
            if (m.lang[p].test(w) && !f.above[w].subset_of(m.lang[p]))
                add("lang-upclosed", {m.props[p], f.worlds[w]},
                    "language set is not upward closed");
        }
        if (!m.val[p].subset_of(m.lang[p]))
            add("val-in-lang", {m.props[p]}, "valuation exceeds the language set");
    }
    return rep;
}

namespace {

WorldMask props_lang(const AwarenessModel& m, const Formula& f) {
    WorldMask out = WorldMask::full(m.frame.size());
    for (const auto& name : props_of(f)) {
        auto i = m.prop_index(name);
        if (!i) throw Error("unbound proposition '" + name + "'");
        out = out & m.lang[*i];
    }
    return out;
}

}  // namespace

bool in_language(const AwarenessModel& m, std::size_t world, const Formula& f) {
    return props_lang(m, f).test(world);
}

Extension extension(const AwarenessModel& m, const Formula& f) {
    const AwarenessFrame& fr = m.frame;
    switch (f->op) {
        case Op::Top: {
            WorldMask all = WorldMask::full(fr.size());
            return {all, all};
        }
        case Op::Prop: {
            auto i = m.prop_index(f->name);
            if (!i) throw Error("unbound proposition '" + f->name + "'");
            return {m.val[*i], m.lang[*i]};
        }
        case Op::Neg: return compose_neg(extension(m, f->lhs));
        case Op::And:
            return compose_and(extension(m, f->lhs), extension(m, f->rhs));
        case Op::Know: return compose_know(fr, extension(m, f->lhs));
        case Op::Aware: return compose_aware(fr, extension(m, f->lhs));
    }
    throw Error("corrupt formula");
}

TruthStatus truth(const AwarenessModel& m, std::size_t world, const Formula& f) {
    Extension e = extension(m, f);
    if (!e.domain.test(world)) return TruthStatus::Undefined;
    return e.truth.test(world) ? TruthStatus::True : TruthStatus::False;
}

bool model_valid(const AwarenessModel& m, const Formula& f) {
    Extension e = extension(m, f);
    return e.truth == e.domain;
}

bool frame_property(const AwarenessFrame& f, FrameProperty which) {
    const std::size_t n = f.size();
    switch (which) {
        case FrameProperty::Serial:
            for (std::size_t w = 0; w < n; ++w)
                if (f.access[w].none()) return false;
            return true;
        case FrameProperty::Reflexive:
            for (std::size_t w = 0; w < n; ++w)
                if (!f.access[w].test(w)) return false;
            return true;
        case FrameProperty::Transitive:
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t v = 0; v < n; ++v)
                    if (f.access[w].test(v) && !f.access[v].subset_of(f.access[w]))
                        return false;
            return true;
        case FrameProperty::Euclidean:
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t v = 0; v < n; ++v)
                    if (f.access[w].test(v) && !f.access[w].subset_of(f.access[v]))
                        return false;
            return true;
        case FrameProperty::KaCondition: {
            // successors of successors must sit above some direct successor
            for (std::size_t w = 0; w < n; ++w) {
                WorldMask reachable_up;
                for (std::size_t v = 0; v < n; ++v)
                    if (f.access[w].test(v)) reachable_up = reachable_up | f.above[v];
                for (std::size_t v = 0; v < n; ++v) {
                    if (!f.access[w].test(v)) continue;
                    if (!f.access[v].subset_of(reachable_up)) return false;
                }
            }
            return true;
        }
        case FrameProperty::NecCondition:
            for (std::size_t w = 0; w < n; ++w)
                if (!f.access[w].subset_of(f.above[w])) return false;
            return true;
    }
    return false;
}

AwarenessModel random_model(std::uint64_t seed, const RandomModelOptions& opts) {
    std::mt19937_64 rng(seed);
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(1, opts.max_worlds)(rng);
    std::vector<std::string> worlds(n);
    for (std::size_t i = 0; i < n; ++i) worlds[i] = "w" + std::to_string(i);

    std::vector<std::pair<std::string, std::string>> geq, access;
    std::bernoulli_distribution edge(0.3);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && edge(rng)) geq.emplace_back(worlds[a], worlds[b]);

    if (opts.partitional) {
        std::vector<std::size_t> cell(n);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (auto& c : cell) c = pick(rng);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (cell[a] == cell[b]) access.emplace_back(worlds[a], worlds[b]);
    } else {
        std::bernoulli_distribution r(0.4);
        for (std::size_t a = 0; a < n; ++a) {
            bool any = false;
            for (std::size_t b = 0; b < n; ++b)
                if (r(rng)) {
                    access.emplace_back(worlds[a], worlds[b]);
                    any = true;
                }
            if (!any) {  // keep it serial
                std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
                access.emplace_back(worlds[a], worlds[b]);
            }
        }
    }
    AwarenessFrame frame = make_frame(worlds, geq, access);

    std::vector<WorldMask> lang(opts.props.size()), val(opts.props.size());
    std::bernoulli_distribution in_lang(0.6), in_val(0.5);
    for (std::size_t p = 0; p < opts.props.size(); ++p) {
        WorldMask l;
        for (std::size_t w = 0; w < n; ++w)
            if (in_lang(rng)) l = l | frame.above[w];  // upward closure of the seed
        for (std::size_t w = 0; w < n; ++w)
            if (l.test(w) && in_val(rng)) val[p].set(w);
        lang[p] = l;
    }
    return make_model(std::move(frame), opts.props, std::move(lang), std::move(val));
}

namespace {

struct ModelSearch {
    const AwarenessModel& a;
    const AwarenessModel& b;
    std::vector<std::size_t> map;
    std::vector<bool> used;
    static constexpr std::size_t kUnset = SIZE_MAX;

    bool candidate_ok(std::size_t x, std::size_t y) const {
        for (std::size_t p = 0; p < a.props.size(); ++p) {
            if (a.lang[p].test(x) != b.lang[p].test(y)) return false;
            if (a.val[p].test(x) != b.val[p].test(y)) return false;
        }
        if (a.frame.access[x].count() != b.frame.access[y].count()) return false;
        if (a.frame.above[x].count() != b.frame.above[y].count()) return false;
        for (std::size_t w = 0; w < a.frame.size(); ++w) {
            if (map[w] == kUnset) continue;
            if (a.frame.access[x].test(w) != b.frame.access[y].test(map[w])) return false;
            if (a.frame.access[w].test(x) != b.frame.access[map[w]].test(y)) return false;
            if (a.frame.above[x].test(w) != b.frame.above[y].test(map[w])) return false;
            if (a.frame.above[w].test(x) != b.frame.above[map[w]].test(y)) return false;
        }
        return true;
    }

    bool extend(std::size_t x) {
        if (x == a.frame.size()) return true;
        for (std::size_t y = 0; y < b.frame.size(); ++y) {
            if (used[y] || !candidate_ok(x, y)) continue;
            map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            map[x] = kUnset;
            used[y] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_model_isomorphism(const AwarenessModel& a,
                                                               const AwarenessModel& b) {
    if (a.frame.size() != b.frame.size() || a.props != b.props) return std::nullopt;
    ModelSearch s{a, b, std::vector<std::size_t>(a.frame.size(), ModelSearch::kUnset),
                  std::vector<bool>(b.frame.size(), false)};
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

}  // namespace rba
