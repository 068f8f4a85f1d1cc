#include "rba/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>

#include "rba/error.hpp"
#include "rba/io.hpp"
#include "rba/iso.hpp"
#include "rba/parallel.hpp"

namespace rba {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

void add_line(SuiteResult& res, const std::string& name, bool passed, double secs,
              std::string detail = "") {
    res.lines.push_back({name, passed, secs, std::move(detail)});
}

std::string count_text(std::size_t n, const char* what) {
    return std::to_string(n) + " " + what;
}

// ---------------------------------------------------------------- extensions

Extension ext_implies(Extension a, Extension b) {
    return compose_neg(compose_and(compose_neg(compose_neg(a)), compose_neg(b)));
}
Extension ext_iff(Extension a, Extension b) {
    return compose_and(ext_implies(a, b), ext_implies(b, a));
}
bool ext_valid(Extension e) { return e.truth == e.domain; }

}  // namespace

Fixtures load_fixtures(const std::string& dir) {
    Fixtures fx;
    fx.example1 = load_algebra(dir + "/example1.rba.json");
    fx.appendixA = load_algebra(dir + "/appendixA.rba.json");
    LoadedMrba m = load_mrba(dir + "/example2.mrba.json");
    fx.example2 = std::move(m.mrba);
    fx.example2_assign = std::move(m.assign);
    fx.figure3 = load_model(dir + "/figure3.model.json");
    return fx;
}

AxiomReport check_order_laws(const AlgebraTable& a) {
    AxiomReport rep;
    auto add = [&](const char* which, std::initializer_list<ElementId> ws,
                   const char* detail) {
        rep.passed = false;
        if (rep.violations.size() >= 64) return;
        AxiomViolation v;
        v.axiom = which;
        for (ElementId e : ws) v.witness.push_back(a.label(e));
        v.detail = detail;
        rep.violations.push_back(std::move(v));
    };
    const std::size_t n = a.size();
    for (ElementId x = 0; x < n; ++x)
        if (!leq(a, x, x)) add("order-i", {x}, "order not reflexive");
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (leq(a, x, y))
                for (ElementId z = 0; z < n; ++z)
                    if (leq(a, y, z) && !leq(a, x, z))
                        add("order-i", {x, y, z}, "order not transitive");
            // upper bounds are closed under meet and join
            for (ElementId z = 0; z < n; ++z)
                if (leq(a, z, x) && leq(a, z, y)) {
                    if (!leq(a, z, a.meet(x, y)))
                        add("order-ii", {x, y, z}, "meet drops below a lower bound");
                    if (!leq(a, z, a.join(x, y)))
                        add("order-ii", {x, y, z}, "join drops below a lower bound");
                }
            ElementId tx = relative_top(a, x), ty = relative_top(a, y);
            if (leq(a, y, x)) {
                if (!leq(a, ty, tx))
                    add("order-iii", {x, y}, "relative tops not monotone");
                if (a.meet(x, relative_bottom(a, y)) != relative_bottom(a, y))
                    add("order-iii", {x, y}, "relative bottom not absorbed");
            }
            if (leq(a, ty, tx)) {
                if (relative_top(a, a.meet(x, ty)) != ty)
                    add("order-iv", {x, y}, "projection leaves the domain");
            }
            ElementId tmeet = relative_top(a, a.meet(x, y));
            ElementId tjoin = relative_top(a, a.join(x, y));
            ElementId both = a.meet(tx, ty);
            if (tmeet != both || tjoin != both || a.join(tx, ty) != both)
                add("order-v", {x, y}, "relative tops do not form a meet semilattice");
        }
    return rep;
}

AwarenessModel necessitation_counterexample_model() {
    AwarenessFrame fr = make_frame({"hi", "lo"}, {{"hi", "lo"}},
                                   {{"hi", "lo"}, {"lo", "lo"}});
    WorldMask only_hi, all;
    only_hi.set(0);
    all.set(0);
    all.set(1);
    WorldMask only_lo;
    only_lo.set(1);
    return make_model(std::move(fr), {"p", "q"}, {only_hi, all}, {only_hi, only_lo});
}

// ------------------------------------------------------------------ soundness

namespace {

struct SweepOutcome {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

void sweep_axiom_instances(const AwarenessModel& m, const FormulaArena& pool,
                           std::size_t budget, SweepOutcome& out) {
    std::vector<Extension> E;
    ext_all(pool, m, E);
    const AwarenessFrame& fr = m.frame;
    auto fail = [&](const char* schema, std::size_t i, std::size_t j, bool pair) {
        ++out.failures;
        if (!out.first_failure.empty()) return;
        std::ostringstream os;
        os << schema << " instance with phi=" << to_string(pool.to_formula(i));
        if (pair) os << ", psi=" << to_string(pool.to_formula(j));
        out.first_failure = os.str();
    };

    {  // D
        WorldMask all = WorldMask::full(fr.size());
        Extension zero = compose_neg({all, all});
        ++out.instances;
        if (!ext_valid(compose_neg(compose_know(fr, zero)))) fail("D", 0, 0, false);
    }
    const std::size_t max_level = std::min(budget, pool.level_begin.size() - 2);
    // single-metavariable schemas over the whole pool
    for (std::size_t i = 0; i < pool.size(); ++i) {
        Extension e = E[i];
        Extension ke = compose_know(fr, e);
        ++out.instances;
        if (!ext_valid(ext_implies(ke, compose_aware(fr, e)))) fail("A0", i, 0, false);
        if (ext_valid(e)) {  // from a validated formula, awareness implies knowledge
            ++out.instances;
            if (!ext_valid(ext_implies(compose_aware(fr, e), ke)))
                fail("NecAK", i, 0, false);
        }
    }
    // pairs with a shared connective budget
    for (std::size_t la = 0; la <= max_level; ++la) {
        for (std::size_t lb = 0; la + lb <= max_level; ++lb) {
            for (std::size_t i = pool.level_begin[la]; i < pool.level_begin[la + 1]; ++i) {
                Extension a = E[i];
                Extension ka = compose_know(fr, a);
                Extension aw_a = compose_aware(fr, a);
                std::uint8_t mask_a = pool.nodes[i].prop_mask;
                for (std::size_t j = pool.level_begin[lb]; j < pool.level_begin[lb + 1];
                     ++j) {
                    Extension b = E[j];
                    // K: (Kφ & K(φ->ψ)) -> Kψ
                    Extension lhs = compose_and(ka, compose_know(fr, ext_implies(a, b)));
                    ++out.instances;
                    if (!ext_valid(ext_implies(lhs, compose_know(fr, b))))
                        fail("K", i, j, true);
                    // AGP: Aφ -> Aψ whenever ψ stays within φ's propositions
                    if ((pool.nodes[j].prop_mask & ~mask_a) == 0) {
                        ++out.instances;
                        if (!ext_valid(ext_implies(aw_a, compose_aware(fr, b))))
                            fail("AGP", i, j, true);
                    }
                }
            }
        }
    }
}

}  // namespace

SuiteResult run_soundness(const Fixtures& fx, const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "soundness";

    Timer t0;
    std::vector<AwarenessModel> models;
    models.push_back(fx.figure3);
    models.push_back(necessitation_counterexample_model());
    for (std::size_t i = 0; i < opts.random_models; ++i)
        models.push_back(random_model(opts.seed + i, {}));
    bool corpus_ok = true;
    for (const auto& m : models)
        if (!check_model(m).passed) corpus_ok = false;
    add_line(res, "model corpus well-formed", corpus_ok, t0.seconds(),
             count_text(models.size(), "models"));

    Timer t1;
    FormulaArena pool = FormulaArena::build(
        {"p", "q"}, opts.budget,
        /*include_modal=*/true,
        opts.modal_depth == 0 ? 0 : opts.modal_depth - 1);
    std::vector<SweepOutcome> outs(models.size());
    parallel_for(models.size(), opts.jobs, [&](std::size_t i) {
        sweep_axiom_instances(models[i], pool, opts.budget, outs[i]);
    });
    std::size_t instances = 0, failures = 0;
    std::string first;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        instances += outs[i].instances;
        failures += outs[i].failures;
        if (first.empty() && !outs[i].first_failure.empty())
            first = "model " + std::to_string(i) + ": " + outs[i].first_failure;
    }
    add_line(res, "K, D, AGP, A0 and validated-awareness instances valid",
             failures == 0, t1.seconds(),
             failures == 0 ? count_text(instances, "instances") : first);

    Timer t2;
    AwarenessModel nm = necessitation_counterexample_model();
    Formula phi = parse("p");
    Formula taut = parse("p | ~p");
    bool counterexample = model_valid(nm, phi) && !model_valid(nm, know(phi)) &&
                          model_valid(nm, taut) && !model_valid(nm, know(taut));
    add_line(res, "plain necessitation fails on the constructed model", counterexample,
             t2.seconds(), "valid p with K p invalid");
    return res;
}

// ------------------------------------------------------------- correspondence

namespace {

struct FrameSweepResult {
    bool property_implication_ok = true;
    std::string failure;
    // counterexamples found: frame lacks the property and an instance fails
    bool counter_T = false, counter_4 = false, counter_5A = false, counter_KA = false;
};

void sweep_one_frame(const AwarenessFrame& fr, const std::vector<Formula>& metas,
                     FrameSweepResult& out) {
    const bool reflexive = frame_property(fr, FrameProperty::Reflexive);
    const bool transitive = frame_property(fr, FrameProperty::Transitive);
    const bool euclidean = frame_property(fr, FrameProperty::Euclidean);
    const bool ka_cond = frame_property(fr, FrameProperty::KaCondition);
    const std::size_t n = fr.size();

    // upward-closed subsets of this preorder
    std::vector<std::uint32_t> upsets;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (std::size_t w = 0; w < n && ok; ++w) {
            if (!(s >> w & 1)) continue;
            for (std::size_t v = 0; v < n; ++v)
                if (fr.above[w].test(v) && !(s >> v & 1)) {
                    ok = false;
                    break;
                }
        }
        if (ok) upsets.push_back(s);
    }
    auto to_mask = [](std::uint32_t bits) {
        WorldMask m;
        for (std::size_t i = 0; i < 32; ++i)
            if (bits >> i & 1) m.set(i);
        return m;
    };

    for (std::uint32_t lp : upsets)
        for (std::uint32_t vp = lp;; vp = (vp - 1) & lp) {
            for (std::uint32_t lq : upsets)
                for (std::uint32_t vq = lq;; vq = (vq - 1) & lq) {
                    AwarenessModel m = make_model(
                        fr, {"p", "q"}, {to_mask(lp), to_mask(lq)},
                        {to_mask(vp), to_mask(vq)});
                    for (const Formula& f : metas) {
                        Extension e = extension(m, f);
                        Extension ke = compose_know(fr, e);
                        Extension aw = compose_aware(fr, e);
                        bool t_ok = ext_valid(ext_implies(ke, e));
                        bool four_ok = ext_valid(ext_implies(ke, compose_know(fr, ke)));
                        Extension nk = compose_neg(ke);
                        bool fivea_ok = ext_valid(
                            ext_implies(compose_and(nk, aw), compose_know(fr, nk)));
                        bool ka_ok = ext_valid(ext_iff(aw, compose_know(fr, aw)));
                        auto bad = [&](const char* ax, const Formula& g) {
                            if (!out.property_implication_ok) return;
                            out.property_implication_ok = false;
                            out.failure = std::string(ax) +
                                          " invalid on a frame with its property, phi=" +
                                          to_string(g);
                        };
                        if (reflexive && !t_ok) bad("T", f);
                        if (transitive && !four_ok) bad("4", f);
                        if (euclidean && !fivea_ok) bad("5A", f);
                        if (ka_cond && !ka_ok) bad("KA", f);
                        if (!reflexive && !t_ok) out.counter_T = true;
                        if (!transitive && !four_ok) out.counter_4 = true;
                        if (!euclidean && !fivea_ok) out.counter_5A = true;
                        if (!ka_cond && !ka_ok) out.counter_KA = true;
                    }
                    if (vq == 0) break;
                }
            if (vp == 0) break;
        }
}

std::vector<AwarenessFrame> enumerate_frames(std::size_t n) {
    std::vector<AwarenessFrame> frames;
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "w" + std::to_string(i);
    const std::size_t bits = n * n;
    std::vector<std::vector<WorldMask>> preorders;
    for (std::uint64_t rel = 0; rel < (std::uint64_t(1) << bits); ++rel) {
        auto geq = [&](std::size_t a, std::size_t b) {
            return (rel >> (a * n + b)) & 1;
        };
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!geq(a, a)) ok = false;
            for (std::size_t b = 0; b < n && ok; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (geq(a, b) && geq(b, c) && !geq(a, c)) {
                        ok = false;
                        break;
                    }
        }
        if (!ok) continue;
        std::vector<WorldMask> above(n);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                if (geq(w, v)) above[v].set(w);
        preorders.push_back(std::move(above));
    }
    for (const auto& above : preorders) {
        for (std::uint64_t rel = 0; rel < (std::uint64_t(1) << bits); ++rel) {
            std::vector<WorldMask> access(n);
            bool serial = true;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b)
                    if ((rel >> (a * n + b)) & 1) access[a].set(b);
                if (access[a].none()) {
                    serial = false;
                    break;
                }
            }
            if (!serial) continue;
            AwarenessFrame fr;
            fr.worlds = names;
            fr.above = above;
            fr.access = std::move(access);
            frames.push_back(std::move(fr));
        }
    }
    return frames;
}

}  // namespace

SuiteResult run_correspondence(const Fixtures& fx, const SuiteOptions& opts) {
    (void)fx;
    SuiteResult res;
    res.suite = "correspondence";

    std::vector<Formula> metas = {
        parse("p"),        parse("q"),       parse("1"),     parse("~p"),
        parse("p & q"),    parse("p | ~q"),  parse("A p"),   parse("K p"),
        parse("A q"),      parse("K ~p"),    parse("K(p & q)"), parse("A(p & q)"),
    };

    Timer t0;
    std::vector<AwarenessFrame> frames;
    for (std::size_t n = 1; n <= 3; ++n) {
        auto fs = enumerate_frames(n);
        frames.insert(frames.end(), fs.begin(), fs.end());
    }
    std::vector<FrameSweepResult> outs(frames.size());
    parallel_for(frames.size(), opts.jobs, [&](std::size_t i) {
        sweep_one_frame(frames[i], metas, outs[i]);
    });
    bool impl_ok = true;
    std::string failure;
    bool cT = false, c4 = false, c5A = false, cKA = false;
    for (const auto& o : outs) {
        if (!o.property_implication_ok && impl_ok) {
            impl_ok = false;
            failure = o.failure;
        }
        cT |= o.counter_T;
        c4 |= o.counter_4;
        c5A |= o.counter_5A;
        cKA |= o.counter_KA;
    }
    add_line(res, "T/4/5A/KA valid on reflexive/transitive/euclidean/matching frames",
             impl_ok, t0.seconds(),
             impl_ok ? count_text(frames.size(), "frames, exhaustive models") : failure);
    add_line(res, "counterexample frames found for T, 4, 5A, KA",
             cT && c4 && c5A && cKA, 0.0,
             std::string(cT ? "T " : "") + (c4 ? "4 " : "") + (c5A ? "5A " : "") +
                 (cKA ? "KA" : ""));

    Timer t1;
    bool ka_from_transitive = true;
    for (std::size_t n = 1; n <= 4 && ka_from_transitive; ++n) {
        const std::size_t bits = n * n;
        // serial transitive accessibility relations
        std::vector<std::vector<WorldMask>> relations;
        for (std::uint64_t rel = 0; rel < (std::uint64_t(1) << bits); ++rel) {
            std::vector<WorldMask> access(n);
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) {
                for (std::size_t b = 0; b < n; ++b)
                    if ((rel >> (a * n + b)) & 1) access[a].set(b);
                if (access[a].none()) ok = false;
            }
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b = 0; b < n && ok; ++b)
                    if (access[a].test(b) && !access[b].subset_of(access[a])) ok = false;
            if (ok) relations.push_back(std::move(access));
        }
        for (std::uint64_t rel = 0; rel < (std::uint64_t(1) << bits); ++rel) {
            auto geq = [&](std::size_t a, std::size_t b) {
                return (rel >> (a * n + b)) & 1;
            };
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a) {
                if (!geq(a, a)) ok = false;
                for (std::size_t b = 0; b < n && ok; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        if (geq(a, b) && geq(b, c) && !geq(a, c)) {
                            ok = false;
                            break;
                        }
            }
            if (!ok) continue;
            std::vector<WorldMask> above(n);
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w)
                    if (geq(w, v)) above[v].set(w);
            AwarenessFrame fr;
            fr.worlds.resize(n, "w");
            fr.above = above;
            for (const auto& acc : relations) {
                fr.access = acc;
                if (!frame_property(fr, FrameProperty::KaCondition)) {
                    ka_from_transitive = false;
                    break;
                }
            }
            if (!ka_from_transitive) break;
        }
    }
    add_line(res, "transitive accessibility always meets the KA frame condition",
             ka_from_transitive, t1.seconds(), "exhaustive frames up to 4 worlds");
    return res;
}

// ------------------------------------------------------------------- stone

namespace {

// definitional brute force over raw subsets; feasible for small algebras
std::size_t brute_force_family_count(const AlgebraTable& a) {
    const std::size_t n = a.size();
    if (n > 13) throw Error("brute force is limited to 13 elements");
    std::size_t count = 0;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
        Filter s;
        for (ElementId x = 0; x < n; ++x)
            if (bits >> x & 1) s.members.push_back(x);
        if (!is_filter(a, s)) continue;
        bool ok = true;
        for (ElementId t : project_domains(a, s)) {
            LocalBoolean loc = extract_local_boolean(a, t);
            Filter trace;
            for (std::size_t li = 0; li < loc.elements.size(); ++li)
                if (s.contains(loc.elements[li]))
                    trace.members.push_back(static_cast<ElementId>(li));
            if (!is_ultrafilter(loc.table, trace)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

// the worked example's image inside the three-point concrete algebra
AlgebraTable figure2_configuration() {
    Universe u = make_universe({"x", "y", "z"});
    auto P = [&](std::initializer_list<int> truth, std::initializer_list<int> domain) {
        SubsetPair p;
        for (int i : truth) p.truth |= 1u << i;
        for (int i : domain) p.domain |= 1u << i;
        return p;
    };
    // the lower block lives on {x,y}; the top block on all of {x,y,z}
    std::vector<std::pair<std::string, SubsetPair>> named = {
        {"0_R", P({}, {0, 1})},       {"X_R", P({0}, {0, 1})},
        {"Y_R", P({1}, {0, 1})},      {"1_R", P({0, 1}, {0, 1})},
        {"0_B", P({}, {0, 1, 2})},    {"X_B", P({0}, {0, 1, 2})},
        {"Y_B", P({1}, {0, 1, 2})},   {"Z_B", P({2}, {0, 1, 2})},
        {"XY_B", P({0, 1}, {0, 1, 2})}, {"XZ_B", P({0, 2}, {0, 1, 2})},
        {"YZ_B", P({1, 2}, {0, 1, 2})}, {"1_B", P({0, 1, 2}, {0, 1, 2})},
    };
    const std::size_t n = named.size();
    auto index_of = [&](SubsetPair p) -> ElementId {
        for (std::size_t i = 0; i < n; ++i)
            if (named[i].second == p) return static_cast<ElementId>(i);
        throw Error("figure-2 configuration is not closed under the operations");
    };
    std::vector<ElementId> meet(n * n), join(n * n), neg(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = named[i].first;
        neg[i] = index_of(c_neg(named[i].second));
        for (std::size_t j = 0; j < n; ++j) {
            meet[i * n + j] = index_of(c_meet(named[i].second, named[j].second));
            join[i * n + j] = index_of(c_join(named[i].second, named[j].second));
        }
    }
    return make_table(n, std::move(meet), std::move(join), std::move(neg),
                      index_of(P({0, 1, 2}, {0, 1, 2})), index_of(P({}, {0, 1})),
                      std::move(labels));
}

AlgebraTable image_subalgebra(const AlgebraTable& a, const StoneEmbedding& se) {
    const std::size_t n = a.size();
    auto index_of = [&](SubsetPair p) -> ElementId {
        for (ElementId i = 0; i < n; ++i)
            if (se.image[i] == p) return i;
        throw Error("embedding image is not closed under the operations");
    };
    std::vector<ElementId> meet(n * n), join(n * n), neg(n);
    for (ElementId i = 0; i < n; ++i) {
        neg[i] = index_of(c_neg(se.image[i]));
        for (ElementId j = 0; j < n; ++j) {
            meet[i * n + j] = index_of(c_meet(se.image[i], se.image[j]));
            join[i * n + j] = index_of(c_join(se.image[i], se.image[j]));
        }
    }
    std::vector<std::string> labels(n);
    for (ElementId i = 0; i < n; ++i) labels[i] = a.label(i);
    const std::uint32_t full = se.universe.full_mask();
    return make_table(n, std::move(meet), std::move(join), std::move(neg),
                      index_of({full, full}),
                      index_of(se.image[a.bottom()]), std::move(labels));
}

struct StoneFixture {
    std::string name;
    const AlgebraTable* table;
};

}  // namespace

SuiteResult run_stone(const Fixtures& fx, const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "stone";

    std::vector<AlgebraTable> crbas;
    for (std::size_t k = 0; k <= 3; ++k) {
        std::vector<std::string> pts;
        for (std::size_t i = 0; i < k; ++i) pts.push_back(std::string(1, char('x' + i)));
        crbas.push_back(materialize(make_universe(pts)));
    }
    std::vector<StoneFixture> fixtures = {{"example1", &fx.example1},
                                          {"appendixA", &fx.appendixA}};
    for (std::size_t k = 0; k <= 3; ++k)
        fixtures.push_back({"pairs(" + std::to_string(k) + ")", &crbas[k]});

    Timer t0;
    bool embed_ok = true;
    std::string embed_detail;
    for (const auto& f : fixtures) {
        StoneEmbedding se = stone_embed(*f.table);
        if (!se.verification.passed) {
            embed_ok = false;
            embed_detail = f.name + ": " + se.verification.violations.front().detail;
            break;
        }
    }
    add_line(res, "embedding injective and homomorphic on every fixture", embed_ok,
             t0.seconds(), embed_ok ? count_text(fixtures.size(), "fixtures") : embed_detail);

    Timer t1;
    StoneEmbedding se1 = stone_embed(fx.example1);
    std::size_t brute = brute_force_family_count(fx.example1);
    bool count_ok = se1.family.filters.size() == 5 && brute == 5;
    add_line(res, "family size on the twelve-element fixture matches brute force",
             count_ok, t1.seconds(),
             "enumerated " + std::to_string(se1.family.filters.size()) +
                 ", brute force " + std::to_string(brute));

    Timer t2;
    bool image_ok = false;
    std::string image_detail;
    try {
        AlgebraTable image = image_subalgebra(fx.example1, se1);
        AlgebraTable fig2 = figure2_configuration();
        image_ok = find_isomorphism(image, fig2).has_value() &&
                   find_isomorphism(image, fx.example1).has_value();
        image_detail = "isomorphic to the three-point configuration";
    } catch (const Error& e) {
        image_detail = e.what();
    }
    add_line(res, "embedding image matches the documented configuration", image_ok,
             t2.seconds(), image_detail);

    Timer t3;
    std::size_t extensions = 0;
    bool extend_ok = true;
    std::string extend_detail;
    for (const auto& f : fixtures) {
        const AlgebraTable& a = *f.table;
        FilterFamily fam = enumerate_domain_ultra(a);
        for (const Filter& base : enumerate_filters(a)) {
            if (!is_strongly_proper(a, base)) continue;
            for (ElementId avoid = 0; avoid < a.size() && extend_ok; ++avoid) {
                if (base.contains(avoid)) continue;
                // the family always holds a witness; find them all by brute force
                std::vector<const Filter*> witnesses;
                auto base_doms = project_domains(a, base);
                for (const Filter& u : fam.filters) {
                    bool super = std::includes(u.members.begin(), u.members.end(),
                                               base.members.begin(), base.members.end());
                    if (super && !u.contains(avoid) &&
                        project_domains(a, u) == base_doms)
                        witnesses.push_back(&u);
                }
                Filter got;
                try {
                    got = extend_filter(a, base, avoid);
                } catch (const Error& e) {
                    extend_ok = false;
                    extend_detail = f.name + ": " + e.what();
                    break;
                }
                ++extensions;
                bool among = false;
                for (const Filter* w : witnesses)
                    if (*w == got) among = true;
                if (witnesses.empty() || !among) {
                    extend_ok = false;
                    extend_detail = f.name + ": extension disagrees with brute force";
                }
            }
            if (!extend_ok) break;
        }
        if (!extend_ok) break;
    }
    add_line(res, "filter extension matches brute-force witnesses", extend_ok,
             t3.seconds(),
             extend_ok ? count_text(extensions, "extensions") : extend_detail);
    (void)opts;
    return res;
}

// ------------------------------------------------------------------ duality

SuiteResult run_duality(const Fixtures& fx, const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "duality";

    FormulaArena battery = FormulaArena::build({"p", "q"}, opts.duality_budget,
                                               /*include_modal=*/true,
                                               /*max_modal_depth=*/2);

    Timer t0;
    std::vector<std::pair<std::string, AwarenessModel>> models;
    models.emplace_back("figure3", fx.figure3);
    models.emplace_back("necessitation", necessitation_counterexample_model());
    for (std::size_t i = 0; i < 5; ++i)
        models.emplace_back("random" + std::to_string(i),
                            random_model(opts.seed + 1000 + i, {}));
    bool p1_ok = true;
    std::string p1_detail;
    std::size_t p1_checked = 0;
    for (const auto& [name, m] : models) {
        DualityReport rep = verify_prop1(m, battery);
        p1_checked += rep.checked;
        if (!rep.ok()) {
            p1_ok = false;
            p1_detail = name + ": " + rep.mismatches.front().formula + " gives " +
                        rep.mismatches.front().lhs + " vs " + rep.mismatches.front().rhs;
            break;
        }
    }
    add_line(res, "model-to-algebra translation matches extensions", p1_ok, t0.seconds(),
             p1_ok ? count_text(p1_checked, "formulas") : p1_detail);

    Timer t1;
    std::vector<std::tuple<std::string, Mrba, Assignment>> mrbas;
    mrbas.emplace_back("example2", fx.example2, fx.example2_assign);
    {
        Mrba ident{fx.appendixA, {}};
        for (ElementId x = 0; x < fx.appendixA.size(); ++x) ident.fk.push_back(x);
        Assignment h{{"p", *fx.appendixA.find("Y_B")}, {"q", *fx.appendixA.find("X_R")}};
        mrbas.emplace_back("appendixA-identity", std::move(ident), std::move(h));
    }
    {
        AlgebraTable pairs2 = materialize(make_universe({"x", "y"}));
        Mrba ident{pairs2, {}};
        for (ElementId x = 0; x < pairs2.size(); ++x) ident.fk.push_back(x);
        Assignment h;
        h["p"] = *pairs2.find("({x},{x,y})");
        h["q"] = *pairs2.find("({},{y})");
        mrbas.emplace_back("pairs(2)-identity", std::move(ident), std::move(h));
    }
    {
        ConcreteMrba cm = model_to_mrba(fx.figure3);
        mrbas.emplace_back("figure3-powerset", std::move(cm.mrba), std::move(cm.assign));
    }
    bool p2_ok = true, round_ok = true;
    std::string p2_detail, round_detail;
    std::size_t p2_checked = 0;
    for (const auto& [name, m, h] : mrbas) {
        AxiomReport mr = check_mrba(m);
        if (!mr.passed) {
            p2_ok = false;
            p2_detail = name + " fails " + mr.violations.front().axiom;
            break;
        }
        DualityReport rep = verify_prop2(m, h, battery);
        p2_checked += rep.checked;
        if (!rep.ok()) {
            p2_ok = false;
            p2_detail = name + ": " + rep.mismatches.front().formula;
            break;
        }
        // validity round trip on the same battery
        AwarenessModel dual = mrba_to_model(m, h);
        std::vector<ElementId> values;
        for (const auto& pn : battery.props) {
            auto it = h.find(pn);
            if (it == h.end()) throw Error("assignment lacks '" + pn + "'");
            values.push_back(it->second);
        }
        std::vector<ElementId> vals;
        eval_all(battery, m.algebra, &m.fk, values, vals);
        std::vector<Extension> exts;
        ext_all(battery, dual, exts);
        for (std::size_t i = 0; i < battery.size(); ++i) {
            bool alg_valid = vals[i] == relative_top(m.algebra, vals[i]);
            bool mod_valid = exts[i].truth == exts[i].domain;
            if (alg_valid != mod_valid) {
                round_ok = false;
                round_detail =
                    name + ": " + to_string(battery.to_formula(i)) +
                    (alg_valid ? " valid in the algebra only" : " valid in the model only");
                break;
            }
        }
        if (!round_ok) break;
    }
    add_line(res, "algebra-to-model translation matches filter membership", p2_ok,
             t1.seconds(), p2_ok ? count_text(p2_checked, "formulas") : p2_detail);
    add_line(res, "algebraic validity equals model validity in the dual", round_ok, 0.0,
             round_ok ? count_text(mrbas.size() * battery.size(), "checks") : round_detail);

    Timer t2;
    AwarenessModel derived = mrba_to_model(fx.example2, fx.example2_assign);
    bool iso_ok = find_model_isomorphism(derived, fx.figure3).has_value();
    add_line(res, "derived dual model isomorphic to the shipped model fixture", iso_ok,
             t2.seconds(), count_text(derived.frame.size(), "worlds"));

    Timer t3;
    bool succ_ok = true;
    for (ElementId x = 0; x < fx.example2.algebra.size() && succ_ok; ++x)
        succ_ok = check_successor_containment(fx.example2, x);
    add_line(res, "knowledge membership matches successor containment", succ_ok,
             t3.seconds(), "all elements of the modal fixture");

    Timer t4;
    StoneEmbedding se = stone_embed(fx.example2.algebra);
    bool modal_embed_ok = se.verification.passed;
    if (modal_embed_ok) {
        AwarenessModel dual = mrba_to_model(fx.example2, fx.example2_assign);
        ConcreteMrba cm = model_to_mrba(dual);
        for (ElementId x = 0; x < fx.example2.algebra.size(); ++x) {
            std::size_t ix = index_of_pair(cm.universe, se.image[x]);
            std::size_t want = index_of_pair(cm.universe, se.image[fx.example2.fk[x]]);
            if (cm.mrba.fk[ix] != want) {
                modal_embed_ok = false;
                break;
            }
        }
    }
    add_line(res, "embedding carries the operator onto the dual powerset operator",
             modal_embed_ok, t4.seconds(), "composed representation");
    return res;
}

// --------------------------------------------------------- tautology bridge

SuiteResult run_tautology_bridge(const Fixtures& fx, const SuiteOptions& opts) {
    SuiteResult res;
    res.suite = "tautology-bridge";
    Timer t0;
    FormulaArena arena =
        FormulaArena::build({"p", "q"}, 7, /*include_modal=*/false);
    std::vector<std::uint32_t> tt;
    taut_masks(arena, tt);
    const std::uint32_t full_tt = (1u << 4) - 1;

    std::vector<std::pair<std::string, const AlgebraTable*>> algebras = {
        {"example1", &fx.example1}, {"appendixA", &fx.appendixA}};
    AlgebraTable pairs2 = materialize(make_universe({"x", "y"}));
    algebras.emplace_back("pairs(2)", &pairs2);

    bool ok = true;
    std::string detail;
    std::size_t checked = 0;
    for (const auto& [name, alg] : algebras) {
        const std::size_t n = alg->size();
        std::vector<ElementId> rel_top(n);
        for (ElementId x = 0; x < n; ++x) rel_top[x] = relative_top(*alg, x);
        const std::size_t total = n * n;
        unsigned jobs = opts.jobs == 0 ? default_jobs() : opts.jobs;
        jobs = std::min<unsigned>(jobs, 4);  // scratch buffers are sizeable
        std::vector<std::vector<std::uint8_t>> partial(
            jobs, std::vector<std::uint8_t>(arena.size(), 1));
        std::atomic<std::size_t> cursor{0};
        parallel_for(jobs, jobs, [&](std::size_t tid) {
            std::vector<ElementId> vals;
            for (;;) {
                std::size_t a = cursor.fetch_add(1);
                if (a >= total) return;
                std::vector<ElementId> values = {static_cast<ElementId>(a / n),
                                                 static_cast<ElementId>(a % n)};
                eval_all(arena, *alg, nullptr, values, vals);
                auto& mine = partial[tid];
                for (std::size_t i = 0; i < arena.size(); ++i)
                    if (vals[i] != rel_top[vals[i]]) mine[i] = 0;
            }
        });
        for (std::size_t i = 0; i < arena.size() && ok; ++i) {
            bool valid_everywhere = true;
            for (unsigned t = 0; t < jobs; ++t) valid_everywhere &= partial[t][i] != 0;
            bool taut = tt[i] == full_tt;
            ++checked;
            if (taut != valid_everywhere) {
                ok = false;
                detail = name + ": " + to_string(arena.to_formula(i)) +
                         (taut ? " is a tautology but fails in the algebra"
                               : " is no tautology yet valid in the algebra");
            }
        }
        if (!ok) break;
    }
    add_line(res, "truth-table verdicts equal all-assignment validity", ok, t0.seconds(),
             ok ? count_text(checked, "formula/algebra checks") : detail);
    return res;
}

}  // namespace rba
