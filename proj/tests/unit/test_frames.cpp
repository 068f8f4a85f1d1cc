#include <doctest.h>

#include "rba/battery.hpp"
#include "rba/error.hpp"
#include "rba/frames.hpp"
#include "rba/suites.hpp"

#include "helpers.hpp"

using namespace rba;
using rba_test::fixtures;

namespace {

std::size_t world(const AwarenessModel& m, const std::string& name) {
    auto w = m.frame.find(name);
    REQUIRE_MESSAGE(w.has_value(), "no world named " << name);
    return *w;
}

// the accessibility cells drawn in the worked frame: the two aware worlds
// share a cell, the two upper unaware worlds share one, the third is alone
AwarenessModel partitional_variant() {
    std::vector<std::pair<std::string, std::string>> geq, acc;
    std::vector<std::string> worlds = {"bx", "by", "bz", "rx", "ry"};
    for (const auto& r : {"rx", "ry"})
        for (const auto& w : worlds) geq.emplace_back(r, w);
    for (const auto& a : {"bx", "by", "bz"})
        for (const auto& b : {"bx", "by", "bz"}) geq.emplace_back(a, b);
    for (const auto& a : {"bx", "by"})
        for (const auto& b : {"bx", "by"}) acc.emplace_back(a, b);
    for (const auto& a : {"rx", "ry"})
        for (const auto& b : {"rx", "ry"}) acc.emplace_back(a, b);
    acc.emplace_back("bz", "bz");
    AwarenessFrame fr = make_frame(worlds, geq, acc);
    WorldMask all = WorldMask::full(5), lq, vp, vq;
    lq.set(3);
    lq.set(4);
    vp.set(0);
    vp.set(3);
    vq.set(3);
    return make_model(std::move(fr), {"p", "q"}, {all, lq}, {vp, vq});
}

}  // namespace

TEST_CASE("the shipped model fixture is well-formed") {
    const AwarenessModel& m = fixtures().figure3;
    REQUIRE(m.frame.size() == 5);
    CHECK(check_model(m).passed);
    CHECK(frame_property(m.frame, FrameProperty::Serial));
    CHECK(frame_property(m.frame, FrameProperty::Reflexive));
    CHECK(frame_property(m.frame, FrameProperty::Transitive));
}

TEST_CASE("valuation outside the language is a named violation") {
    AwarenessModel m = partitional_variant();
    m.val[1].set(world(m, "bz"));  // q true at a world that cannot express it
    AxiomReport rep = check_model(m);
    REQUIRE_FALSE(rep.passed);
    CHECK(rep.violations.front().axiom == "val-in-lang");
}

TEST_CASE("a dead-end world breaks seriality") {
    AwarenessFrame fr = make_frame({"a", "b"}, {}, {{"a", "b"}});
    AwarenessModel m = make_model(std::move(fr), {}, {}, {});
    AxiomReport rep = check_model(m);
    REQUIRE_FALSE(rep.passed);
    bool serial = false;
    for (const auto& v : rep.violations) serial |= v.axiom == "serial";
    CHECK(serial);
}

TEST_CASE("language sets must be upward closed") {
    AwarenessFrame fr = make_frame({"a", "b"}, {{"b", "a"}}, {{"a", "a"}, {"b", "b"}});
    WorldMask la;
    la.set(0);  // defined at the lower world only, undefined above it
    AwarenessModel m = make_model(std::move(fr), {"p"}, {la}, {WorldMask{}});
    AxiomReport rep = check_model(m);
    REQUIRE_FALSE(rep.passed);
    CHECK(rep.violations.front().axiom == "lang-upclosed");
}

TEST_CASE("definedness is proposition containment") {
    const AwarenessModel& m = fixtures().figure3;
    for (std::size_t w = 0; w < m.frame.size(); ++w)
        CHECK(in_language(m, w, parse("1")));
    CHECK(in_language(m, world(m, "rx"), parse("p & q")));
    CHECK_FALSE(in_language(m, world(m, "bx"), parse("p & q")));
    CHECK(in_language(m, world(m, "bx"), parse("K p")));
    CHECK_FALSE(in_language(m, world(m, "bz"), parse("A q")));
}

TEST_CASE("three-valued truth at the fixture worlds") {
    const AwarenessModel& m = fixtures().figure3;
    CHECK(truth(m, world(m, "rx"), parse("p")) == TruthStatus::True);
    CHECK(truth(m, world(m, "by"), parse("p")) == TruthStatus::False);
    CHECK(truth(m, world(m, "bx"), parse("q")) == TruthStatus::Undefined);
    for (std::size_t w = 0; w < m.frame.size(); ++w)
        CHECK(truth(m, w, parse("1")) == TruthStatus::True);
    // an unaware world below aware successors: knowledge of p fails because
    // a successor refutes p, not because anything is undefined
    CHECK(truth(m, world(m, "bx"), parse("K p")) == TruthStatus::False);
    CHECK(truth(m, world(m, "bz"), parse("K ~p")) == TruthStatus::True);
}

TEST_CASE("knowledge is false, not undefined, past an unaware successor") {
    AwarenessModel nm = necessitation_counterexample_model();
    std::size_t hi = world(nm, "hi");
    CHECK(truth(nm, hi, parse("p")) == TruthStatus::True);
    CHECK(truth(nm, hi, parse("K p")) == TruthStatus::False);
    CHECK(truth(nm, hi, parse("K (p | ~p)")) == TruthStatus::False);
    CHECK(truth(nm, world(nm, "lo"), parse("p")) == TruthStatus::Undefined);
}

TEST_CASE("extensions compose the valuation and language maps") {
    const AwarenessModel& m = fixtures().figure3;
    Extension top_ext = extension(m, parse("1"));
    CHECK(top_ext.truth == WorldMask::full(5));
    CHECK(top_ext.domain == WorldMask::full(5));

    std::size_t p = *m.prop_index("p"), q = *m.prop_index("q");
    Extension pe = extension(m, parse("p"));
    CHECK(pe.truth == m.val[p]);
    CHECK(pe.domain == m.lang[p]);
    Extension nq = extension(m, parse("~q"));
    CHECK(nq.domain == m.lang[q]);
    CHECK(nq.truth == m.lang[q].diff(m.val[q]));
}

TEST_CASE("relative validity: true wherever defined") {
    const AwarenessModel& m = fixtures().figure3;
    CHECK(model_valid(m, parse("1")));
    CHECK(model_valid(m, parse("~ K 0")));
    CHECK(model_valid(m, parse("q -> p")));
    CHECK_FALSE(model_valid(m, parse("p")));
    CHECK_FALSE(model_valid(m, parse("q")));
}

TEST_CASE("the partitional variant validates the equivalence axioms") {
    AwarenessModel m = partitional_variant();
    REQUIRE(check_model(m).passed);
    CHECK(frame_property(m.frame, FrameProperty::Reflexive));
    CHECK(frame_property(m.frame, FrameProperty::Transitive));
    CHECK(frame_property(m.frame, FrameProperty::Euclidean));
    CHECK(frame_property(m.frame, FrameProperty::KaCondition));
    CHECK(model_valid(m, parse("q -> p")));
    for (const char* ax : {"K p -> p", "K p -> K K p", "A p <-> K A p",
                           "(~K p & A p) -> K ~K p", "K q -> q"})
        CHECK(model_valid(m, parse(ax)));
}

TEST_CASE("frame properties on hand-built relations") {
    AwarenessFrame irrefl = make_frame({"a", "b"}, {}, {{"a", "b"}, {"b", "a"}});
    CHECK(frame_property(irrefl, FrameProperty::Serial));
    CHECK_FALSE(frame_property(irrefl, FrameProperty::Reflexive));
    CHECK_FALSE(frame_property(irrefl, FrameProperty::Transitive));

    AwarenessFrame nec = make_frame({"a", "b"}, {{"b", "a"}}, {{"a", "b"}, {"b", "b"}});
    CHECK(frame_property(nec, FrameProperty::NecCondition));
    AwarenessFrame not_nec = make_frame({"a", "b"}, {}, {{"a", "b"}, {"b", "b"}});
    CHECK_FALSE(frame_property(not_nec, FrameProperty::NecCondition));

    // every transitive relation meets the KA condition whatever the order is
    CHECK(frame_property(nec, FrameProperty::Transitive));
    CHECK(frame_property(nec, FrameProperty::KaCondition));
}

TEST_CASE("random models are well-formed and validate the core axioms") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        AwarenessModel m = random_model(seed, {});
        REQUIRE(check_model(m).passed);
        CHECK(model_valid(m, parse("~ K 0")));
        CHECK(model_valid(m, parse("K p -> A p")));
        CHECK(model_valid(m, parse("(K p & K(p -> q)) -> K q")));
        CHECK(model_valid(m, parse("A (p & q) -> A (q | ~p)")));
        if (model_valid(m, parse("p | ~p")))
            CHECK(model_valid(m, parse("A(p | ~p) -> K(p | ~p)")));
    }
    AwarenessModel part = random_model(3, {.partitional = true});
    CHECK(check_model(part).passed);
    CHECK(frame_property(part.frame, FrameProperty::Reflexive));
    CHECK(frame_property(part.frame, FrameProperty::Euclidean));
}

TEST_CASE("necessitation fails: a valid formula that is not known") {
    AwarenessModel nm = necessitation_counterexample_model();
    REQUIRE(check_model(nm).passed);
    CHECK(model_valid(nm, parse("p")));
    CHECK_FALSE(model_valid(nm, parse("K p")));
    CHECK(model_valid(nm, parse("p | ~p")));
    CHECK_FALSE(model_valid(nm, parse("K (p | ~p)")));
}

TEST_CASE("language extensions stay upward closed through every connective") {
    FormulaArena arena = FormulaArena::build({"p", "q"}, 4, /*include_modal=*/true, 2);
    std::vector<AwarenessModel> models = {fixtures().figure3,
                                          necessitation_counterexample_model()};
    for (std::uint64_t seed = 100; seed < 110; ++seed)
        models.push_back(random_model(seed, {}));
    std::vector<Extension> exts;
    for (const auto& m : models) {
        ext_all(arena, m, exts);
        for (std::size_t i = 0; i < arena.size(); ++i) {
            CHECK(exts[i].truth.subset_of(exts[i].domain));
            for (std::size_t w = 0; w < m.frame.size(); ++w)
                if (exts[i].domain.test(w))
                    CHECK(m.frame.above[w].subset_of(exts[i].domain));
        }
    }
}

TEST_CASE("definedness routes agree: containment versus composition") {
    FormulaArena arena = FormulaArena::build({"p", "q"}, 3, true);
    std::vector<Extension> exts;
    for (std::uint64_t seed = 40; seed < 45; ++seed) {
        AwarenessModel m = random_model(seed, {});
        ext_all(arena, m, exts);
        for (std::size_t i = 0; i < arena.size(); ++i) {
            Formula f = arena.to_formula(i);
            for (std::size_t w = 0; w < m.frame.size(); ++w)
                CHECK(in_language(m, w, f) == exts[i].domain.test(w));
        }
    }
}
