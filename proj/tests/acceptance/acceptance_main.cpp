#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "rba/duality.hpp"
#include "rba/error.hpp"
#include "rba/glue.hpp"
#include "rba/io.hpp"
#include "rba/iso.hpp"
#include "rba/suites.hpp"

using namespace rba;

namespace {

std::string fixture_dir() {
#ifdef RBA_FIXTURE_DIR
    return RBA_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

const Fixtures& fx() {
    static Fixtures f = load_fixtures(fixture_dir());
    return f;
}

struct Criterion {
    const char* id;
    const char* name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
    void finish() {
        std::printf("[%s] %-58s %s (%.2fs)\n", id, name, ok ? "PASS" : "FAIL",
                    elapsed());
        std::fflush(stdout);
    }
};

#define ACCEPT(cond)      \
    do {                  \
        bool c__ = (cond); \
        CHECK(c__);       \
        crit.ok &= c__;   \
    } while (0)

std::vector<AlgebraTable> concrete_fixtures() {
    std::vector<AlgebraTable> out;
    for (std::size_t k = 0; k <= 3; ++k) {
        std::vector<std::string> pts;
        for (std::size_t i = 0; i < k; ++i) pts.push_back(std::string(1, char('x' + i)));
        out.push_back(materialize(make_universe(pts)));
    }
    return out;
}

AlgebraTable mutate_one_entry(const AlgebraTable& base, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    AlgebraTable a = base;
    const std::size_t n = a.size();
    std::uniform_int_distribution<int> which(0, 2);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    int table = which(rng);
    ElementId fresh = pick(rng);
    if (table == 2) {
        ElementId x = pick(rng);
        while (fresh == a.neg_table[x]) fresh = pick(rng);
        a.neg_table[x] = fresh;
    } else {
        std::size_t cell = pick(rng) * n + pick(rng);
        auto& t = table == 0 ? a.meet_table : a.join_table;
        while (fresh == t[cell]) fresh = pick(rng);
        t[cell] = fresh;
    }
    return a;
}

const SuiteResult& duality_suite() {
    static SuiteResult res = run_duality(fx(), {});
    return res;
}

bool line_passed(const SuiteResult& res, const std::string& needle, double* secs = nullptr) {
    for (const auto& l : res.lines)
        if (l.name.find(needle) != std::string::npos) {
            if (secs) *secs = l.seconds;
            return l.passed;
        }
    return false;
}

}  // namespace

TEST_CASE("criterion 1: axiom suite over fixtures plus seeded mutations") {
    Criterion crit{"criterion 1", "axiom suite and mutation detection"};
    ACCEPT(fx().example1.size() == 12);
    ACCEPT(fx().appendixA.size() == 8);
    ACCEPT(check_rba(fx().example1).passed);
    ACCEPT(check_rba(fx().appendixA).passed);
    for (const AlgebraTable& a : concrete_fixtures()) ACCEPT(check_rba(a).passed);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        AxiomReport rep = check_rba(mutate_one_entry(fx().example1, seed));
        ACCEPT(!rep.passed);
        ACCEPT(!rep.violations.empty());
        if (!rep.violations.empty()) {
            ACCEPT(!rep.violations.front().axiom.empty());
            ACCEPT(!rep.violations.front().witness.empty());
        }
    }
    ACCEPT(crit.elapsed() < 5.0);
    crit.finish();
}

TEST_CASE("criterion 2: local Boolean domains and projection homomorphisms") {
    Criterion crit{"criterion 2", "local domains Boolean, projections commute"};
    std::vector<const AlgebraTable*> tables = {&fx().example1, &fx().appendixA};
    std::vector<AlgebraTable> crbas = concrete_fixtures();
    for (const auto& a : crbas) tables.push_back(&a);
    for (const AlgebraTable* a : tables) {
        for (ElementId x = 0; x < a->size(); ++x) {
            bool local_ok = true;
            try {
                LocalBoolean loc = extract_local_boolean(*a, x);
                local_ok = check_boolean(loc.table).passed;
            } catch (const Error&) {
                local_ok = false;
            }
            ACCEPT(local_ok);
            ElementId tx = relative_top(*a, x);
            bool commutes = true;
            for (ElementId y = 0; y < a->size() && commutes; ++y) {
                if (!leq(*a, tx, relative_top(*a, y))) continue;
                if (a->neg(project(*a, x, y)) != project(*a, x, a->neg(y)))
                    commutes = false;
                for (ElementId z = 0; z < a->size() && commutes; ++z) {
                    if (!leq(*a, tx, relative_top(*a, z))) continue;
                    if (project(*a, x, a->meet(y, z)) !=
                            a->meet(project(*a, x, y), project(*a, x, z)) ||
                        project(*a, x, a->join(y, z)) !=
                            a->join(project(*a, x, y), project(*a, x, z)))
                        commutes = false;
                }
            }
            ACCEPT(commutes);
        }
    }
    ACCEPT(crit.elapsed() < 5.0);
    crit.finish();
}

TEST_CASE("criterion 3: order laws over fixtures and glued random algebras") {
    Criterion crit{"criterion 3", "order laws, fixtures plus 50 glued samples"};
    ACCEPT(check_order_laws(fx().example1).passed);
    ACCEPT(check_order_laws(fx().appendixA).passed);
    for (const AlgebraTable& a : concrete_fixtures())
        ACCEPT(check_order_laws(a).passed);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        AlgebraTable a = glue(random_glued_input(seed));
        ACCEPT(a.size() <= 20);
        ACCEPT(check_rba(a).passed);
        ACCEPT(check_order_laws(a).passed);
    }
    crit.finish();
}

TEST_CASE("criterion 4: representation suite") {
    Criterion crit{"criterion 4", "embedding verified, family count, image shape"};
    SuiteResult res = run_stone(fx(), {});
    ACCEPT(line_passed(res, "embedding injective"));
    ACCEPT(line_passed(res, "family size"));
    ACCEPT(line_passed(res, "image matches"));
    ACCEPT(crit.elapsed() < 30.0);
    crit.finish();
}

TEST_CASE("criterion 5: filter extension against brute force") {
    Criterion crit{"criterion 5", "extension sweep with witness cross-check"};
    SuiteResult res = run_stone(fx(), {});
    ACCEPT(line_passed(res, "filter extension matches brute-force"));
    ACCEPT(crit.elapsed() < 60.0);
    crit.finish();
}

TEST_CASE("criterion 6: classical bridge at seven connectives") {
    Criterion crit{"criterion 6", "tautology equivalence, zero exceptions"};
    SuiteResult res = run_tautology_bridge(fx(), {});
    for (const auto& l : res.lines) ACCEPT(l.passed);
    ACCEPT(crit.elapsed() < 600.0);
    crit.finish();
}

TEST_CASE("criterion 7: soundness sweep and necessitation counterexample") {
    Criterion crit{"criterion 7", "axiom instances valid on fixtures and 100 models"};
    SuiteResult res = run_soundness(fx(), {});
    for (const auto& l : res.lines) ACCEPT(l.passed);
    crit.finish();
}

TEST_CASE("criterion 8: frame correspondences with counterexamples") {
    Criterion crit{"criterion 8", "T/4/5A/KA over exhaustive three-world frames"};
    SuiteResult res = run_correspondence(fx(), {});
    for (const auto& l : res.lines) ACCEPT(l.passed);
    crit.finish();
}

TEST_CASE("criterion 9: translation propositions and the fixture image") {
    Criterion crit{"criterion 9", "zero mismatches, dual isomorphic to fixture"};
    const SuiteResult& res = duality_suite();
    double prop_secs = 0;
    ACCEPT(line_passed(res, "model-to-algebra translation", &prop_secs));
    ACCEPT(line_passed(res, "algebra-to-model translation"));
    ACCEPT(line_passed(res, "derived dual model isomorphic"));
    ACCEPT(line_passed(res, "knowledge membership matches"));
    ACCEPT(line_passed(res, "embedding carries the operator"));
    double total = 0;
    for (const auto& l : res.lines) total += l.seconds;
    ACCEPT(total < 120.0);
    crit.finish();
}

TEST_CASE("criterion 10: validity agreement across the dual") {
    Criterion crit{"criterion 10", "algebraic validity equals dual model validity"};
    ACCEPT(line_passed(duality_suite(), "algebraic validity equals model validity"));
    crit.finish();
}
