#ifndef RBA_SUITES_HPP
#define RBA_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rba/duality.hpp"
#include "rba/filters.hpp"
#include "rba/frames.hpp"
#include "rba/glue.hpp"
#include "rba/modal.hpp"

namespace rba {

struct SuiteLine {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteLine> lines;

    bool passed() const {
        for (const auto& l : lines)
            if (!l.passed) return false;
        return true;
    }
};

struct Fixtures {
    AlgebraTable example1;
    AlgebraTable appendixA;
    Mrba example2;
    Assignment example2_assign;
    AwarenessModel figure3;
};

/// Loads example1.rba.json, appendixA.rba.json, example2.mrba.json and
/// figure3.model.json from the directory.
Fixtures load_fixtures(const std::string& dir);

struct SuiteOptions {
    std::uint64_t seed = 0;
    unsigned jobs = 0;              // 0 = available parallelism
    std::size_t budget = 5;         // soundness metavariable budget (sum per instance)
    std::size_t modal_depth = 2;    // instance modal depth bound
    std::size_t random_models = 100;
    std::size_t duality_budget = 6;
    std::size_t glued_samples = 50;
    bool check_fD = true;
};

/// Axiom instances valid on the model corpus, plus the constructed
/// counterexample showing plain necessitation fails.
SuiteResult run_soundness(const Fixtures& fx, const SuiteOptions& opts = {});

/// Frame-property correspondences on exhaustive small frames, with
/// counterexample frames for each property.
SuiteResult run_correspondence(const Fixtures& fx, const SuiteOptions& opts = {});

/// Representation embedding verified on every fixture, family counts against
/// brute force, and the filter-extension sweep.
SuiteResult run_stone(const Fixtures& fx, const SuiteOptions& opts = {});

/// Both translation directions with the full battery, the image comparison
/// against the shipped model fixture, and validity round trips.
SuiteResult run_duality(const Fixtures& fx, const SuiteOptions& opts = {});

/// Classical-tautology bridge: modal-free validity under every assignment
/// coincides with the truth-table verdict, exhaustively over the battery.
SuiteResult run_tautology_bridge(const Fixtures& fx, const SuiteOptions& opts = {});

/// Exhaustive order and domain laws for one algebra: the order is a preorder,
/// meets/joins of upper bounds are upper bounds, domain projections behave,
/// and the relative-top identities hold.
AxiomReport check_order_laws(const AlgebraTable& a);

/// Two-world model where a valid formula is known nowhere: the upper world
/// sees an unaware one.
AwarenessModel necessitation_counterexample_model();

}  // namespace rba

#endif
