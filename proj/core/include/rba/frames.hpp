#ifndef RBA_FRAMES_HPP
#define RBA_FRAMES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rba/algebra.hpp"  // AxiomReport
#include "rba/formula.hpp"

namespace rba {

/// Set of worlds, up to 128 per frame.
struct WorldMask {
    std::uint64_t lo = 0, hi = 0;

    static WorldMask full(std::size_t n);
    bool test(std::size_t i) const {
        return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
    }
    void set(std::size_t i) {
        if (i < 64) lo |= std::uint64_t(1) << i;
        else hi |= std::uint64_t(1) << (i - 64);
    }
    bool none() const { return lo == 0 && hi == 0; }
    bool subset_of(WorldMask o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
    friend WorldMask operator&(WorldMask a, WorldMask b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend WorldMask operator|(WorldMask a, WorldMask b) { return {a.lo | b.lo, a.hi | b.hi}; }
    WorldMask diff(WorldMask o) const { return {lo & ~o.lo, hi & ~o.hi}; }
    std::size_t count() const;
    friend bool operator==(const WorldMask&, const WorldMask&) = default;
    friend auto operator<=>(const WorldMask&, const WorldMask&) = default;
};

inline constexpr std::size_t kMaxWorlds = 128;

/// Pre-ordered worlds with a serial accessibility relation.
struct AwarenessFrame {
    std::vector<std::string> worlds;
    std::vector<WorldMask> above;   // above[w] = { w' | w' >= w }, reflexive-transitive
    std::vector<WorldMask> access;  // access[w] = R(w)

    std::size_t size() const { return worlds.size(); }
    std::optional<std::size_t> find(const std::string& name) const;
};

/// Frame plus per-proposition language and valuation sets, with
/// lang upward closed and val(p) ⊆ lang(p).
struct AwarenessModel {
    AwarenessFrame frame;
    std::vector<std::string> props;
    std::vector<WorldMask> lang;  // indexed like props
    std::vector<WorldMask> val;

    std::optional<std::size_t> prop_index(const std::string& name) const;
};

/// Builds a frame from generator relations; the preorder is closed
/// reflexively and transitively on construction.
AwarenessFrame make_frame(std::vector<std::string> worlds,
                          const std::vector<std::pair<std::string, std::string>>& geq,
                          const std::vector<std::pair<std::string, std::string>>& access);

AwarenessModel make_model(AwarenessFrame frame, std::vector<std::string> props,
                          std::vector<WorldMask> lang, std::vector<WorldMask> val);

/// Verifies seriality, the preorder laws, upward closure of every lang set,
/// and val ⊆ lang, with witnesses.
AxiomReport check_model(const AwarenessModel& m);

enum class TruthStatus { Undefined, True, False };

/// φ is defined at w exactly when every proposition of φ is in w's language.
bool in_language(const AwarenessModel& m, std::size_t world, const Formula& f);

/// Three-valued truth. A formula that is defined at w but has an undefined or
/// false subcase behind K evaluates to False there, never Undefined.
TruthStatus truth(const AwarenessModel& m, std::size_t world, const Formula& f);

struct Extension {
    WorldMask truth;   // V(φ)
    WorldMask domain;  // L(φ)

    friend bool operator==(const Extension&, const Extension&) = default;
};

// One compositional step per connective; extension() and the bulk sweep
// engines all go through these.
inline Extension compose_neg(Extension e) { return {e.domain.diff(e.truth), e.domain}; }
inline Extension compose_and(Extension a, Extension b) {
    return {a.truth & b.truth, a.domain & b.domain};
}
inline Extension compose_know(const AwarenessFrame& fr, Extension e) {
    WorldMask t;
    for (std::size_t w = 0; w < fr.size(); ++w)
        if (e.domain.test(w) && fr.access[w].subset_of(e.truth)) t.set(w);
    return {t, e.domain};
}
inline Extension compose_aware(const AwarenessFrame& fr, Extension e) {
    WorldMask t;
    for (std::size_t w = 0; w < fr.size(); ++w)
        if (e.domain.test(w) && fr.access[w].subset_of(e.domain)) t.set(w);
    return {t, e.domain};
}

Extension extension(const AwarenessModel& m, const Formula& f);

/// True everywhere defined: V(φ) = L(φ).
bool model_valid(const AwarenessModel& m, const Formula& f);

enum class FrameProperty { Serial, Reflexive, Transitive, Euclidean, KaCondition, NecCondition };

bool frame_property(const AwarenessFrame& f, FrameProperty which);

struct RandomModelOptions {
    std::size_t max_worlds = 4;
    std::vector<std::string> props = {"p", "q"};
    bool partitional = false;
};

AwarenessModel random_model(std::uint64_t seed, const RandomModelOptions& opts = {});

/// Bijection preserving >=, R, lang, and val; world names are ignored.
std::optional<std::vector<std::size_t>> find_model_isomorphism(const AwarenessModel& a,
                                                               const AwarenessModel& b);

}  // namespace rba

#endif
