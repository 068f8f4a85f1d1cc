#include "rba/iso.hpp"

#include <algorithm>
#include <array>

namespace rba {

namespace {

// Cheap invariant fingerprint; isomorphic elements must agree on it.
struct Fingerprint {
    std::size_t upset = 0, downset = 0, domain = 0;
    bool is_top = false, is_bottom = false, self_neg = false;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::vector<Fingerprint> fingerprints(const AlgebraTable& a) {
    std::vector<Fingerprint> fp(a.size());
    for (ElementId x = 0; x < a.size(); ++x) {
        Fingerprint& f = fp[x];
        ElementId tx = relative_top(a, x);
        for (ElementId y = 0; y < a.size(); ++y) {
            if (leq(a, x, y)) ++f.upset;
            if (leq(a, y, x)) ++f.downset;
            if (relative_top(a, y) == tx) ++f.domain;
        }
        f.is_top = (x == a.top());
        f.is_bottom = (x == a.bottom());
        f.self_neg = (a.neg(x) == x);
    }
    return fp;
}

struct Search {
    const AlgebraTable& a;
    const AlgebraTable& b;
    std::vector<Fingerprint> fa, fb;
    std::vector<ElementId> map;        // a -> b, kUnset where unassigned
    std::vector<bool> used;            // b side
    static constexpr ElementId kUnset = ~ElementId{0};

    bool consistent(ElementId x, ElementId y) const {
        if (fa[x] != fb[y]) return false;
        // check every operation instance whose operands are already placed
        if (map[a.neg(x)] != kUnset && map[a.neg(x)] != b.neg(y)) return false;
        for (ElementId w = 0; w < a.size(); ++w) {
            if (map[w] == kUnset) continue;
            ElementId mw = map[w];
            if (map[a.meet(x, w)] != kUnset && map[a.meet(x, w)] != b.meet(y, mw))
                return false;
            if (map[a.meet(w, x)] != kUnset && map[a.meet(w, x)] != b.meet(mw, y))
                return false;
            if (map[a.join(x, w)] != kUnset && map[a.join(x, w)] != b.join(y, mw))
                return false;
            if (map[a.join(w, x)] != kUnset && map[a.join(w, x)] != b.join(mw, y))
                return false;
        }
        if (map[a.meet(x, x)] != kUnset && map[a.meet(x, x)] != b.meet(y, y))
            return false;
        return true;
    }

    bool extend(ElementId x) {
        if (x == a.size()) return verify();
        std::vector<ElementId> candidates;
        for (ElementId y = 0; y < b.size(); ++y)
            if (!used[y]) candidates.push_back(y);
        // label hints: equal labels first
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](ElementId l, ElementId r) {
                             return (b.labels[l] == a.labels[x]) >
                                    (b.labels[r] == a.labels[x]);
                         });
        for (ElementId y : candidates) {
            if (!consistent(x, y)) continue;
            map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            map[x] = kUnset;
            used[y] = false;
        }
        return false;
    }

    bool verify() const {
        if (map[a.top()] != b.top() || map[a.bottom()] != b.bottom()) return false;
        for (ElementId x = 0; x < a.size(); ++x) {
            if (map[a.neg(x)] != b.neg(map[x])) return false;
            for (ElementId y = 0; y < a.size(); ++y) {
                if (map[a.meet(x, y)] != b.meet(map[x], map[y])) return false;
                if (map[a.join(x, y)] != b.join(map[x], map[y])) return false;
            }
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<ElementId>> find_isomorphism(const AlgebraTable& a,
                                                       const AlgebraTable& b) {
    if (a.size() != b.size()) return std::nullopt;
    Search s{a, b, fingerprints(a), fingerprints(b),
             std::vector<ElementId>(a.size(), Search::kUnset),
             std::vector<bool>(b.size(), false)};
    // quick multiset comparison of fingerprints
    auto key = [](const Fingerprint& f) {
        return std::array<std::size_t, 6>{f.upset, f.downset, f.domain,
                                          std::size_t(f.is_top),
                                          std::size_t(f.is_bottom),
                                          std::size_t(f.self_neg)};
    };
    std::vector<std::array<std::size_t, 6>> ka, kb;
    for (const auto& f : s.fa) ka.push_back(key(f));
    for (const auto& f : s.fb) kb.push_back(key(f));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

}  // namespace rba
