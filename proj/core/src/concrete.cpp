#include "rba/concrete.hpp"

#include <algorithm>
#include <set>

#include "rba/error.hpp"

namespace rba {

Universe make_universe(std::vector<std::string> points, std::size_t max_points) {
    if (points.size() > max_points)
        throw Error("universe has " + std::to_string(points.size()) +
                    " points; the cap is " + std::to_string(max_points));
    std::set<std::string> seen;
    for (const auto& p : points) {
        if (p.empty()) throw Error("universe point names must be non-empty");
        if (!seen.insert(p).second) throw Error("duplicate universe point '" + p + "'");
    }
    return Universe{std::move(points)};
}

Universe parse_universe(const std::string& text, std::size_t max_points) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (i < text.size() && (text[i] == 'W' || text[i] == 'w')) {
        ++i;
        skip();
        if (i >= text.size() || text[i] != '=') throw ParseError("expected '=' after W", i);
        ++i;
        skip();
    }
    if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
    ++i;
    std::vector<std::string> points;
    for (;;) {
        skip();
        if (i < text.size() && text[i] == '}') { ++i; break; }
        std::string name;
        while (i < text.size() && text[i] != ',' && text[i] != '}' &&
               !std::isspace(static_cast<unsigned char>(text[i])))
            name += text[i++];
        if (name.empty()) throw ParseError("expected point name", i);
        points.push_back(name);
        skip();
        if (i < text.size() && text[i] == ',') ++i;
    }
    skip();
    if (i != text.size()) throw ParseError("trailing input after universe", i);
    return make_universe(std::move(points), max_points);
}

SubsetPair make_pair_checked(std::uint32_t truth, std::uint32_t domain) {
    if (truth & ~domain) throw Error("subset pair violates A ⊆ B");
    return {truth, domain};
}

std::string format_pair(const Universe& u, SubsetPair p) {
    auto set_text = [&](std::uint32_t mask) {
        std::string s = "{";
        bool first = true;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (mask >> i & 1u) {
                if (!first) s += ",";
                s += u.points[i];
                first = false;
            }
        return s + "}";
    };
    return "(" + set_text(p.truth) + "," + set_text(p.domain) + ")";
}

SubsetPair parse_pair(const Universe& u, const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw ParseError(std::string("expected '") + c + "'", i);
        ++i;
    };
    auto parse_set = [&]() -> std::uint32_t {
        expect('{');
        std::uint32_t mask = 0;
        for (;;) {
            skip();
            if (i < text.size() && text[i] == '}') { ++i; break; }
            std::string name;
            while (i < text.size() && text[i] != ',' && text[i] != '}' &&
                   !std::isspace(static_cast<unsigned char>(text[i])))
                name += text[i++];
            auto it = std::find(u.points.begin(), u.points.end(), name);
            if (it == u.points.end())
                throw ParseError("unknown point '" + name + "'", i);
            mask |= 1u << (it - u.points.begin());
            skip();
            if (i < text.size() && text[i] == ',') ++i;
        }
        return mask;
    };
    expect('(');
    std::uint32_t truth = parse_set();
    expect(',');
    std::uint32_t domain = parse_set();
    expect(')');
    skip();
    if (i != text.size()) throw ParseError("trailing input after pair", i);
    if (truth & ~domain) throw Error("subset pair violates A ⊆ B: " + text);
    return {truth, domain};
}

namespace {

std::size_t pow3(std::size_t k) {
    std::size_t v = 1;
    while (k--) v *= 3;
    return v;
}

}  // namespace

std::size_t index_of_pair(const Universe& u, SubsetPair p) {
    if (p.truth & ~p.domain) throw Error("subset pair violates A ⊆ B");
    if (p.domain & ~u.full_mask()) throw Error("pair domain outside the universe");
    // lexicographic on (B, A): all pairs with smaller B first, then A ascending
    std::size_t idx = 0;
    for (std::uint32_t b = 0; b < p.domain; ++b)
        idx += std::size_t(1) << __builtin_popcount(b);
    std::uint32_t a = 0;
    std::size_t within = 0;
    while (a != p.truth) {
        a = (a - p.domain) & p.domain;
        ++within;
    }
    return idx + within;
}

SubsetPair pair_of_index(const Universe& u, std::size_t index) {
    for (std::uint32_t b = 0;; ++b) {
        if (b > u.full_mask()) throw Error("pair index out of range");
        std::size_t block = std::size_t(1) << __builtin_popcount(b);
        if (index < block) {
            std::uint32_t a = 0;
            while (index--) a = (a - b) & b;
            return {a, b};
        }
        index -= block;
    }
}

AlgebraTable materialize(const Universe& u, std::size_t cap) {
    const std::size_t count = pow3(u.size());
    if (cap && count > cap)
        throw Error("concrete algebra over " + std::to_string(u.size()) +
                    " points has " + std::to_string(count) +
                    " elements, above the cap of " + std::to_string(cap));
    std::vector<SubsetPair> pairs;
    pairs.reserve(count);
    const std::uint32_t full = u.full_mask();
    for (std::uint32_t b = 0;; ++b) {
        std::uint32_t a = 0;
        for (;;) {
            pairs.push_back({a, b});
            if (a == b) break;
            a = (a - b) & b;
        }
        if (b == full) break;
    }
    auto index_of = [&](SubsetPair p) {
        std::size_t idx = 0;
        for (std::uint32_t b = 0; b < p.domain; ++b)
            idx += std::size_t(1) << __builtin_popcount(b);
        std::uint32_t a = 0;
        std::size_t within = 0;
        while (a != p.truth) {
            a = (a - p.domain) & p.domain;
            ++within;
        }
        return idx + within;
    };
    const std::size_t n = pairs.size();
    std::vector<ElementId> meet(n * n), join(n * n), neg(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        neg[i] = static_cast<ElementId>(index_of(c_neg(pairs[i])));
        labels[i] = format_pair(u, pairs[i]);
        for (std::size_t j = 0; j < n; ++j) {
            meet[i * n + j] = static_cast<ElementId>(index_of(c_meet(pairs[i], pairs[j])));
            join[i * n + j] = static_cast<ElementId>(index_of(c_join(pairs[i], pairs[j])));
        }
    }
    ElementId top = static_cast<ElementId>(index_of({full, full}));
    ElementId bottom = static_cast<ElementId>(index_of({0, 0}));
    return make_table(n, std::move(meet), std::move(join), std::move(neg), top,
                      bottom, std::move(labels));
}

}  // namespace rba
