#include "rba/glue.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "rba/error.hpp"

namespace rba {

namespace {

struct Index {
    std::size_t num_blocks;
    // hom[i][j] maps element ids of block i to ids of block j, present iff i >= j or i == j
    std::vector<std::vector<std::vector<ElementId>>> hom;
    std::vector<std::vector<bool>> geq;  // geq[i][j]: block i >= block j
    std::vector<std::vector<std::size_t>> meet_block;
    std::size_t top_block = 0;
};

std::size_t block_of_name(const GlueInput& in, const std::string& name) {
    for (std::size_t i = 0; i < in.blocks.size(); ++i)
        if (in.blocks[i].name == name) return i;
    throw Error("glue: unknown block '" + name + "'");
}

Index build_index(const GlueInput& in) {
    const std::size_t k = in.blocks.size();
    if (k == 0) throw Error("glue: no blocks");
    Index ix;
    ix.num_blocks = k;
    ix.hom.assign(k, std::vector<std::vector<ElementId>>(k));
    ix.geq.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        ix.geq[i][i] = true;
        ix.hom[i][i].resize(in.blocks[i].table.size());
        for (ElementId e = 0; e < in.blocks[i].table.size(); ++e) ix.hom[i][i][e] = e;
    }
    for (const auto& [key, mapping] : in.homs) {
        std::size_t from = block_of_name(in, key.first);
        std::size_t to = block_of_name(in, key.second);
        if (from == to) throw Error("glue: self-hom on block '" + key.first + "'");
        const AlgebraTable& ft = in.blocks[from].table;
        const AlgebraTable& tt = in.blocks[to].table;
        std::vector<ElementId> h(ft.size(), 0);
        std::vector<bool> given(ft.size(), false);
        for (const auto& [fname, tname] : mapping) {
            auto fe = ft.find(fname);
            auto te = tt.find(tname);
            if (!fe || !te)
                throw Error("glue: hom " + key.first + "->" + key.second +
                            " names unknown element '" + (fe ? tname : fname) + "'");
            h[*fe] = *te;
            given[*fe] = true;
        }
        if (!std::all_of(given.begin(), given.end(), [](bool b) { return b; }))
            throw Error("glue: hom " + key.first + "->" + key.second + " is not total");
        // Boolean homomorphism check
        if (h[ft.top()] != tt.top())
            throw Error("glue: map " + key.first + "->" + key.second +
                        " does not preserve 1");
        for (ElementId x = 0; x < ft.size(); ++x) {
            if (h[ft.neg(x)] != tt.neg(h[x]))
                throw Error("glue: map " + key.first + "->" + key.second +
                            " is not a homomorphism (negation at '" + ft.label(x) + "')");
            for (ElementId y = 0; y < ft.size(); ++y) {
                if (h[ft.meet(x, y)] != tt.meet(h[x], h[y]) ||
                    h[ft.join(x, y)] != tt.join(h[x], h[y]))
                    throw Error("glue: map " + key.first + "->" + key.second +
                                " is not a homomorphism (at '" + ft.label(x) + "','" +
                                ft.label(y) + "')");
            }
        }
        ix.hom[from][to] = std::move(h);
        ix.geq[from][to] = true;
    }
    // order must be a partial order: antisymmetry and transitivity-with-coherence
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && ix.geq[i][j] && ix.geq[j][i])
                throw Error("glue: blocks '" + in.blocks[i].name + "' and '" +
                            in.blocks[j].name + "' order each other");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) {
                if (i == j || j == l || i == l) continue;
                if (!ix.geq[i][j] || !ix.geq[j][l]) continue;
                if (!ix.geq[i][l])
                    throw Error("glue: missing composite homomorphism " +
                                in.blocks[i].name + "->" + in.blocks[l].name);
                for (ElementId e = 0; e < in.blocks[i].table.size(); ++e)
                    if (ix.hom[i][l][e] != ix.hom[j][l][ix.hom[i][j][e]])
                        throw Error("glue: homomorphisms do not compose coherently (" +
                                    in.blocks[i].name + "->" + in.blocks[j].name + "->" +
                                    in.blocks[l].name + ")");
            }
    // pairwise meets must exist (greatest common lower bound)
    ix.meet_block.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<std::size_t> lower;
            for (std::size_t m = 0; m < k; ++m)
                if (ix.geq[i][m] && ix.geq[j][m]) lower.push_back(m);
            std::size_t best = k;
            for (std::size_t m : lower) {
                bool greatest = true;
                for (std::size_t o : lower)
                    if (!ix.geq[m][o]) { greatest = false; break; }
                if (greatest) { best = m; break; }
            }
            if (best == k)
                throw Error("glue: blocks '" + in.blocks[i].name + "' and '" +
                            in.blocks[j].name + "' have no meet; the index is not a semilattice");
            ix.meet_block[i][j] = best;
        }
    // a greatest block carries the global 1
    std::size_t top = k;
    for (std::size_t i = 0; i < k; ++i) {
        bool greatest = true;
        for (std::size_t j = 0; j < k; ++j)
            if (!ix.geq[i][j]) { greatest = false; break; }
        if (greatest) { top = i; break; }
    }
    if (top == k) throw Error("glue: no greatest block in the domain order");
    ix.top_block = top;
    return ix;
}

}  // namespace

AlgebraTable glue(const GlueInput& in) {
    for (const auto& b : in.blocks) {
        AxiomReport rep = check_boolean(b.table);
        if (!rep.passed)
            throw Error("glue: block '" + b.name + "' is not a Boolean algebra (" +
                        rep.violations.front().axiom + ")");
    }
    Index ix = build_index(in);
    const std::size_t k = in.blocks.size();

    std::vector<std::size_t> offset(k, 0);
    std::size_t n = 0;
    for (std::size_t i = 0; i < k; ++i) {
        offset[i] = n;
        n += in.blocks[i].table.size();
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    std::set<std::string> seen;
    for (const auto& b : in.blocks)
        for (const auto& l : b.table.labels) {
            if (!seen.insert(l).second)
                throw Error("glue: element label '" + l + "' appears in two blocks");
            labels.push_back(l);
        }

    auto lower = [&](std::size_t blk, ElementId e, std::size_t to) {
        return ix.hom[blk][to][e];
    };
    std::vector<ElementId> meet(n * n), join(n * n), neg(n);
    for (std::size_t bi = 0; bi < k; ++bi) {
        const AlgebraTable& ti = in.blocks[bi].table;
        for (ElementId x = 0; x < ti.size(); ++x) {
            std::size_t gx = offset[bi] + x;
            neg[gx] = static_cast<ElementId>(offset[bi] + ti.neg(x));
            for (std::size_t bj = 0; bj < k; ++bj) {
                const AlgebraTable& tm = in.blocks[ix.meet_block[bi][bj]].table;
                std::size_t m = ix.meet_block[bi][bj];
                for (ElementId y = 0; y < in.blocks[bj].table.size(); ++y) {
                    std::size_t gy = offset[bj] + y;
                    ElementId lx = lower(bi, x, m), ly = lower(bj, y, m);
                    meet[gx * n + gy] = static_cast<ElementId>(offset[m] + tm.meet(lx, ly));
                    join[gx * n + gy] = static_cast<ElementId>(offset[m] + tm.join(lx, ly));
                }
            }
        }
    }
    // the least block exists in any finite meet-semilattice: fold the meets
    std::size_t least = 0;
    for (std::size_t i = 1; i < k; ++i) least = ix.meet_block[least][i];
    ElementId top = static_cast<ElementId>(offset[ix.top_block] +
                                           in.blocks[ix.top_block].table.top());
    ElementId bottom = static_cast<ElementId>(offset[least] +
                                              in.blocks[least].table.bottom());
    AlgebraTable out = make_table(n, std::move(meet), std::move(join), std::move(neg),
                                  top, bottom, std::move(labels));
    AxiomReport rep = check_rba(out);
    if (!rep.passed)
        throw Error("glue: incoherent input, result fails " +
                    rep.violations.front().axiom);
    return out;
}

namespace {

AlgebraTable powerset_block(std::size_t atoms, const std::string& prefix) {
    const std::size_t sz = std::size_t(1) << atoms;
    std::vector<ElementId> meet(sz * sz), join(sz * sz), neg(sz);
    std::vector<std::string> labels(sz);
    for (std::size_t a = 0; a < sz; ++a) {
        neg[a] = static_cast<ElementId>((sz - 1) & ~a);
        labels[a] = prefix + std::to_string(a);
        for (std::size_t b = 0; b < sz; ++b) {
            meet[a * sz + b] = static_cast<ElementId>(a & b);
            join[a * sz + b] = static_cast<ElementId>(a | b);
        }
    }
    return make_table(sz, std::move(meet), std::move(join), std::move(neg),
                      static_cast<ElementId>(sz - 1), 0, std::move(labels));
}

}  // namespace

GlueInput random_glued_input(std::uint64_t seed, std::size_t max_elements) {
    std::mt19937_64 rng(seed);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<std::size_t> atoms(k);
    for (;;) {
        std::size_t total = 0;
        for (int i = 0; i < k; ++i) {
            // a trivial block is only admitted as the least one: stacking a
            // second trivial domain produces an algebra that satisfies the
            // laws but has no representation points (see the filters tests)
            std::size_t lo = (i + 1 < k) ? 1 : 0;
            atoms[i] = std::uniform_int_distribution<std::size_t>(lo, 3)(rng);
            total += std::size_t(1) << atoms[i];
        }
        if (total <= max_elements) break;
    }
    GlueInput in;
    for (int i = 0; i < k; ++i)
        in.blocks.push_back({"b" + std::to_string(i),
                             powerset_block(atoms[i], "b" + std::to_string(i) + "_")});
    // Chain with block 0 greatest. step[i]: atoms(b_i) -> atoms(b_{i-1});
    // a hom b_j -> b_i is the preimage along the composed atom function,
    // which makes the family coherent by construction.
    std::vector<std::vector<std::size_t>> step(k);
    for (int i = 1; i < k; ++i) {
        step[i].resize(atoms[i]);
        for (std::size_t a = 0; a < atoms[i]; ++a)
            step[i][a] =
                std::uniform_int_distribution<std::size_t>(0, atoms[i - 1] - 1)(rng);
    }
    for (int i = 1; i < k; ++i) {
        for (int j = 0; j < i; ++j) {
            std::map<std::string, std::string> h;
            const AlgebraTable& ft = in.blocks[j].table;
            for (std::size_t e = 0; e < ft.size(); ++e) {
                std::size_t img = 0;
                for (std::size_t a = 0; a < atoms[i]; ++a) {
                    std::size_t up = a;
                    for (int l = i; l > j; --l) up = step[l][up];
                    if ((e >> up) & 1) img |= std::size_t(1) << a;
                }
                h[ft.label(static_cast<ElementId>(e))] =
                    in.blocks[i].table.label(static_cast<ElementId>(img));
            }
            in.homs[{in.blocks[j].name, in.blocks[i].name}] = std::move(h);
        }
    }
    return in;
}

}  // namespace rba
