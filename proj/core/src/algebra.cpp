#include "rba/algebra.hpp"

#include <algorithm>

#include "rba/error.hpp"

namespace rba {

std::optional<ElementId> AlgebraTable::find(const std::string& name) const {
    for (ElementId i = 0; i < n; ++i)
        if (labels[i] == name) return i;
    return std::nullopt;
}

AlgebraTable make_table(std::size_t n, std::vector<ElementId> meet,
                        std::vector<ElementId> join, std::vector<ElementId> neg,
                        ElementId top, ElementId bottom,
                        std::vector<std::string> labels) {
    if (n == 0) throw Error("algebra must have at least one element");
    if (meet.size() != n * n || join.size() != n * n || neg.size() != n)
        throw Error("operation tables are not total");
    auto in_range = [n](ElementId v) { return v < n; };
    if (!std::all_of(meet.begin(), meet.end(), in_range) ||
        !std::all_of(join.begin(), join.end(), in_range) ||
        !std::all_of(neg.begin(), neg.end(), in_range) || !in_range(top) ||
        !in_range(bottom))
        throw Error("table entry out of range");
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
    } else if (labels.size() != n) {
        throw Error("label count does not match element count");
    }
    AlgebraTable t;
    t.n = n;
    t.meet_table = std::move(meet);
    t.join_table = std::move(join);
    t.neg_table = std::move(neg);
    t.top_id = top;
    t.bottom_id = bottom;
    t.labels = std::move(labels);
    return t;
}

namespace {

class Reporter {
  public:
    Reporter(const AlgebraTable& alg, std::size_t cap) : alg_(alg), cap_(cap) {}

    void add(const char* axiom, std::initializer_list<ElementId> witness,
             const char* detail) {
        report_.passed = false;
        std::size_t count = 0;
        for (const auto& v : report_.violations)
            if (v.axiom == axiom) ++count;
        if (count >= cap_) return;
        AxiomViolation v;
        v.axiom = axiom;
        for (ElementId e : witness) v.witness.push_back(alg_.label(e));
        v.detail = detail;
        report_.violations.push_back(std::move(v));
    }

    AxiomReport take() { return std::move(report_); }

  private:
    const AlgebraTable& alg_;
    std::size_t cap_;
    AxiomReport report_;
};

void check_shared_unary_binary(const AlgebraTable& a, Reporter& r, bool boolean) {
    const char* a1 = boolean ? "ba1" : "rb1";
    const std::size_t n = a.size();
    for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = 0; y < n; ++y) {
            if (a.meet(x, y) != a.meet(y, x))
                r.add(a1, {x, y}, "meet is not commutative");
            if (a.join(x, y) != a.join(y, x))
                r.add(a1, {x, y}, "join is not commutative");
            if (!boolean) {
                if (a.neg(a.meet(x, y)) != a.join(a.neg(x), a.neg(y)))
                    r.add("rb1", {x, y}, "DeMorgan fails for meet");
                if (a.neg(a.join(x, y)) != a.meet(a.neg(x), a.neg(y)))
                    r.add("rb1", {x, y}, "DeMorgan fails for join");
            }
        }
    }
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = 0; z < n; ++z) {
                if (a.meet(a.meet(x, y), z) != a.meet(x, a.meet(y, z)))
                    r.add(a1, {x, y, z}, "meet is not associative");
                if (a.join(a.join(x, y), z) != a.join(x, a.join(y, z)))
                    r.add(a1, {x, y, z}, "join is not associative");
                if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
                    r.add(a1, {x, y, z}, "meet does not distribute over join");
                if (a.join(x, a.meet(y, z)) != a.meet(a.join(x, y), a.join(x, z)))
                    r.add(a1, {x, y, z}, "join does not distribute over meet");
            }
}

}  // namespace

AxiomReport check_rba(const AlgebraTable& a, const CheckOptions& opts) {
    if (opts.size_cap && a.size() > opts.size_cap)
        throw Error("algebra exceeds the element cap (" +
                    std::to_string(opts.size_cap) + "); raise --max-elements");
    Reporter r(a, opts.max_violations);
    const std::size_t n = a.size();
    for (ElementId x = 0; x < n; ++x) {
        if (a.meet(x, x) != x) r.add("rb2", {x}, "meet is not idempotent");
        if (a.join(x, x) != x) r.add("rb2", {x}, "join is not idempotent");
        if (a.meet(x, a.top()) != x) r.add("rb2", {x}, "1 is not a meet identity");
        if (a.neg(a.neg(x)) != x) r.add("rb2", {x}, "negation is not involutive");
        if (a.join(x, a.top()) != relative_top(a, x))
            r.add("rb3", {x}, "X v 1 differs from X v ~X");
        if (a.meet(x, a.bottom()) != a.bottom())
            r.add("rb4", {x}, "X ^ 0 differs from 0");
    }
    check_shared_unary_binary(a, r, /*boolean=*/false);
    for (ElementId x = 0; x < n; ++x) {
        ElementId tx = relative_top(a, x);
        for (ElementId y = 0; y < n; ++y) {
            if (!leq(a, tx, relative_top(a, y))) continue;  // need 1_y >= 1_x
            if (a.neg(a.meet(y, tx)) != a.meet(a.neg(y), tx))
                r.add("rb5", {x, y}, "~(Y ^ 1_X) differs from ~Y ^ 1_X");
        }
    }
    return r.take();
}

AxiomReport check_boolean(const AlgebraTable& a, const CheckOptions& opts) {
    if (opts.size_cap && a.size() > opts.size_cap)
        throw Error("algebra exceeds the element cap");
    Reporter r(a, opts.max_violations);
    const std::size_t n = a.size();
    for (ElementId x = 0; x < n; ++x) {
        if (a.join(x, a.neg(x)) != a.top())
            r.add("ba2", {x}, "X v ~X differs from 1");
        if (a.meet(x, a.neg(x)) != a.bottom())
            r.add("ba3", {x}, "X ^ ~X differs from 0");
        if (a.join(x, a.bottom()) != x) r.add("ba4", {x}, "0 is not a join identity");
        if (a.meet(x, a.top()) != x) r.add("ba4", {x}, "1 is not a meet identity");
    }
    check_shared_unary_binary(a, r, /*boolean=*/true);
    return r.take();
}

std::vector<ElementId> domain_of(const AlgebraTable& a, ElementId x) {
    std::vector<ElementId> out;
    ElementId tx = relative_top(a, x);
    for (ElementId z = 0; z < a.size(); ++z)
        if (relative_top(a, z) == tx) out.push_back(z);
    return out;
}

DomainLattice domain_lattice(const AlgebraTable& a) {
    DomainLattice d;
    std::vector<bool> seen(a.size(), false);
    for (ElementId x = 0; x < a.size(); ++x) {
        ElementId t = relative_top(a, x);
        if (!seen[t]) {
            seen[t] = true;
            d.tops.push_back(t);
        }
    }
    std::sort(d.tops.begin(), d.tops.end());
    for (ElementId s : d.tops)
        for (ElementId t : d.tops) {
            ElementId m = a.meet(s, t);
            if (!seen[m] || relative_top(a, m) != m) {
                d.meet_closed = false;
                d.witness_x = s;
                d.witness_y = t;
                return d;
            }
        }
    return d;
}

LocalBoolean extract_local_boolean(const AlgebraTable& a, ElementId x) {
    LocalBoolean loc;
    loc.elements = domain_of(a, x);
    const std::size_t m = loc.elements.size();
    std::vector<ElementId> back(a.size(), 0);
    for (std::size_t i = 0; i < m; ++i) back[loc.elements[i]] = static_cast<ElementId>(i);
    std::vector<ElementId> meet(m * m), join(m * m), neg(m);
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        ElementId gi = loc.elements[i];
        neg[i] = back[a.neg(gi)];
        labels[i] = a.label(gi);
        for (std::size_t j = 0; j < m; ++j) {
            ElementId gj = loc.elements[j];
            // closure of the domain under the operations is a consequence of
            // the rb laws; a non-RBA input surfaces as an out-of-domain hit
            ElementId mg = a.meet(gi, gj), jg = a.join(gi, gj);
            ElementId tx = relative_top(a, x);
            if (relative_top(a, mg) != tx || relative_top(a, jg) != tx)
                throw Error("domain of '" + a.label(x) +
                            "' is not closed under the operations; input is not an RBA");
            meet[i * m + j] = back[mg];
            join[i * m + j] = back[jg];
        }
    }
    loc.table = make_table(m, std::move(meet), std::move(join), std::move(neg),
                           back[relative_top(a, x)], back[relative_bottom(a, x)],
                           std::move(labels));
    AxiomReport rep = check_boolean(loc.table);
    if (!rep.passed)
        throw Error("domain of '" + a.label(x) + "' fails " +
                    rep.violations.front().axiom + " (" +
                    rep.violations.front().detail + "); input is not an RBA");
    return loc;
}

ElementId project(const AlgebraTable& a, ElementId x, ElementId y) {
    ElementId tx = relative_top(a, x), ty = relative_top(a, y);
    if (!leq(a, tx, ty))
        throw Error("projection undefined: 1_" + a.label(y) + " is not above 1_" +
                    a.label(x));
    return a.meet(y, tx);
}

std::vector<std::pair<ElementId, ElementId>> order_disagreements(const AlgebraTable& a) {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId x = 0; x < a.size(); ++x)
        for (ElementId y = 0; y < a.size(); ++y)
            if ((a.meet(x, y) == x) != (a.join(x, y) == y)) out.emplace_back(x, y);
    return out;
}

}  // namespace rba
