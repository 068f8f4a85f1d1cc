#include "rba/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rba/error.hpp"

namespace rba {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw Error("malformed JSON in " + what);
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ElementId id_of(const AlgebraTable& a, const json& j, const std::string& ctx) {
    if (!j.is_string()) throw Error(ctx + ": element names must be strings");
    auto e = a.find(j.get<std::string>());
    if (!e) throw Error(ctx + ": unknown element '" + j.get<std::string>() + "'");
    return *e;
}

AlgebraTable table_from_json(const json& j) {
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    auto index = [&](const json& name, const char* ctx) -> ElementId {
        if (!name.is_string()) throw Error(std::string(ctx) + ": expected a name");
        auto it = std::find(labels.begin(), labels.end(), name.get<std::string>());
        if (it == labels.end())
            throw Error(std::string(ctx) + ": unknown element '" +
                        name.get<std::string>() + "'");
        return static_cast<ElementId>(it - labels.begin());
    };
    std::vector<ElementId> meet, join, neg;
    const json &jm = j.at("meet"), &jj = j.at("join"), &jn = j.at("neg");
    if (jm.size() != n || jj.size() != n || jn.size() != n)
        throw Error("operation tables are not total");
    for (std::size_t r = 0; r < n; ++r) {
        if (jm[r].size() != n || jj[r].size() != n)
            throw Error("operation tables are not total");
        for (std::size_t c = 0; c < n; ++c) {
            meet.push_back(index(jm[r][c], "meet"));
            join.push_back(index(jj[r][c], "join"));
        }
        neg.push_back(index(jn[r], "neg"));
    }
    ElementId top = index(j.at("top"), "top");
    ElementId bottom = index(j.at("bottom"), "bottom");
    return make_table(n, std::move(meet), std::move(join), std::move(neg), top, bottom,
                      std::move(labels));
}

AlgebraTable algebra_from_json(const json& j, std::size_t element_cap) {
    if (j.contains("universe")) {
        Universe u = j.at("universe").is_string()
                         ? parse_universe(j.at("universe").get<std::string>())
                         : make_universe(j.at("universe").get<std::vector<std::string>>());
        return materialize(u, element_cap);
    }
    if (j.contains("blocks")) {
        GlueInput in;
        for (const json& bj : j.at("blocks")) {
            GlueInput::Block b;
            b.name = bj.at("name").get<std::string>();
            b.table = table_from_json(bj);
            in.blocks.push_back(std::move(b));
        }
        for (auto it = j.at("homs").begin(); it != j.at("homs").end(); ++it) {
            const std::string& key = it.key();
            auto arrow = key.find("->");
            if (arrow == std::string::npos)
                throw Error("hom key '" + key + "' must look like 'From->To'");
            std::map<std::string, std::string> mapping;
            for (auto h = it.value().begin(); h != it.value().end(); ++h)
                mapping[h.key()] = h.value().get<std::string>();
            in.homs[{key.substr(0, arrow), key.substr(arrow + 2)}] = std::move(mapping);
        }
        AlgebraTable out = glue(in);
        if (element_cap && out.size() > element_cap)
            throw Error("glued algebra exceeds the element cap");
        return out;
    }
    AlgebraTable out = table_from_json(j);
    if (element_cap && out.size() > element_cap)
        throw Error("algebra exceeds the element cap");
    return out;
}

}  // namespace

AlgebraTable load_algebra_text(const std::string& text, std::size_t element_cap) {
    return algebra_from_json(parse_json(text, "algebra"), element_cap);
}

AlgebraTable load_algebra(const std::string& path, std::size_t element_cap) {
    return load_algebra_text(slurp(path), element_cap);
}

LoadedMrba load_mrba_text(const std::string& text, std::size_t element_cap) {
    json j = parse_json(text, "mrba");
    LoadedMrba out;
    out.mrba.algebra = algebra_from_json(j, element_cap);
    if (!j.contains("fk")) throw Error("mrba file lacks the \"fk\" table");
    const json& fk = j.at("fk");
    if (fk.size() != out.mrba.algebra.size()) throw Error("fk table is not total");
    for (const json& e : fk)
        out.mrba.fk.push_back(id_of(out.mrba.algebra, e, "fk"));
    if (j.contains("assign"))
        for (auto it = j.at("assign").begin(); it != j.at("assign").end(); ++it)
            out.assign[it.key()] = id_of(out.mrba.algebra, it.value(), "assign");
    return out;
}

LoadedMrba load_mrba(const std::string& path, std::size_t element_cap) {
    return load_mrba_text(slurp(path), element_cap);
}

AwarenessModel load_model_text(const std::string& text) {
    json j = parse_json(text, "model");
    std::vector<std::string> worlds = j.at("worlds").get<std::vector<std::string>>();
    auto pairs = [&](const json& arr) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const json& e : arr) {
            if (!e.is_array() || e.size() != 2)
                throw Error("relation entries must be [w, w'] pairs");
            out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return out;
    };
    AwarenessFrame frame =
        make_frame(worlds, pairs(j.value("geq", json::array())), pairs(j.at("R")));
    std::vector<std::string> props;
    std::vector<WorldMask> lang, val;
    auto mask_of = [&](const json& arr) {
        WorldMask m;
        for (const json& w : arr) {
            auto i = frame.find(w.get<std::string>());
            if (!i) throw Error("unknown world '" + w.get<std::string>() + "'");
            m.set(*i);
        }
        return m;
    };
    const json& L = j.at("L");
    const json& V = j.at("V");
    for (auto it = L.begin(); it != L.end(); ++it) {
        props.push_back(it.key());
        lang.push_back(mask_of(it.value()));
        val.push_back(V.contains(it.key()) ? mask_of(V.at(it.key())) : WorldMask{});
    }
    for (auto it = V.begin(); it != V.end(); ++it)
        if (!L.contains(it.key()))
            throw Error("valuation names proposition '" + it.key() +
                        "' missing from L");
    return make_model(std::move(frame), std::move(props), std::move(lang),
                      std::move(val));
}

AwarenessModel load_model(const std::string& path) {
    return load_model_text(slurp(path));
}

std::string algebra_to_json(const AlgebraTable& a) {
    json j;
    j["elements"] = a.labels;
    j["top"] = a.label(a.top());
    j["bottom"] = a.label(a.bottom());
    json meet = json::array(), join = json::array(), neg = json::array();
    for (ElementId x = 0; x < a.size(); ++x) {
        json mrow = json::array(), jrow = json::array();
        for (ElementId y = 0; y < a.size(); ++y) {
            mrow.push_back(a.label(a.meet(x, y)));
            jrow.push_back(a.label(a.join(x, y)));
        }
        meet.push_back(std::move(mrow));
        join.push_back(std::move(jrow));
        neg.push_back(a.label(a.neg(x)));
    }
    j["meet"] = std::move(meet);
    j["join"] = std::move(join);
    j["neg"] = std::move(neg);
    return j.dump(1);
}

std::string mrba_to_json(const Mrba& m, const Assignment& assign) {
    json j = json::parse(algebra_to_json(m.algebra));
    json fk = json::array();
    for (ElementId v : m.fk) fk.push_back(m.algebra.label(v));
    j["fk"] = std::move(fk);
    if (!assign.empty()) {
        json a;
        for (const auto& [p, e] : assign) a[p] = m.algebra.label(e);
        j["assign"] = std::move(a);
    }
    return j.dump(1);
}

std::string model_to_json(const AwarenessModel& m) {
    json j;
    j["worlds"] = m.frame.worlds;
    json geq = json::array(), R = json::array();
    const std::size_t n = m.frame.size();
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v) {
            if (m.frame.above[v].test(w))
                geq.push_back(json::array({m.frame.worlds[w], m.frame.worlds[v]}));
            if (m.frame.access[w].test(v))
                R.push_back(json::array({m.frame.worlds[w], m.frame.worlds[v]}));
        }
    j["geq"] = std::move(geq);
    j["R"] = std::move(R);
    json L, V;
    for (std::size_t p = 0; p < m.props.size(); ++p) {
        json lw = json::array(), vw = json::array();
        for (std::size_t w = 0; w < n; ++w) {
            if (m.lang[p].test(w)) lw.push_back(m.frame.worlds[w]);
            if (m.val[p].test(w)) vw.push_back(m.frame.worlds[w]);
        }
        L[m.props[p]] = std::move(lw);
        V[m.props[p]] = std::move(vw);
    }
    j["L"] = std::move(L);
    j["V"] = std::move(V);
    return j.dump(1);
}

std::string report_to_json(const AxiomReport& rep) {
    json j;
    j["passed"] = rep.passed;
    json vs = json::array();
    for (const auto& v : rep.violations) {
        json e;
        e["axiom"] = v.axiom;
        e["witness"] = v.witness;
        e["detail"] = v.detail;
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    return j.dump(1);
}

Assignment parse_assignment(const AlgebraTable& a, const std::string& text) {
    Assignment out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t eq = text.find('=', i);
        if (eq == std::string::npos) throw Error("assignment must look like p=NAME,q=NAME");
        std::string prop = text.substr(i, eq - i);
        prop.erase(0, prop.find_first_not_of(" \t"));
        prop.erase(prop.find_last_not_of(" \t") + 1);
        // value runs to the next comma at brace depth zero
        std::size_t j = eq + 1;
        int depth = 0;
        while (j < text.size() && (depth > 0 || text[j] != ',')) {
            if (text[j] == '{' || text[j] == '(') ++depth;
            if (text[j] == '}' || text[j] == ')') --depth;
            ++j;
        }
        std::string value = text.substr(eq + 1, j - eq - 1);
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t") + 1);
        auto e = a.find(value);
        if (!e) throw Error("unknown element '" + value + "' in assignment");
        out[prop] = *e;
        i = j < text.size() ? j + 1 : j;
    }
    return out;
}

namespace {

const char* kPalette[] = {"#cce5ff", "#ffcccc", "#ccffcc", "#fff2cc",
                          "#e5ccff", "#ffd9cc", "#ccf2ff", "#f2f2f2"};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// covering pairs of the order (transitive reduction)
std::vector<std::pair<ElementId, ElementId>> hasse_edges(const AlgebraTable& a) {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId x = 0; x < a.size(); ++x)
        for (ElementId y = 0; y < a.size(); ++y) {
            if (x == y || !leq(a, x, y)) continue;
            bool covering = true;
            for (ElementId z = 0; z < a.size(); ++z)
                if (z != x && z != y && leq(a, x, z) && leq(a, z, y)) {
                    covering = false;
                    break;
                }
            if (covering) out.emplace_back(x, y);
        }
    return out;
}

}  // namespace

std::string render_hasse(const AlgebraTable& a) {
    DomainLattice dl = domain_lattice(a);
    auto domain_index = [&](ElementId x) {
        ElementId t = relative_top(a, x);
        for (std::size_t i = 0; i < dl.tops.size(); ++i)
            if (dl.tops[i] == t) return i;
        return std::size_t{0};
    };
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [style=filled];\n";
    for (ElementId x = 0; x < a.size(); ++x)
        os << "  n" << x << " [label=" << quote(a.label(x)) << " fillcolor=\""
           << kPalette[domain_index(x) % 8] << "\"];\n";
    for (auto [x, y] : hasse_edges(a)) os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string render_frame(const AwarenessModel& m) {
    const std::size_t n = m.frame.size();
    std::ostringstream os;
    os << "digraph frame {\n  node [style=filled];\n";
    for (std::size_t w = 0; w < n; ++w) {
        std::size_t color = 0;
        for (std::size_t p = 0; p < m.props.size(); ++p)
            if (m.lang[p].test(w)) color |= std::size_t(1) << p;
        std::string label = m.frame.worlds[w];
        for (std::size_t p = 0; p < m.props.size(); ++p)
            if (m.val[p].test(w)) label += "\\n" + m.props[p];
        os << "  n" << w << " [label=" << quote(label) << " fillcolor=\""
           << kPalette[color % 8] << "\"];\n";
    }
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v) {
            if (m.frame.access[w].test(v))
                os << "  n" << w << " -> n" << v << ";\n";
            if (w != v && m.frame.above[v].test(w) && !m.frame.above[w].test(v))
                os << "  n" << w << " -> n" << v << " [style=dashed];\n";
        }
    os << "}\n";
    return os.str();
}

std::string render_embedding(const AlgebraTable& a, const StoneEmbedding& se) {
    std::ostringstream os;
    DomainLattice dl = domain_lattice(a);
    auto domain_index = [&](ElementId x) {
        ElementId t = relative_top(a, x);
        for (std::size_t i = 0; i < dl.tops.size(); ++i)
            if (dl.tops[i] == t) return i;
        return std::size_t{0};
    };
    os << "digraph embedding {\n  rankdir=BT;\n  node [style=filled shape=box];\n";
    for (ElementId x = 0; x < a.size(); ++x)
        os << "  n" << x << " [label="
           << quote(a.label(x) + "\\n" + format_pair(se.universe, se.image[x]))
           << " fillcolor=\"" << kPalette[domain_index(x) % 8] << "\"];\n";
    for (auto [x, y] : hasse_edges(a)) os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace rba
