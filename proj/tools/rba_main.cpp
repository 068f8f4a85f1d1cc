#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rba/axioms.hpp"
#include "rba/error.hpp"
#include "rba/io.hpp"
#include "rba/suites.hpp"

namespace {

using namespace rba;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

std::string infer_kind(const std::string& path, const std::string& forced) {
    if (!forced.empty()) return forced;
    if (path.ends_with(".mrba.json")) return "mrba";
    if (path.ends_with(".model.json")) return "model";
    return "rba";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

void print_report(const AxiomReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(rep) << "\n";
        return;
    }
    if (rep.passed) {
        std::cout << "passed\n";
        return;
    }
    std::cout << "failed: " << rep.violations.size() << " violation(s)\n";
    for (const auto& v : rep.violations) {
        std::cout << "  " << v.axiom << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            std::cout << (i ? ", " : "") << v.witness[i];
        std::cout << "): " << v.detail << "\n";
    }
}

std::string fixtures_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("RBA_FIXTURES")) return env;
    return "fixtures";
}

struct BatterySpec {
    std::size_t depth = 2;
    std::size_t budget = 6;
};

BatterySpec parse_battery(const std::string& text) {
    BatterySpec spec;
    if (text.empty()) return spec;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw Error("battery spec must be depth=D,budget=B");
        std::string key = part.substr(0, eq);
        std::size_t value = std::stoul(part.substr(eq + 1));
        if (key == "depth") spec.depth = value;
        else if (key == "budget") spec.budget = value;
        else throw Error("unknown battery key '" + key + "'");
    }
    return spec;
}

int print_suite(const SuiteResult& res, const std::string& format) {
    if (format == "json") {
        // timing is omitted so the report is byte-identical across runs
        std::ostringstream os;
        os << "{\n \"suite\": \"" << res.suite << "\",\n \"passed\": "
           << (res.passed() ? "true" : "false") << ",\n \"lines\": [\n";
        for (std::size_t i = 0; i < res.lines.size(); ++i) {
            const auto& l = res.lines[i];
            os << "  {\"name\": \"" << l.name << "\", \"passed\": "
               << (l.passed ? "true" : "false") << ", \"detail\": \"" << l.detail
               << "\"}" << (i + 1 < res.lines.size() ? ",\n" : "\n");
        }
        os << " ]\n}\n";
        std::cout << os.str();
    } else {
        std::cout << "suite " << res.suite << "\n";
        for (const auto& l : res.lines) {
            std::ostringstream secs;
            secs.setf(std::ios::fixed);
            secs.precision(2);
            secs << l.seconds;
            std::cout << "  [" << (l.passed ? "PASS" : "FAIL") << "] " << l.name << " ("
                      << secs.str() << "s)";
            if (!l.detail.empty()) std::cout << " - " << l.detail;
            std::cout << "\n";
        }
        std::cout << (res.passed() ? "all checks passed" : "suite FAILED") << "\n";
    }
    return res.passed() ? kExitPass : kExitFail;
}

std::vector<Formula> read_formulas_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::vector<Formula> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        out.push_back(parse(line.substr(begin)));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite relativized-algebra and awareness-model toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::uint64_t seed = 0;
    std::size_t max_elements = 64;
    std::size_t max_worlds = 128;
    unsigned jobs = 0;
    std::string format = "text";
    bool no_fd = false;
    app.add_option("--seed", seed, "random seed (default 0)");
    app.add_option("--max-elements", max_elements, "element cap for axiom checks");
    app.add_option("--max-worlds", max_worlds, "world cap for models");
    app.add_option("--jobs", jobs, "worker pool size (0 = hardware)");
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-fD", no_fd, "admit operators that move relative bottoms");

    // check
    auto* check = app.add_subcommand("check", "verify a file against its axioms");
    std::string check_path, check_kind;
    check->add_option("path", check_path)->required();
    check->add_option("--kind", check_kind)->check(CLI::IsMember({"rba", "mrba", "model"}));

    // validity
    auto* validity = app.add_subcommand("validity", "decide relative validity");
    std::string v_algebra, v_mrba, v_model, v_formula, v_assign, v_file;
    std::size_t v_max_props = 2;
    validity->add_option("--algebra", v_algebra, "algebra file");
    validity->add_option("--mrba", v_mrba, "modal algebra file");
    validity->add_option("--model", v_model, "model file");
    validity->add_option("--formula", v_formula, "formula text");
    validity->add_option("--formulas-file", v_file, "one formula per line, # comments");
    validity->add_option("--assign", v_assign, "p=NAME,q=NAME (omit to sweep)");
    validity->add_option("--max-props", v_max_props, "assignment sweep cap");

    // suite
    auto* suite = app.add_subcommand("suite", "run a named verification battery");
    std::string suite_name, suite_fixtures;
    std::size_t suite_budget = 5, suite_depth = 2, suite_models = 100;
    suite->add_option("name", suite_name)
        ->required()
        ->check(CLI::IsMember({"soundness", "correspondence", "duality", "stone"}));
    suite->add_option("--fixtures", suite_fixtures, "fixture directory");
    suite->add_option("--budget", suite_budget, "metavariable connective budget");
    suite->add_option("--depth", suite_depth, "instance modal depth");
    suite->add_option("--models", suite_models, "random model count");

    // render
    auto* render = app.add_subcommand("render", "emit DOT graphs");
    std::string r_what, r_path, r_out;
    render->add_option("--what", r_what)
        ->required()
        ->check(CLI::IsMember({"hasse", "frame", "embedding"}));
    render->add_option("path", r_path)->required();
    render->add_option("--out", r_out, "output file (default stdout)");

    // dualize
    auto* dualize = app.add_subcommand("dualize", "translate between algebras and models");
    std::string d_mrba, d_model, d_assign, d_out;
    dualize->add_option("--mrba", d_mrba, "modal algebra file (to model)");
    dualize->add_option("--model", d_model, "model file (to modal algebra)");
    dualize->add_option("--assign", d_assign, "assignment for --mrba");
    dualize->add_option("--out", d_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a translation proposition");
    int verify_prop = 0;
    std::string vf_model, vf_mrba, vf_assign, vf_battery;
    verify->add_option("--prop", verify_prop, "1 or 2")->required();
    verify->add_option("--model", vf_model, "model file (prop 1)");
    verify->add_option("--mrba", vf_mrba, "modal algebra file (prop 2)");
    verify->add_option("--assign", vf_assign, "assignment override");
    verify->add_option("--battery", vf_battery, "depth=2,budget=6");

    // stone
    auto* stone = app.add_subcommand("stone", "emit the filter family and embedding");
    std::string s_path;
    stone->add_option("path", s_path)->required();

    // instantiate
    auto* inst = app.add_subcommand("instantiate", "emit axiom-schema instances");
    std::string i_schema, i_props = "p,q", i_manifest;
    std::size_t i_pool_budget = 1, i_agp_budget = 2;
    inst->add_option("--schema", i_schema, "K D T 4 5A AGP A0 KA");
    inst->add_option("--props", i_props, "comma-separated propositions");
    inst->add_option("--pool-budget", i_pool_budget, "metavariable connective budget");
    inst->add_option("--agp-budget", i_agp_budget, "enumeration budget");
    inst->add_option("--manifest", i_manifest, "JSON manifest of schemas and budgets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            std::string kind = infer_kind(check_path, check_kind);
            AxiomReport rep;
            if (kind == "rba") {
                AlgebraTable a = load_algebra(check_path, max_elements);
                rep = check_rba(a);
            } else if (kind == "mrba") {
                LoadedMrba m = load_mrba(check_path, max_elements);
                rep = check_rba(m.mrba.algebra);
                if (rep.passed) rep = check_mrba(m.mrba, {.check_fD = !no_fd});
            } else {
                AwarenessModel m = load_model(check_path);
                if (m.frame.size() > max_worlds) throw Error("model exceeds --max-worlds");
                rep = check_model(m);
            }
            print_report(rep, format);
            return rep.passed ? kExitPass : kExitFail;
        }

        if (*validity) {
            std::vector<Formula> formulas;
            if (!v_formula.empty()) formulas.push_back(parse(v_formula));
            if (!v_file.empty())
                for (auto& f : read_formulas_file(v_file)) formulas.push_back(f);
            if (formulas.empty()) throw Error("give --formula or --formulas-file");
            bool all_valid = true;
            auto verdict = [&](const Formula& f, bool valid, const std::string& witness) {
                all_valid &= valid;
                std::cout << (valid ? "valid" : "invalid") << "  " << to_string(f);
                if (!witness.empty()) std::cout << "  [" << witness << "]";
                std::cout << "\n";
            };
            if (!v_model.empty()) {
                AwarenessModel m = load_model(v_model);
                if (!check_model(m).passed) throw Error("model fails its checks");
                for (const auto& f : formulas) {
                    Extension e = extension(m, f);
                    std::string witness;
                    if (e.truth != e.domain) {
                        witness = "false at";
                        for (std::size_t w = 0; w < m.frame.size(); ++w)
                            if (e.domain.test(w) && !e.truth.test(w))
                                witness += " " + m.frame.worlds[w];
                    }
                    verdict(f, e.truth == e.domain, witness);
                }
            } else if (!v_mrba.empty()) {
                LoadedMrba lm = load_mrba(v_mrba, max_elements);
                if (!check_mrba(lm.mrba, {.check_fD = !no_fd}).passed)
                    throw Error("modal algebra fails its checks");
                Assignment h = v_assign.empty()
                                   ? lm.assign
                                   : parse_assignment(lm.mrba.algebra, v_assign);
                for (const auto& f : formulas) {
                    if (h.empty()) {
                        bool ok = valid_all_assignments(lm.mrba, f, v_max_props);
                        verdict(f, ok, "all assignments");
                    } else {
                        ElementId v = evaluate(lm.mrba, h, f);
                        verdict(f, v == relative_top(lm.mrba.algebra, v),
                                "value " + lm.mrba.algebra.label(v));
                    }
                }
            } else if (!v_algebra.empty()) {
                AlgebraTable a = load_algebra(v_algebra, max_elements);
                if (!check_rba(a).passed) throw Error("algebra fails its checks");
                Assignment h =
                    v_assign.empty() ? Assignment{} : parse_assignment(a, v_assign);
                for (const auto& f : formulas) {
                    if (h.empty()) {
                        bool ok = valid_all_assignments(a, f, v_max_props);
                        verdict(f, ok, "all assignments");
                    } else {
                        ElementId v = evaluate(a, h, f);
                        verdict(f, v == relative_top(a, v), "value " + a.label(v));
                    }
                }
            } else {
                throw Error("give --model, --mrba, or --algebra");
            }
            return all_valid ? kExitPass : kExitFail;
        }

        if (*suite) {
            Fixtures fx = load_fixtures(fixtures_dir(suite_fixtures));
            SuiteOptions opts;
            opts.seed = seed;
            opts.jobs = jobs;
            opts.budget = suite_budget;
            opts.modal_depth = suite_depth;
            opts.random_models = suite_models;
            opts.check_fD = !no_fd;
            SuiteResult res;
            if (suite_name == "soundness") res = run_soundness(fx, opts);
            else if (suite_name == "correspondence") res = run_correspondence(fx, opts);
            else if (suite_name == "duality") res = run_duality(fx, opts);
            else res = run_stone(fx, opts);
            return print_suite(res, format);
        }

        if (*render) {
            std::string text;
            if (r_what == "hasse") {
                text = render_hasse(load_algebra(r_path, max_elements));
            } else if (r_what == "frame") {
                text = render_frame(load_model(r_path));
            } else {
                AlgebraTable a = load_algebra(r_path, max_elements);
                text = render_embedding(a, stone_embed(a));
            }
            emit(text, r_out);
            return kExitPass;
        }

        if (*dualize) {
            if (!d_model.empty()) {
                AwarenessModel m = load_model(d_model);
                ConcreteMrba cm = model_to_mrba(m, /*element_cap=*/6561);
                emit(mrba_to_json(cm.mrba, cm.assign), d_out);
                return kExitPass;
            }
            if (!d_mrba.empty()) {
                LoadedMrba lm = load_mrba(d_mrba, max_elements);
                Assignment h = d_assign.empty()
                                   ? lm.assign
                                   : parse_assignment(lm.mrba.algebra, d_assign);
                AwarenessModel model = mrba_to_model(lm.mrba, h);
                emit(model_to_json(model), d_out);
                return kExitPass;
            }
            throw Error("give --model or --mrba");
        }

        if (*verify) {
            BatterySpec spec = parse_battery(vf_battery);
            FormulaArena battery = FormulaArena::build({"p", "q"}, spec.budget,
                                                       /*include_modal=*/true, spec.depth);
            DualityReport rep;
            if (verify_prop == 1) {
                if (vf_model.empty()) throw Error("--prop 1 needs --model");
                rep = verify_prop1(load_model(vf_model), battery);
            } else if (verify_prop == 2) {
                if (vf_mrba.empty()) throw Error("--prop 2 needs --mrba");
                LoadedMrba lm = load_mrba(vf_mrba, max_elements);
                Assignment h = vf_assign.empty()
                                   ? lm.assign
                                   : parse_assignment(lm.mrba.algebra, vf_assign);
                rep = verify_prop2(lm.mrba, h, battery);
            } else {
                throw Error("--prop must be 1 or 2");
            }
            std::cout << rep.direction << ": " << rep.checked << " formulas, "
                      << rep.mismatches.size() << " mismatches\n";
            for (const auto& mm : rep.mismatches)
                std::cout << "  " << mm.formula << ": " << mm.lhs << " vs " << mm.rhs
                          << "\n";
            return rep.ok() ? kExitPass : kExitFail;
        }

        if (*stone) {
            AlgebraTable a = load_algebra(s_path, max_elements);
            StoneEmbedding se = stone_embed(a);
            if (format == "json") {
                std::ostringstream os;
                os << "{\n \"family\": [";
                for (std::size_t i = 0; i < se.family.filters.size(); ++i) {
                    os << (i ? ",\n  " : "\n  ") << "[";
                    const auto& members = se.family.filters[i].members;
                    for (std::size_t k = 0; k < members.size(); ++k)
                        os << (k ? ", " : "") << "\"" << a.label(members[k]) << "\"";
                    os << "]";
                }
                os << "\n ],\n \"embedding\": {";
                for (ElementId x = 0; x < a.size(); ++x)
                    os << (x ? ",\n  " : "\n  ") << "\"" << a.label(x) << "\": \""
                       << format_pair(se.universe, se.image[x]) << "\"";
                os << "\n },\n \"verified\": "
                   << (se.verification.passed ? "true" : "false") << "\n}\n";
                std::cout << os.str();
            } else {
                for (std::size_t i = 0; i < se.family.filters.size(); ++i) {
                    std::cout << se.universe.points[i] << " = {";
                    const auto& members = se.family.filters[i].members;
                    for (std::size_t k = 0; k < members.size(); ++k)
                        std::cout << (k ? ", " : "") << a.label(members[k]);
                    std::cout << "}\n";
                }
                for (ElementId x = 0; x < a.size(); ++x)
                    std::cout << a.label(x) << " -> "
                              << format_pair(se.universe, se.image[x]) << "\n";
            }
            return se.verification.passed ? kExitPass : kExitFail;
        }

        if (*inst) {
            std::vector<std::pair<SchemaId, std::size_t>> selected;  // schema, agp budget
            std::size_t pool_budget = i_pool_budget;
            std::vector<std::string> props;
            {
                std::stringstream ss(i_props);
                std::string p;
                while (std::getline(ss, p, ',')) props.push_back(p);
            }
            if (!i_manifest.empty()) {
                std::ifstream in(i_manifest);
                if (!in) throw Error("cannot open '" + i_manifest + "'");
                std::stringstream ss;
                ss << in.rdbuf();
                // tiny manifest: {"schemas": [...], "pool_budget": N, "agp_budget": N}
                std::string text = ss.str();
                auto find_num = [&](const std::string& key, std::size_t fallback) {
                    auto at = text.find("\"" + key + "\"");
                    if (at == std::string::npos) return fallback;
                    at = text.find(':', at);
                    return static_cast<std::size_t>(std::stoul(text.substr(at + 1)));
                };
                pool_budget = find_num("pool_budget", pool_budget);
                i_agp_budget = find_num("agp_budget", i_agp_budget);
                for (const char* name : {"K", "D", "T", "4", "5A", "AGP", "A0", "KA"})
                    if (text.find("\"" + std::string(name) + "\"") != std::string::npos)
                        selected.emplace_back(*schema_from_name(name), i_agp_budget);
            } else {
                auto id = schema_from_name(i_schema);
                if (!id) throw Error("unknown schema '" + i_schema + "'");
                selected.emplace_back(*id, i_agp_budget);
            }
            std::vector<Formula> pool =
                enumerate_formulas(props, pool_budget, /*include_modal=*/true);
            for (auto [id, agp] : selected) {
                for (const auto& f : instantiate(id, pool, agp))
                    std::cout << schema_name(id) << "  " << to_string(f) << "\n";
            }
            return kExitPass;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
