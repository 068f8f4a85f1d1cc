#include "rba/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "rba/error.hpp"

namespace rba {

Formula prop(const std::string& name) {
    if (name.empty() || name == "A" || name == "K")
        throw Error("invalid proposition name '" + name + "'");
    return std::make_shared<FormulaNode>(FormulaNode{Op::Prop, name, nullptr, nullptr});
}
Formula top() {
    return std::make_shared<FormulaNode>(FormulaNode{Op::Top, "", nullptr, nullptr});
}
Formula neg(Formula f) {
    if (!f) throw Error("empty formula");
    return std::make_shared<FormulaNode>(FormulaNode{Op::Neg, "", std::move(f), nullptr});
}
Formula conj(Formula a, Formula b) {
    if (!a || !b) throw Error("empty formula");
    return std::make_shared<FormulaNode>(
        FormulaNode{Op::And, "", std::move(a), std::move(b)});
}
Formula aware(Formula f) {
    if (!f) throw Error("empty formula");
    return std::make_shared<FormulaNode>(FormulaNode{Op::Aware, "", std::move(f), nullptr});
}
Formula know(Formula f) {
    if (!f) throw Error("empty formula");
    return std::make_shared<FormulaNode>(FormulaNode{Op::Know, "", std::move(f), nullptr});
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->op != b->op) return false;
    switch (a->op) {
        case Op::Prop: return a->name == b->name;
        case Op::Top: return true;
        case Op::Neg:
        case Op::Aware:
        case Op::Know: return structurally_equal(a->lhs, b->lhs);
        case Op::And:
            return structurally_equal(a->lhs, b->lhs) &&
                   structurally_equal(a->rhs, b->rhs);
    }
    return false;
}

namespace {

template <typename Fn>
void visit(const Formula& f, Fn&& fn) {
    fn(*f);
    if (f->lhs) visit(f->lhs, fn);
    if (f->rhs) visit(f->rhs, fn);
}

}  // namespace

std::set<std::string> props_of(const Formula& f) {
    std::set<std::string> out;
    visit(f, [&](const FormulaNode& n) {
        if (n.op == Op::Prop) out.insert(n.name);
    });
    return out;
}

std::size_t modal_depth(const Formula& f) {
    switch (f->op) {
        case Op::Prop:
        case Op::Top: return 0;
        case Op::Neg: return modal_depth(f->lhs);
        case Op::And: return std::max(modal_depth(f->lhs), modal_depth(f->rhs));
        case Op::Aware:
        case Op::Know: return 1 + modal_depth(f->lhs);
    }
    return 0;
}

std::size_t connective_count(const Formula& f) {
    std::size_t n = 0;
    visit(f, [&](const FormulaNode& node) {
        if (node.op != Op::Prop && node.op != Op::Top) ++n;
    });
    return n;
}

bool is_modal_free(const Formula& f) { return modal_depth(f) == 0; }

// ------------------------------------------------------------------- parsing

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_str(const char* s) {
        skip();
        std::size_t len = std::char_traits<char>::length(s);
        if (text.compare(pos, len, s) == 0) {
            pos += len;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Formula parse_iff() {
        Formula f = parse_imp();
        while (eat_str("<->")) f = iff(f, parse_imp());
        return f;
    }
    Formula parse_imp() {
        Formula f = parse_or();
        skip();
        // "->" but not "<->" (already handled one level up)
        if (text.compare(pos, 2, "->") == 0) {
            pos += 2;
            return implies(f, parse_imp());  // right-associative
        }
        return f;
    }
    Formula parse_or() {
        Formula f = parse_and();
        while (true) {
            skip();
            if (pos < text.size() && text[pos] == '|') {
                ++pos;
                f = disj(f, parse_and());
            } else {
                return f;
            }
        }
    }
    Formula parse_and() {
        Formula f = parse_unary();
        while (true) {
            skip();
            if (pos < text.size() && text[pos] == '&') {
                ++pos;
                f = conj(f, parse_unary());
            } else {
                return f;
            }
        }
    }
    Formula parse_unary() {
        skip();
        if (pos >= text.size()) fail("expected formula");
        char c = text[pos];
        if (c == '~') {
            ++pos;
            return neg(parse_unary());
        }
        if ((c == 'A' || c == 'K') && !ident_continues(pos + 1)) {
            ++pos;
            return c == 'A' ? aware(parse_unary()) : know(parse_unary());
        }
        return parse_atom();
    }
    bool ident_continues(std::size_t p) const {
        return p < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_');
    }
    Formula parse_atom() {
        skip();
        if (pos >= text.size()) fail("expected formula");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Formula f = parse_iff();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (c == '1') {
            ++pos;
            return top();
        }
        if (c == '0') {
            ++pos;
            return bottom();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            ++pos;
            while (ident_continues(pos)) ++pos;
            std::string name = text.substr(start, pos - start);
            if (name == "A" || name == "K") fail("'" + name + "' is a reserved modality");
            return prop(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Formula parse(const std::string& text) {
    Parser p{text};
    Formula f = p.parse_iff();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

namespace {

bool is_bottom(const Formula& f) {
    return f->op == Op::Neg && f->lhs->op == Op::Top;
}

void print(const Formula& f, std::string& out) {
    switch (f->op) {
        case Op::Prop: out += f->name; return;
        case Op::Top: out += '1'; return;
        case Op::Neg:
            if (is_bottom(f)) { out += '0'; return; }
            out += '~';
            if (f->lhs->op == Op::And) {
                out += '(';
                print(f->lhs, out);
                out += ')';
            } else {
                print(f->lhs, out);
            }
            return;
        case Op::Aware:
        case Op::Know:
            out += (f->op == Op::Aware ? 'A' : 'K');
            out += ' ';
            if (f->lhs->op == Op::And) {
                out += '(';
                print(f->lhs, out);
                out += ')';
            } else {
                print(f->lhs, out);
            }
            return;
        case Op::And:
            print(f->lhs, out);  // left-nested & reparses identically
            out += " & ";
            if (f->rhs->op == Op::And) {
                out += '(';
                print(f->rhs, out);
                out += ')';
            } else {
                print(f->rhs, out);
            }
            return;
    }
}

}  // namespace

std::string to_string(const Formula& f) {
    if (!f) throw Error("empty formula");
    std::string out;
    print(f, out);
    return out;
}

bool classical_tautology(const Formula& f) {
    if (!is_modal_free(f)) throw Error("classical_tautology requires a modal-free formula");
    std::set<std::string> names = props_of(f);
    std::vector<std::string> props(names.begin(), names.end());
    if (props.size() > 20) throw Error("too many propositions for truth-table evaluation");
    const std::size_t assignments = std::size_t(1) << props.size();
    for (std::size_t bits = 0; bits < assignments; ++bits) {
        auto eval = [&](auto&& self, const Formula& g) -> bool {
            switch (g->op) {
                case Op::Top: return true;
                case Op::Prop: {
                    std::size_t i = std::find(props.begin(), props.end(), g->name) -
                                    props.begin();
                    return (bits >> i) & 1;
                }
                case Op::Neg: return !self(self, g->lhs);
                case Op::And: return self(self, g->lhs) && self(self, g->rhs);
                default: return false;  // unreachable, modal-free checked
            }
        };
        if (!eval(eval, f)) return false;
    }
    return true;
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& props,
                                        std::size_t max_connectives,
                                        bool include_modal,
                                        std::size_t max_modal_depth) {
    // by connective count, then Neg < Aware < Know < And, children in order
    std::vector<std::vector<Formula>> level(max_connectives + 1);
    std::vector<std::vector<std::size_t>> depth(max_connectives + 1);
    for (const auto& p : props) {
        level[0].push_back(prop(p));
        depth[0].push_back(0);
    }
    level[0].push_back(top());
    depth[0].push_back(0);
    for (std::size_t c = 1; c <= max_connectives; ++c) {
        for (std::size_t i = 0; i < level[c - 1].size(); ++i) {
            level[c].push_back(neg(level[c - 1][i]));
            depth[c].push_back(depth[c - 1][i]);
        }
        if (include_modal) {
            for (std::size_t i = 0; i < level[c - 1].size(); ++i) {
                if (depth[c - 1][i] + 1 > max_modal_depth) continue;
                level[c].push_back(aware(level[c - 1][i]));
                depth[c].push_back(depth[c - 1][i] + 1);
            }
            for (std::size_t i = 0; i < level[c - 1].size(); ++i) {
                if (depth[c - 1][i] + 1 > max_modal_depth) continue;
                level[c].push_back(know(level[c - 1][i]));
                depth[c].push_back(depth[c - 1][i] + 1);
            }
        }
        for (std::size_t a = 0; a <= c - 1; ++a) {
            std::size_t b = c - 1 - a;
            for (std::size_t i = 0; i < level[a].size(); ++i)
                for (std::size_t j = 0; j < level[b].size(); ++j) {
                    level[c].push_back(conj(level[a][i], level[b][j]));
                    depth[c].push_back(std::max(depth[a][i], depth[b][j]));
                }
        }
    }
    std::vector<Formula> out;
    for (auto& l : level)
        for (auto& f : l) out.push_back(std::move(f));
    return out;
}

}  // namespace rba
