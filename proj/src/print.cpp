#include "gla/print.hpp"

namespace gla {

namespace {

void tree_text(const Tree& t, const GeneratorSet& set, std::string& out) {
    if (t.is_leaf()) {
        out += set.at(t.gen()).name;
        return;
    }
    out += '[';
    tree_text(t.left(), set, out);
    out += ',';
    tree_text(t.right(), set, out);
    out += ']';
}

void magma_text(const Tree& t, const GeneratorSet& set, std::string& out) {
    if (t.is_leaf()) {
        out += set.at(t.gen()).name;
        return;
    }
    const auto side = [&](const Tree& c) {
        if (c.is_leaf()) {
            magma_text(c, set, out);
        } else {
            out += '(';
            magma_text(c, set, out);
            out += ')';
        }
    };
    side(t.left());
    out += '*';
    side(t.right());
}

std::string terms_text(const TermMap& terms, const GeneratorSet& set, bool magma) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [tree, c] : terms) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        const Rational a = neg ? Rational(-c) : c;
        if (a != 1) {
            out += rational_str(a);
            out += '*';
        }
        if (magma)
            magma_text(tree, set, out);
        else
            tree_text(tree, set, out);
    }
    return out;
}

}  // namespace

std::string print_tree(const Tree& t, const GeneratorSet& set) {
    std::string out;
    tree_text(t, set, out);
    return out;
}

std::string print_magma_tree(const Tree& t, const GeneratorSet& set) {
    std::string out;
    magma_text(t, set, out);
    return out;
}

std::string print_element(const LieElement& x) {
    return terms_text(x.terms(), *x.set(), false);
}

std::string print_magma(const MagmaElement& x) {
    return terms_text(x.terms(), *x.set(), true);
}

std::string print_presentation(const DglPresentation& p) {
    std::string out = "dgl " + p.name() + "\n";
    const GeneratorSet& set = *p.set();
    for (int i = 0; i < set.size(); ++i)
        out += "gen " + set.at(i).name + " " + std::to_string(set.degree(i)) + "\n";
    for (int i = 0; i < set.size(); ++i)
        if (!p.diff(i).empty())
            out += "diff " + set.at(i).name + " = " + print_element(p.diff(i)) + "\n";
    return out;
}

}  // namespace gla
