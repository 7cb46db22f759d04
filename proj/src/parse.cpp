#include "gla/parse.hpp"

#include <cctype>
#include <vector>

namespace gla {

namespace {

enum class Tok { Ident, Int, LBracket, RBracket, LParen, RParen, Comma, Plus, Minus, Star, Slash, Eq, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= s_.size() || s_[pos_] == '#') break;
            const int col = column();
            const char c = s_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t j = pos_;
                while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
                while (j < s_.size() && s_[j] == '\'') ++j;  // primes
                out.push_back({Tok::Ident, s_.substr(pos_, j - pos_), line_, col});
                pos_ = j;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = pos_;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                out.push_back({Tok::Int, s_.substr(pos_, j - pos_), line_, col});
                pos_ = j;
                continue;
            }
            Tok k;
            switch (c) {
                case '[': k = Tok::LBracket; break;
                case ']': k = Tok::RBracket; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case ',': k = Tok::Comma; break;
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '/': k = Tok::Slash; break;
                case '=': k = Tok::Eq; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
            }
            out.push_back({k, std::string(1, c), line_, col});
            ++pos_;
        }
        out.push_back({Tok::End, "", line_, column()});
        return out;
    }

private:
    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') {
                ++line_;
                line_start_ = pos_ + 1;
            }
            ++pos_;
        }
    }
    int column() const { return static_cast<int>(pos_ - line_start_) + 1; }
    const std::string& s_;
    size_t pos_ = 0;
    size_t line_start_ = 0;
    int line_;
};

class ExprParser {
public:
    ExprParser(std::vector<Token> toks, const GenSetPtr& set) : toks_(std::move(toks)), set_(set) {}

    // Lie expression: a rational combination of bracket trees.
    std::vector<std::pair<Tree, Rational>> lie_expr() {
        auto out = signed_terms([&] { return lie_factor(); });
        expect(Tok::End, "end of expression");
        return out;
    }

    std::vector<std::pair<Tree, Rational>> magma_expr() {
        auto out = magma_sum();
        expect(Tok::End, "end of expression");
        return out;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }
    bool at(Tok k) const { return cur().kind == k; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expected " + what + (cur().text.empty() ? "" : ", got '" + cur().text + "'"),
                         cur().line, cur().col);
    }
    void expect(Tok k, const std::string& what) {
        if (!at(k)) fail(what);
        ++i_;
    }

    int gen_ref() {
        if (!at(Tok::Ident)) fail("a generator name");
        const Token t = take();
        std::string name = t.text;
        // s(u,v) denotes the suspension generator of the pair.
        if (name == "s" && at(Tok::LParen) && !set_->find("s")) {
            ++i_;
            if (!at(Tok::Ident)) fail("a generator name");
            const std::string u = take().text;
            expect(Tok::Comma, "','");
            if (!at(Tok::Ident)) fail("a generator name");
            const std::string v = take().text;
            expect(Tok::RParen, "')'");
            name = "s(" + u + "," + v + ")";
        }
        const std::optional<int> g = set_->find(name);
        if (!g) throw ParseError("unknown generator '" + name + "'", t.line, t.col);
        return *g;
    }

    Rational rational() {
        if (!at(Tok::Int)) fail("a number");
        Integer num(take().text);
        if (at(Tok::Slash)) {
            ++i_;
            if (!at(Tok::Int)) fail("a denominator");
            Integer den(take().text);
            if (den == 0) throw ParseError("zero denominator", cur().line, cur().col);
            return Rational(num, den);
        }
        return Rational(num);
    }

    template <typename F>
    auto signed_terms(F factor) -> std::vector<std::pair<Tree, Rational>> {
        std::vector<std::pair<Tree, Rational>> out;
        bool neg = false;
        if (at(Tok::Plus) || at(Tok::Minus)) neg = take().kind == Tok::Minus;
        while (true) {
            Rational c(1);
            bool skip_factor = false;
            if (at(Tok::Int)) {
                c = rational();
                if (at(Tok::Star)) {
                    ++i_;
                } else if (c == 0) {
                    skip_factor = true;  // a bare 0 term contributes nothing
                } else {
                    fail("'*' after a coefficient");
                }
            }
            if (neg) c = -c;
            if (!skip_factor)
                for (auto& [tree, q] : factor()) out.emplace_back(tree, c * q);
            if (at(Tok::Plus) || at(Tok::Minus)) {
                neg = take().kind == Tok::Minus;
                continue;
            }
            break;
        }
        return out;
    }

    // One Lie factor as a list of (tree, coeff); brackets multiply out sums.
    std::vector<std::pair<Tree, Rational>> lie_factor() {
        if (at(Tok::LBracket)) {
            ++i_;
            auto l = signed_terms([&] { return lie_factor(); });
            expect(Tok::Comma, "','");
            auto r = signed_terms([&] { return lie_factor(); });
            expect(Tok::RBracket, "']'");
            std::vector<std::pair<Tree, Rational>> out;
            out.reserve(l.size() * r.size());
            for (const auto& [lt, lc] : l)
                for (const auto& [rt, rc] : r) out.emplace_back(Tree::node(lt, rt), lc * rc);
            return out;
        }
        return {{Tree::leaf(gen_ref()), Rational(1)}};
    }

    std::vector<std::pair<Tree, Rational>> magma_sum() {
        return signed_terms([&] { return magma_prod(); });
    }

    std::vector<std::pair<Tree, Rational>> magma_prod() {
        auto l = magma_factor();
        if (!at(Tok::Star)) return l;
        ++i_;
        auto r = magma_factor();
        if (at(Tok::Star))
            throw ParseError("the product is not associative; parenthesize longer products",
                             cur().line, cur().col);
        std::vector<std::pair<Tree, Rational>> out;
        out.reserve(l.size() * r.size());
        for (const auto& [lt, lc] : l)
            for (const auto& [rt, rc] : r) out.emplace_back(Tree::node(lt, rt), lc * rc);
        return out;
    }

    std::vector<std::pair<Tree, Rational>> magma_factor() {
        if (at(Tok::LParen)) {
            // Either a parenthesized sum or the suspension form handled in gen_ref
            // (only reached when the previous token was not 's').
            ++i_;
            auto inner = magma_sum();
            expect(Tok::RParen, "')'");
            return inner;
        }
        return {{Tree::leaf(gen_ref()), Rational(1)}};
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    GenSetPtr set_;
};

std::vector<std::pair<int, std::string>> split_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;
    size_t start = 0;
    int n = 1;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            lines.emplace_back(n, text.substr(start, i - start));
            start = i + 1;
            ++n;
        }
    }
    return lines;
}

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

DglPresentation parse_dgl(const std::string& text) {
    const auto lines = split_lines(text);

    std::string name;
    bool saw_header = false;
    std::vector<Generator> gens;
    std::map<std::string, int> index;
    struct DiffLine {
        int line;
        std::string gen;
        std::vector<Token> expr;
    };
    std::vector<DiffLine> diffs;

    for (const auto& [lineno, raw_line] : lines) {
        std::string line = raw_line;
        if (const size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        if (strip(line).empty()) continue;

        std::vector<Token> toks = Lexer(line, lineno).run();
        if (toks[0].kind != Tok::Ident)
            throw ParseError("expected one of: dgl, gen, diff", lineno, toks[0].col);
        const std::string& kw = toks[0].text;

        if (kw == "dgl") {
            const size_t at = line.find("dgl");
            name = strip(line.substr(at + 3));
            if (name.empty()) throw ParseError("missing name after 'dgl'", lineno, toks[0].col);
            saw_header = true;
            continue;
        }
        if (kw == "gen") {
            size_t i = 1;
            if (toks[i].kind != Tok::Ident) throw ParseError("expected a generator name", lineno, toks[i].col);
            std::string gname = toks[i].text;
            Generator g;
            ++i;
            if (gname == "s" && toks[i].kind == Tok::LParen) {
                ++i;
                if (toks[i].kind != Tok::Ident) throw ParseError("expected a generator name", lineno, toks[i].col);
                const std::string u = toks[i++].text;
                if (toks[i].kind != Tok::Comma) throw ParseError("expected ','", lineno, toks[i].col);
                ++i;
                if (toks[i].kind != Tok::Ident) throw ParseError("expected a generator name", lineno, toks[i].col);
                const std::string v = toks[i++].text;
                if (toks[i].kind != Tok::RParen) throw ParseError("expected ')'", lineno, toks[i].col);
                ++i;
                auto iu = index.find(u), iv = index.find(v);
                if (iu == index.end()) throw ParseError("unknown generator '" + u + "'", lineno, toks[1].col);
                if (iv == index.end()) throw ParseError("unknown generator '" + v + "'", lineno, toks[1].col);
                gname = "s(" + u + "," + v + ")";
                g.origin = Origin::Suspension;
                g.left = iu->second;
                g.right = iv->second;
            }
            if (toks[i].kind != Tok::Int) throw ParseError("expected a degree", lineno, toks[i].col);
            g.name = gname;
            g.degree = std::stoi(toks[i].text);
            ++i;
            if (toks[i].kind != Tok::End) throw ParseError("trailing input after generator", lineno, toks[i].col);
            if (!index.emplace(gname, static_cast<int>(gens.size())).second)
                throw ParseError("duplicate generator '" + gname + "'", lineno, toks[1].col);
            gens.push_back(std::move(g));
            continue;
        }
        if (kw == "diff") {
            size_t i = 1;
            if (toks[i].kind != Tok::Ident) throw ParseError("expected a generator name", lineno, toks[i].col);
            std::string gname = toks[i].text;
            ++i;
            if (gname == "s" && toks[i].kind == Tok::LParen && index.find("s") == index.end()) {
                if (toks[i + 1].kind != Tok::Ident || toks[i + 2].kind != Tok::Comma ||
                    toks[i + 3].kind != Tok::Ident || toks[i + 4].kind != Tok::RParen)
                    throw ParseError("malformed suspension name", lineno, toks[i].col);
                gname = "s(" + toks[i + 1].text + "," + toks[i + 3].text + ")";
                i += 5;
            }
            if (toks[i].kind != Tok::Eq) throw ParseError("expected '='", lineno, toks[i].col);
            ++i;
            diffs.push_back({lineno, gname, std::vector<Token>(toks.begin() + static_cast<long>(i), toks.end())});
            continue;
        }
        throw ParseError("expected one of: dgl, gen, diff", lineno, toks[0].col);
    }

    if (!saw_header) throw ParseError("missing 'dgl NAME' header line", 1, 1);
    if (gens.empty()) throw ParseError("no generators declared", static_cast<int>(lines.size()), 1);

    GenSetPtr set;
    try {
        set = GeneratorSet::make(std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }

    std::vector<LieElement> diff(static_cast<size_t>(set->size()), LieElement(set));
    std::vector<bool> seen(static_cast<size_t>(set->size()), false);
    for (auto& d : diffs) {
        const std::optional<int> g = set->find(d.gen);
        if (!g) throw ParseError("unknown generator '" + d.gen + "'", d.line, 1);
        if (seen[static_cast<size_t>(*g)])
            throw ParseError("duplicate boundary for '" + d.gen + "'", d.line, 1);
        seen[static_cast<size_t>(*g)] = true;
        LieElement v(set);
        ExprParser p(std::move(d.expr), set);
        v = LieElement::normalized(set, [&] {
            Raw raw;
            for (auto& [tree, c] : p.lie_expr()) raw.push_back({tree, c});
            return raw;
        }());
        if (!v.empty()) {
            const std::optional<int> vd = v.degree();
            if (!vd || *vd != set->degree(*g) - 1)
                throw ParseError("boundary of '" + d.gen + "' must be homogeneous of degree " +
                                     std::to_string(set->degree(*g) - 1),
                                 d.line, 1);
        }
        diff[static_cast<size_t>(*g)] = std::move(v);
    }
    return DglPresentation(name, set, std::move(diff));
}

LieElement parse_lie_expr(const std::string& text, const GenSetPtr& set) {
    ExprParser p(Lexer(text, 1).run(), set);
    Raw raw;
    for (auto& [tree, c] : p.lie_expr()) raw.push_back({tree, c});
    return LieElement::normalized(set, raw);
}

MagmaElement parse_magma_expr(const std::string& text, const GenSetPtr& set) {
    ExprParser p(Lexer(text, 1).run(), set);
    return MagmaElement::from_terms(set, p.magma_expr());
}

}  // namespace gla
