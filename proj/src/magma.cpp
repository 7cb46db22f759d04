#include "gla/magma.hpp"

#include <stdexcept>
#include <unordered_map>

namespace gla {

MagmaElement::MagmaElement(GenSetPtr set) : set_(std::move(set)), terms_(TermLess{set_.get()}) {
    if (!set_) throw std::invalid_argument("MagmaElement: null generator set");
}

MagmaElement MagmaElement::generator(const GenSetPtr& set, int gen) {
    MagmaElement x(set);
    if (gen < 0 || gen >= set->size()) throw std::invalid_argument("MagmaElement: bad generator index");
    x.terms_.emplace(Tree::leaf(gen), Rational(1));
    return x;
}

MagmaElement MagmaElement::from_terms(const GenSetPtr& set,
                                      const std::vector<std::pair<Tree, Rational>>& terms) {
    MagmaElement x(set);
    for (const auto& [tree, c] : terms) {
        if (c == 0) continue;
        auto [it, inserted] = x.terms_.try_emplace(tree, 0);
        it->second += c;
        if (it->second == 0) x.terms_.erase(it);
    }
    return x;
}

std::optional<int> MagmaElement::degree() const {
    std::optional<int> d;
    for (const auto& [tree, c] : terms_) {
        const int td = tree.degree(*set_);
        if (d && *d != td) return std::nullopt;
        d = td;
    }
    return d;
}

MagmaElement& MagmaElement::operator+=(const MagmaElement& o) {
    if (!same_generator_set(set_, o.set_)) throw std::invalid_argument("MagmaElement: generator set mismatch");
    for (const auto& [tree, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(tree, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

MagmaElement& MagmaElement::operator-=(const MagmaElement& o) {
    if (!same_generator_set(set_, o.set_)) throw std::invalid_argument("MagmaElement: generator set mismatch");
    for (const auto& [tree, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(tree, 0);
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

MagmaElement& MagmaElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [tree, coeff] : terms_) coeff *= c;
    return *this;
}

bool MagmaElement::operator==(const MagmaElement& o) const {
    if (!same_generator_set(set_, o.set_) || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

MagmaElement magma_mul(const MagmaElement& a, const MagmaElement& b) {
    if (!same_generator_set(a.set(), b.set())) throw std::invalid_argument("magma_mul: generator set mismatch");
    std::vector<std::pair<Tree, Rational>> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            terms.emplace_back(Tree::node(ta, tb), ca * cb);
    return MagmaElement::from_terms(a.set(), terms);
}

LieElement underline(const MagmaElement& a) {
    Raw raw;
    raw.reserve(a.terms().size());
    for (const auto& [tree, c] : a.terms()) raw.push_back({tree, c});
    return LieElement::normalized(a.set(), raw);
}

MagmaElement jacobiator(const MagmaElement& a, const MagmaElement& b, const MagmaElement& c) {
    if (!same_generator_set(a.set(), b.set()) || !same_generator_set(b.set(), c.set()))
        throw std::invalid_argument("jacobiator: generator set mismatch");
    const GeneratorSet& set = *a.set();
    std::vector<std::pair<Tree, Rational>> terms;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            for (const auto& [tc, cc] : c.terms()) {
                const Rational coeff = ca * cb * cc;
                terms.emplace_back(Tree::node(ta, Tree::node(tb, tc)), coeff);
                terms.emplace_back(Tree::node(Tree::node(ta, tb), tc), -coeff);
                const bool flip = (ta.degree(set) % 2 != 0) && (tb.degree(set) % 2 != 0);
                terms.emplace_back(Tree::node(tb, Tree::node(ta, tc)), flip ? coeff : -coeff);
            }
    return MagmaElement::from_terms(a.set(), terms);
}

MagmaElement lift(const LieElement& x) {
    std::vector<std::pair<Tree, Rational>> terms;
    terms.reserve(x.terms().size());
    for (const auto& [tree, c] : x.terms()) terms.emplace_back(tree, c);
    return MagmaElement::from_terms(x.set(), terms);
}

namespace {

struct StarContext {
    const ProductSpace& ps;
    int t_degree;
    const LieElement& T;  // over the product set, homogeneous
    std::unordered_map<Tree, LieElement, TreeHash> memo;

    LieElement underline_in_product(const Tree& magma_tree) {
        // Left-factor indices coincide with product indices, so the tree can
        // be normalized over the product set directly.
        return LieElement::normalized(ps.set, {{magma_tree, Rational(1)}});
    }

    LieElement go(const Tree& t) {
        if (t.is_leaf()) return LieElement(ps.set);
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;

        const Tree A = t.left(), B = t.right();
        const int dega = A.degree(*ps.set), degb = B.degree(*ps.set);
        const LieElement uA = underline_in_product(A);
        const LieElement uB = underline_in_product(B);

        LieElement out(ps.set);
        if (!uA.empty() && !uB.empty()) {
            LieElement s = apply(sigma_of(ps, uA), apply(sigma_of(ps, uB), T));
            if (dega % 2 != 0) s *= Rational(-1);
            out += s;
        }
        LieElement starA = go(A);
        if (!starA.empty() && !uB.empty()) {
            LieElement s = bracket(starA, uB);
            if ((degb % 2 != 0) && (t_degree % 2 != 0)) s *= Rational(-1);
            out += s;
        }
        LieElement starB = go(B);
        if (!uA.empty() && !starB.empty()) out += bracket(uA, starB);

        memo.emplace(t, out);
        return out;
    }
};

}  // namespace

LieElement star(const ProductSpace& ps, const MagmaElement& A, const LieElement& T) {
    if (!same_generator_set(A.set(), ps.left.set())) throw std::invalid_argument("star: A must live over the left factor");
    if (!same_generator_set(T.set(), ps.right.set())) throw std::invalid_argument("star: T must live over the right factor");
    LieElement out(ps.set);
    const LieElement Tp = ps.include_right(T);
    for (int d : Tp.term_degrees()) {
        const LieElement Tc = Tp.component(d);
        StarContext ctx{ps, d, Tc, {}};
        for (const auto& [tree, c] : A.terms()) out += c * ctx.go(tree);
    }
    return out;
}

}  // namespace gla
