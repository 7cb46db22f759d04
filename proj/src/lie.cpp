#include "gla/lie.hpp"

#include <stdexcept>

namespace gla {

LieElement::LieElement(GenSetPtr set) : set_(std::move(set)), terms_(TermLess{set_.get()}) {
    if (!set_) throw std::invalid_argument("LieElement: null generator set");
}

LieElement LieElement::generator(const GenSetPtr& set, int gen) {
    LieElement x(set);
    if (gen < 0 || gen >= set->size()) throw std::invalid_argument("LieElement: bad generator index");
    x.terms_.emplace(Tree::leaf(gen), Rational(1));
    return x;
}

LieElement LieElement::normalized(const GenSetPtr& set, const Raw& raw,
                                  std::optional<int> max_degree, ExpansionCache* cache) {
    LieElement x(set);
    TensorElement t;
    for (const RawTerm& term : raw) {
        if (term.coeff == 0) continue;
        if (max_degree && term.tree.degree(*set) > *max_degree) continue;
        add_scaled(t, *expand_tree(term.tree, *set, cache), term.coeff);
    }
    // Peel leading words.  The lex-minimal word of a nonzero Lie element is
    // always a Lyndon word or an odd square; anything else means the sign
    // conventions are broken, so fail loudly.
    while (!t.empty()) {
        const auto& [w, c] = *t.begin();
        std::optional<Tree> b = basis_tree_for_leading(w, *set);
        if (!b) throw std::logic_error("normalize: leading word is not a basis leading word");
        ExpansionPtr e = expand_tree(*b, *set, cache);
        if (e->empty() || !(e->front().first == w))
            throw std::logic_error("normalize: basis expansion does not lead with its word");
        Rational q = c / e->front().second;
        add_scaled(t, *e, -q);
        x.terms_.emplace(*b, std::move(q));
    }
    return x;
}

std::optional<int> LieElement::degree() const {
    std::optional<int> d;
    for (const auto& [tree, c] : terms_) {
        const int td = tree.degree(*set_);
        if (d && *d != td) return std::nullopt;
        d = td;
    }
    return d;
}

std::vector<int> LieElement::term_degrees() const {
    std::vector<int> out;
    for (const auto& [tree, c] : terms_) {
        const int d = tree.degree(*set_);
        if (out.empty() || out.back() != d) out.push_back(d);
    }
    return out;  // terms_ is degree-ordered, so this is sorted unique
}

LieElement LieElement::component(int degree) const {
    LieElement out(set_);
    for (const auto& [tree, c] : terms_)
        if (tree.degree(*set_) == degree) out.terms_.emplace(tree, c);
    return out;
}

Raw LieElement::raw() const {
    Raw r;
    r.reserve(terms_.size());
    for (const auto& [tree, c] : terms_) r.push_back({tree, c});
    return r;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (!same_generator_set(set_, o.set_)) throw std::invalid_argument("LieElement: generator set mismatch");
    for (const auto& [tree, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(tree, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (!same_generator_set(set_, o.set_)) throw std::invalid_argument("LieElement: generator set mismatch");
    for (const auto& [tree, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(tree, 0);
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [tree, coeff] : terms_) coeff *= c;
    return *this;
}

LieElement LieElement::operator-() const {
    LieElement out(*this);
    for (auto& [tree, coeff] : out.terms_) coeff = -coeff;
    return out;
}

bool LieElement::operator==(const LieElement& o) const {
    if (!same_generator_set(set_, o.set_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

bool LieElement::uses_only_leaves(const std::vector<bool>& allowed) const {
    for (const auto& [tree, c] : terms_)
        if (!tree.uses_only_leaves(allowed)) return false;
    return true;
}

bool LieElement::has_leaf_where(const std::vector<bool>& mark) const {
    for (const auto& [tree, c] : terms_)
        if (tree.has_leaf_where(mark)) return true;
    return false;
}

int LieElement::min_bracket_length() const {
    int m = 0;
    for (const auto& [tree, c] : terms_)
        if (m == 0 || tree.leaf_count() < m) m = tree.leaf_count();
    return m;
}

LieElement bracket(const LieElement& a, const LieElement& b, std::optional<int> max_degree) {
    if (!same_generator_set(a.set(), b.set())) throw std::invalid_argument("bracket: generator set mismatch");
    Raw raw;
    raw.reserve(a.terms().size() * b.terms().size());
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            raw.push_back({Tree::node(ta, tb), ca * cb});
    return LieElement::normalized(a.set(), raw, max_degree);
}

bool is_zero_raw(const GeneratorSet& set, const Raw& raw) {
    return tensor_expand_raw(raw, set).empty();
}

bool is_zero(const LieElement& x) { return is_zero_raw(*x.set(), x.raw()); }

TensorElement tensor_expand(const LieElement& x) { return tensor_expand_raw(x.raw(), *x.set()); }

}  // namespace gla
