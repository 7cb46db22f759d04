#include "gla/tensor.hpp"

namespace gla {

ExpansionPtr ExpansionCache::find(const Tree& t) const {
    auto it = memo_.find(t);
    return it == memo_.end() ? nullptr : it->second;
}

void ExpansionCache::insert(const Tree& t, ExpansionPtr e) {
    if (t.leaf_count() <= max_leaves_) memo_.emplace(t, std::move(e));
}

namespace {

Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// All words of one expansion share a letter multiset, so iterating the two
// sorted factors in order yields the concatenation products already sorted.
Expansion product(const Expansion& a, const Expansion& b) {
    Expansion out;
    out.reserve(a.size() * b.size());
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            out.emplace_back(concat(wa, wb), ca * cb);
    return out;
}

Expansion merge_signed(const Expansion& p, const Expansion& q, int sign_q) {
    Expansion out;
    out.reserve(p.size() + q.size());
    WordLess less;
    size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size() || (i < p.size() && less(p[i].first, q[j].first))) {
            out.push_back(p[i++]);
        } else if (i == p.size() || less(q[j].first, p[i].first)) {
            out.emplace_back(q[j].first, sign_q > 0 ? q[j].second : -q[j].second);
            ++j;
        } else {
            Rational c = p[i].second + (sign_q > 0 ? q[j].second : -q[j].second);
            if (c != 0) out.emplace_back(p[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

ExpansionPtr expand_tree(const Tree& t, const GeneratorSet& set, ExpansionCache* cache) {
    if (cache)
        if (ExpansionPtr hit = cache->find(t)) return hit;

    ExpansionPtr result;
    if (t.is_leaf()) {
        Expansion e;
        e.emplace_back(Word{static_cast<std::uint16_t>(t.gen())}, Rational(1));
        result = std::make_shared<Expansion>(std::move(e));
    } else {
        const Tree l = t.left(), r = t.right();
        ExpansionPtr el = expand_tree(l, set, cache);
        ExpansionPtr er = expand_tree(r, set, cache);
        // [A,B] = AB - (-1)^{|A||B|} BA
        const bool both_odd = (l.degree(set) % 2 != 0) && (r.degree(set) % 2 != 0);
        const int sign_q = both_odd ? 1 : -1;
        result = std::make_shared<Expansion>(merge_signed(product(*el, *er), product(*er, *el), sign_q));
    }
    if (cache) cache->insert(t, result);
    return result;
}

void add_scaled(TensorElement& dst, const Expansion& e, const Rational& c) {
    if (c == 0) return;
    for (const auto& [w, coeff] : e) {
        auto [it, inserted] = dst.try_emplace(w, 0);
        it->second += c * coeff;
        if (it->second == 0) dst.erase(it);
    }
}

TensorElement tensor_expand_raw(const Raw& raw, const GeneratorSet& set, ExpansionCache* cache) {
    TensorElement out;
    for (const RawTerm& t : raw) add_scaled(out, *expand_tree(t.tree, set, cache), t.coeff);
    return out;
}

}  // namespace gla
