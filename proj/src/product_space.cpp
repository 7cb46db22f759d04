#include "gla/product_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace gla {

int ProductSpace::susp_index(int v_prod, int w_prod) const {
    const std::optional<int> s = set->suspension_of(v_prod, w_prod);
    if (!s) throw std::invalid_argument("no suspension for this pair");
    return *s;
}

LieElement ProductSpace::susp_generator(int v_prod, int w_prod) const {
    return LieElement::generator(set, susp_index(v_prod, w_prod));
}

namespace {
Tree remap_tree(const Tree& t, int offset) {
    if (t.is_leaf()) return Tree::leaf(t.gen() + offset);
    return Tree::node(remap_tree(t.left(), offset), remap_tree(t.right(), offset));
}

LieElement remap_element(const LieElement& x, const GenSetPtr& target, int offset) {
    Raw raw;
    raw.reserve(x.terms().size());
    for (const auto& [tree, c] : x.terms()) raw.push_back({remap_tree(tree, offset), c});
    return LieElement::normalized(target, raw);
}
}  // namespace

LieElement ProductSpace::include_left(const LieElement& x) const {
    if (!same_generator_set(x.set(), left.set())) throw std::invalid_argument("include_left: element not over left factor");
    return remap_element(x, set, 0);
}

LieElement ProductSpace::include_right(const LieElement& y) const {
    if (!same_generator_set(y.set(), right.set())) throw std::invalid_argument("include_right: element not over right factor");
    return remap_element(y, set, nv);
}

Derivation ProductSpace::factor_differential() const {
    std::vector<LieElement> values;
    values.reserve(static_cast<size_t>(set->size()));
    for (int g = 0; g < set->size(); ++g) {
        if (is_left(g))
            values.push_back(include_left(left.diff(g)));
        else if (is_right(g))
            values.push_back(include_right(right.diff(g - nv)));
        else
            values.push_back(LieElement(set));
    }
    return make_derivation(set, -1, std::move(values));
}

std::vector<bool> ProductSpace::susp_mask() const {
    std::vector<bool> m(static_cast<size_t>(set->size()), false);
    for (int g = 0; g < set->size(); ++g) m[static_cast<size_t>(g)] = is_susp(g);
    return m;
}

std::vector<bool> ProductSpace::factor_mask() const {
    std::vector<bool> m(static_cast<size_t>(set->size()), false);
    for (int g = 0; g < set->size(); ++g) m[static_cast<size_t>(g)] = !is_susp(g);
    return m;
}

ProductSpace make_product_space(const DglPresentation& X, const DglPresentation& Y) {
    const GenSetPtr& xs = X.set();
    const GenSetPtr& ys = Y.set();
    std::vector<Generator> gens;
    gens.reserve(static_cast<size_t>(xs->size() + ys->size() + xs->size() * ys->size()));
    for (int i = 0; i < xs->size(); ++i) {
        Generator g = xs->at(i);
        if (ys->find(g.name)) throw std::invalid_argument("product factors share generator name '" + g.name +
                                                          "'; rename one factor");
        g.origin = Origin::Left;
        gens.push_back(std::move(g));
    }
    for (int i = 0; i < ys->size(); ++i) {
        Generator g = ys->at(i);
        g.origin = Origin::Right;
        gens.push_back(std::move(g));
    }
    // Suspensions after the factors, ordered by (|v|, |w|, names).
    struct Key {
        int dv, dw;
        std::string nv, nw;
        int vi, wi;
    };
    std::vector<Key> keys;
    for (int vi = 0; vi < xs->size(); ++vi)
        for (int wi = 0; wi < ys->size(); ++wi)
            keys.push_back({xs->degree(vi), ys->degree(wi), xs->at(vi).name, ys->at(wi).name, vi, wi});
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        return std::tie(a.dv, a.dw, a.nv, a.nw) < std::tie(b.dv, b.dw, b.nv, b.nw);
    });
    for (const Key& k : keys) {
        Generator s;
        s.name = "s(" + k.nv + "," + k.nw + ")";
        s.degree = k.dv + k.dw + 1;
        s.origin = Origin::Suspension;
        s.left = k.vi;
        s.right = xs->size() + k.wi;
        gens.push_back(std::move(s));
    }
    ProductSpace ps{GeneratorSet::make(std::move(gens)), X, Y, xs->size(), ys->size()};
    return ps;
}

Derivation sigma_left(const ProductSpace& ps, int v_prod) {
    if (!ps.is_left(v_prod)) throw std::invalid_argument("sigma_left: not a left generator");
    std::vector<LieElement> values;
    values.reserve(static_cast<size_t>(ps.set->size()));
    for (int g = 0; g < ps.set->size(); ++g) {
        if (ps.is_right(g))
            values.push_back(ps.susp_generator(v_prod, g));
        else
            values.push_back(LieElement(ps.set));
    }
    return make_derivation(ps.set, ps.set->degree(v_prod) + 1, std::move(values));
}

Derivation sigma_right(const ProductSpace& ps, int w_prod) {
    if (!ps.is_right(w_prod)) throw std::invalid_argument("sigma_right: not a right generator");
    std::vector<LieElement> values;
    values.reserve(static_cast<size_t>(ps.set->size()));
    const bool w_odd = ps.set->odd(w_prod);
    for (int g = 0; g < ps.set->size(); ++g) {
        if (ps.is_left(g)) {
            LieElement s = ps.susp_generator(g, w_prod);
            if (w_odd && ps.set->odd(g)) s *= Rational(-1);
            values.push_back(std::move(s));
        } else {
            values.push_back(LieElement(ps.set));
        }
    }
    return make_derivation(ps.set, ps.set->degree(w_prod) + 1, std::move(values));
}

Derivation sigma_of(const ProductSpace& ps, const LieElement& A) {
    if (!same_generator_set(A.set(), ps.set)) throw std::invalid_argument("sigma_of: element not over the product set");
    if (A.has_leaf_where(ps.susp_mask()))
        throw std::invalid_argument("sigma_of: element must be supported on the factor generators");
    const std::optional<int> deg = A.degree();
    if (!A.empty() && !deg) throw std::invalid_argument("sigma_of: element must be homogeneous");
    const int a = deg.value_or(0);

    std::vector<LieElement> values;
    values.reserve(static_cast<size_t>(ps.set->size()));
    for (int g = 0; g < ps.set->size(); ++g) {
        if (ps.is_susp(g) || A.empty()) {
            values.push_back(LieElement(ps.set));
            continue;
        }
        const Derivation basic = ps.is_left(g) ? sigma_left(ps, g) : sigma_right(ps, g);
        LieElement v = apply(basic, A);
        if ((ps.set->degree(g) % 2 != 0) && (a % 2 != 0)) v *= Rational(-1);
        values.push_back(std::move(v));
    }
    return make_derivation(ps.set, a + 1, std::move(values));
}

LieElement apply_morphism(const std::vector<LieElement>& images, const GenSetPtr& target,
                          const LieElement& x) {
    if (images.size() != static_cast<size_t>(x.set()->size()))
        throw std::invalid_argument("apply_morphism: one image per generator required");
    struct Rec {
        const std::vector<LieElement>& images;
        LieElement go(const Tree& t) {
            if (t.is_leaf()) return images[static_cast<size_t>(t.gen())];
            return bracket(go(t.left()), go(t.right()));
        }
    } rec{images};
    LieElement out(target);
    for (const auto& [tree, c] : x.terms()) out += c * rec.go(tree);
    return out;
}

}  // namespace gla
