#include "gla/diagonal.hpp"

#include <stdexcept>
#include <unordered_map>

namespace gla {

DglPresentation prime_copy(const DglPresentation& X, const std::string& suffix) {
    std::vector<Generator> gens;
    gens.reserve(static_cast<size_t>(X.set()->size()));
    for (int g = 0; g < X.set()->size(); ++g) {
        Generator c = X.set()->at(g);
        c.name += suffix;
        gens.push_back(std::move(c));
    }
    GenSetPtr set = GeneratorSet::make(std::move(gens));
    std::vector<LieElement> diff;
    diff.reserve(static_cast<size_t>(X.set()->size()));
    for (int g = 0; g < X.set()->size(); ++g) {
        Raw raw;
        for (const auto& [tree, c] : X.diff(g).terms()) raw.push_back({tree, c});
        diff.push_back(LieElement::normalized(set, raw));
    }
    return DglPresentation(X.name() + suffix, set, std::move(diff));
}

LieElement include_base(const DiagonalModel& m, const LieElement& x) {
    return m.product.space.include_left(x);
}

LieElement include_primed(const DiagonalModel& m, const LieElement& x) {
    if (!same_generator_set(x.set(), m.base.set())) throw std::invalid_argument("include_primed: element not over the base");
    Raw raw;
    for (const auto& [tree, c] : x.terms()) raw.push_back({tree, c});
    return m.product.space.include_right(LieElement::normalized(m.primed.set(), raw));
}

LieElement apply_diagonal(const DiagonalModel& m, const LieElement& x) {
    return apply_morphism(m.delta, m.product.space.set, x);
}

namespace {

// Shared recursion state: the product of the base with its primed copy and
// the morphism v -> v + v' on the zero-boundary stage.
struct GammaContext {
    const DiagonalModel& m;
    std::vector<LieElement> delta0;  // zero on positive stages, never used there
    std::unordered_map<Tree, LieElement, TreeHash> memo;

    explicit GammaContext(const DiagonalModel& model) : m(model) {
        const ProductSpace& ps = m.product.space;
        for (int g = 0; g < m.base.set()->size(); ++g) {
            LieElement v(ps.set);
            if (m.base.diff(g).empty())
                v = LieElement::generator(ps.set, g) + LieElement::generator(ps.set, ps.nv + g);
            delta0.push_back(std::move(v));
        }
    }

    LieElement underline_base(const Tree& t) const {
        return LieElement::normalized(m.base.set(), {{t, Rational(1)}});
    }

    LieElement spread(const LieElement& u) const {  // delta0(u) + u + u'
        return apply_morphism(delta0, m.product.space.set, u) + include_base(m, u) +
               include_primed(m, u);
    }

    LieElement go(const Tree& t) {
        const ProductSpace& ps = m.product.space;
        if (t.is_leaf()) {
            if (!m.base.diff(t.gen()).empty())
                throw std::invalid_argument("gamma: leaf '" + m.base.set()->at(t.gen()).name +
                                            "' has a nonzero boundary");
            return LieElement(ps.set);
        }
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;

        const Tree A = t.left(), B = t.right();
        const int dega = A.degree(*m.base.set()), degb = B.degree(*m.base.set());
        const LieElement uA = underline_base(A), uB = underline_base(B);

        LieElement out(ps.set);
        if (!uA.empty() && !uB.empty()) {
            out += apply(sigma_of(ps, include_base(m, uA)), include_primed(m, uB));
            LieElement s = apply(sigma_of(ps, include_base(m, uB)), include_primed(m, uA));
            if ((dega * degb) % 2 == 0) s *= Rational(-1);
            out += s;
        }
        const LieElement gB = go(B);
        if (!uA.empty() && !gB.empty()) {
            LieElement s = bracket(spread(uA), gB);
            s *= Rational(dega % 2 == 0 ? 1 : -1, 2);
            out += s;
        }
        const LieElement gA = go(A);
        if (!gA.empty() && !uB.empty()) {
            LieElement s = bracket(gA, spread(uB));
            s *= Rational(1, 2);
            out += s;
        }

        memo.emplace(t, out);
        return out;
    }
};

}  // namespace

LieElement gamma(const DiagonalModel& m, const MagmaElement& A) {
    if (!same_generator_set(A.set(), m.base.set())) throw std::invalid_argument("gamma: element not over the base");
    GammaContext ctx(m);
    LieElement out(m.product.space.set);
    for (const auto& [tree, c] : A.terms()) out += c * ctx.go(tree);
    return out;
}

std::pair<LieElement, LieElement> gamma_boundary_check(const DiagonalModel& m,
                                                       const MagmaElement& A) {
    GammaContext ctx(m);
    LieElement g(m.product.space.set);
    for (const auto& [tree, c] : A.terms()) g += c * ctx.go(tree);
    const LieElement lhs = apply(m.product.model.differential(), g);
    const LieElement uA = underline(A);
    const LieElement rhs = apply_morphism(ctx.delta0, m.product.space.set, uA) -
                           include_base(m, uA) - include_primed(m, uA);
    return {lhs, rhs};
}

LieElement gamma_jacobiator_witness(const DiagonalModel& m, const MagmaElement& A,
                                    const MagmaElement& B, const MagmaElement& C) {
    const ProductSpace& ps = m.product.space;
    const auto da = A.degree(), db = B.degree(), dc = C.degree();
    if (!da || !db || !dc)
        throw std::invalid_argument("gamma_jacobiator_witness: inputs must be homogeneous");
    const int pa = *da % 2, pb = *db % 2, pc = *dc % 2;

    const Derivation D = m.product.model.differential();
    GammaContext ctx(m);
    auto gm = [&](const MagmaElement& x) {
        LieElement out(ps.set);
        for (const auto& [tree, c] : x.terms()) out += c * ctx.go(tree);
        return out;
    };
    const LieElement uA = underline(A), uB = underline(B), uC = underline(C);
    const LieElement gA = gm(A), gB = gm(B), gC = gm(C);
    const LieElement DgA = apply(D, gA), DgB = apply(D, gB), DgC = apply(D, gC);

    auto sig = [&](const LieElement& u, const LieElement& v) {  // sigma_u(v')
        if (u.empty() || v.empty()) return LieElement(ps.set);
        return apply(sigma_of(ps, include_base(m, u)), include_primed(m, v));
    };
    auto sig2 = [&](const LieElement& u, const LieElement& v, const LieElement& w) {
        if (u.empty() || v.empty() || w.empty()) return LieElement(ps.set);
        return apply(sigma_of(ps, include_base(m, u)),
                     apply(sigma_of(ps, include_base(m, v)), include_primed(m, w)));
    };
    auto sgn = [](int parity) { return Rational(parity == 0 ? 1 : -1); };

    LieElement w(ps.set);
    w += sgn(pa) * sig2(uA, uB, uC);
    w -= sgn((pa + pb * pc) % 2) * sig2(uA, uC, uB);
    w += sgn((pa * pb + pa * pc + pb) % 2) * sig2(uB, uC, uA);

    const Rational sixth(1, 6);
    LieElement inner_bc = sig(uB, uC) - sgn(pb * pc) * sig(uC, uB) -
                          sixth * sgn(pb) * bracket(DgB, gC) - sixth * bracket(gB, DgC);
    LieElement inner_ab = sig(uA, uB) - sgn(pa * pb) * sig(uB, uA) -
                          sixth * sgn(pa) * bracket(DgA, gB) - sixth * bracket(gA, DgB);
    LieElement inner_ac = sig(uA, uC) - sgn(pa * pc) * sig(uC, uA) -
                          sixth * sgn(pa) * bracket(DgA, gC) - sixth * bracket(gA, DgC);

    const Rational half(1, 2);
    w += half * sgn(pa) * bracket(gA, inner_bc);
    w += half * sgn((pa + pb) % 2) * bracket(inner_ab, gC);
    w -= half * sgn((pa * pb + pb) % 2) * bracket(gB, inner_ac);

    const LieElement boundary = apply(D, w);
    const LieElement target = gm(jacobiator(A, B, C));
    if (boundary != target)
        throw std::logic_error("gamma_jacobiator_witness: boundary does not match");
    return w;
}

bool diagonal_chain_map_check(const DiagonalModel& m) {
    const Derivation D = m.product.model.differential();
    for (int g = 0; g < m.base.set()->size(); ++g)
        if (apply(D, m.delta[static_cast<size_t>(g)]) != apply_diagonal(m, m.base.diff(g)))
            return false;
    return true;
}

bool diagonal_projection_check(const DiagonalModel& m) {
    const ProductSpace& ps = m.product.space;
    std::vector<LieElement> to_base, to_primed;
    for (int g = 0; g < ps.set->size(); ++g) {
        to_base.push_back(ps.is_left(g) ? LieElement::generator(m.base.set(), g)
                                        : LieElement(m.base.set()));
        to_primed.push_back(ps.is_right(g) ? LieElement::generator(m.primed.set(), g - ps.nv)
                                           : LieElement(m.primed.set()));
    }
    for (int g = 0; g < m.base.set()->size(); ++g) {
        const LieElement& dg = m.delta[static_cast<size_t>(g)];
        if (apply_morphism(to_base, m.base.set(), dg) != LieElement::generator(m.base.set(), g))
            return false;
        if (apply_morphism(to_primed, m.primed.set(), dg) !=
            LieElement::generator(m.primed.set(), g))
            return false;
    }
    return true;
}

DiagonalModel build_diagonal(const DglPresentation& X) {
    const ValidationReport r = validate(X);
    if (!r.ok) throw std::invalid_argument("diagonal: input '" + X.name() + "' failed validation");
    if (r.filtration && r.filtration->length() > 2)
        throw std::invalid_argument("diagonal: '" + X.name() + "' has cone length > 2");

    DglPresentation primed = prime_copy(X);
    ProductModel product = build_product_model(X, primed);
    DiagonalModel m{X, std::move(primed), std::move(product), {}};

    GammaContext ctx(m);
    const ProductSpace& ps = m.product.space;
    for (int g = 0; g < X.set()->size(); ++g) {
        LieElement v = LieElement::generator(ps.set, g) + LieElement::generator(ps.set, ps.nv + g);
        const MagmaElement dg_lift = lift(X.diff(g));
        for (const auto& [tree, c] : dg_lift.terms()) v += c * ctx.go(tree);
        m.delta.push_back(std::move(v));
    }

    if (!diagonal_chain_map_check(m))
        throw std::logic_error("diagonal: values do not commute with the differentials");
    if (!diagonal_projection_check(m))
        throw std::logic_error("diagonal: projections do not restrict to the identity");
    return m;
}

}  // namespace gla
