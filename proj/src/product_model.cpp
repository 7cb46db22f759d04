#include "gla/product_model.hpp"

#include <stdexcept>

namespace gla {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Factor: return "factor";
        case Branch::CrossOnly: return "cross";
        case Branch::LeftCone: return "left-cone";
        case Branch::RightCone: return "right-cone";
        case Branch::Full: return "full";
        case Branch::Formal: return "formal";
        case Branch::Adjusted: return "adjusted";
    }
    return "?";
}

LieElement suspension_differential(const ProductSpace& ps, int v_prod, int w_prod,
                                   const MagmaElement& dv_lift, ExpansionCache* cache) {
    const int degv = ps.set->degree(v_prod);
    const int degw = ps.set->degree(w_prod);
    const LieElement dv = ps.include_left(ps.left.diff(v_prod));
    const LieElement dw_local = ps.right.diff(w_prod - ps.nv);

    LieElement out = bracket(LieElement::generator(ps.set, v_prod),
                             LieElement::generator(ps.set, w_prod));
    if (!dv.empty()) {
        LieElement t = apply(sigma_right(ps, w_prod), dv, cache);
        if (((degv + 1) * degw) % 2 == 0) t *= Rational(-1);
        out += t;
    }
    if (!dw_local.empty()) {
        LieElement t = apply(sigma_left(ps, v_prod), ps.include_right(dw_local), cache);
        if (degv % 2 == 0) t *= Rational(-1);
        out += t;
    }
    if (!dv.empty() && !dw_local.empty()) {
        LieElement t = star(ps, dv_lift, dw_local);
        if (degv % 2 != 0) t *= Rational(-1);
        out += t;
    }
    return out;
}

namespace {

void require_valid(const DglPresentation& p, bool need_two_cone) {
    const ValidationReport r = validate(p);
    if (!r.ok) throw std::invalid_argument("product model: input '" + p.name() + "' failed validation");
    if (need_two_cone && r.filtration && r.filtration->length() > 2)
        throw std::invalid_argument("product model: '" + p.name() +
                                    "' has cone length > 2; use the candidate builder");
}

ProductModel assemble(const DglPresentation& X, const DglPresentation& Y,
                      const std::map<int, MagmaElement>* left_lifts, bool formal) {
    ProductSpace ps = make_product_space(X, Y);
    ExpansionCache cache;

    std::vector<LieElement> diff;
    std::vector<Branch> branch;
    diff.reserve(static_cast<size_t>(ps.set->size()));
    branch.reserve(static_cast<size_t>(ps.set->size()));
    for (int v = 0; v < ps.nv; ++v) {
        diff.push_back(ps.include_left(X.diff(v)));
        branch.push_back(Branch::Factor);
    }
    for (int w = 0; w < ps.nw; ++w) {
        diff.push_back(ps.include_right(Y.diff(w)));
        branch.push_back(Branch::Factor);
    }
    for (int g = ps.nv + ps.nw; g < ps.set->size(); ++g) {
        const Generator& s = ps.set->at(g);
        const int v = s.left, w = s.right;
        const bool dv0 = X.diff(v).empty();
        const bool dw0 = Y.diff(w - ps.nv).empty();
        MagmaElement dv_lift = lift(X.diff(v));
        if (left_lifts) {
            auto it = left_lifts->find(v);
            if (it != left_lifts->end()) {
                if (!(underline(it->second) == X.diff(v)))
                    throw std::invalid_argument("product model: custom lift does not project onto the boundary");
                dv_lift = it->second;
            }
        }
        diff.push_back(suspension_differential(ps, v, w, dv_lift, &cache));
        branch.push_back(formal          ? Branch::Formal
                         : dv0 && dw0    ? Branch::CrossOnly
                         : !dv0 && dw0   ? Branch::LeftCone
                         : dv0 && !dw0   ? Branch::RightCone
                                         : Branch::Full);
    }

    DglPresentation model(X.name() + " x " + Y.name(), ps.set, std::move(diff));
    return ProductModel{std::move(ps), std::move(model), std::move(branch)};
}

}  // namespace

ProductModel build_product_model(const DglPresentation& X, const DglPresentation& Y,
                                 const std::map<int, MagmaElement>* left_lifts) {
    require_valid(X, true);
    require_valid(Y, true);
    ProductModel m = assemble(X, Y, left_lifts, false);
    if (!d_squared_residual(m.model).pass)
        throw std::logic_error("product model: differential fails to square to zero");
    return m;
}

ProductModel zero_left_product_model(const DglPresentation& X, const DglPresentation& Y) {
    require_valid(X, false);
    require_valid(Y, false);
    for (int v = 0; v < X.set()->size(); ++v)
        if (!X.diff(v).empty())
            throw std::invalid_argument("zero-left model: left factor has a nonzero differential");
    ProductModel m = assemble(X, Y, nullptr, false);
    if (!d_squared_residual(m.model).pass)
        throw std::logic_error("zero-left model: differential fails to square to zero");
    return m;
}

ResidualReport d_squared_residual(const DglPresentation& m) {
    ResidualReport r;
    const Derivation D = m.differential();
    ExpansionCache cache;
    r.pass = true;
    for (int g = 0; g < m.set()->size(); ++g) {
        r.d_squared.push_back(apply(D, m.diff(g), &cache));
        if (!r.d_squared.back().empty()) r.pass = false;
    }
    return r;
}

ProductModel build_candidate_model(const DglPresentation& X, const DglPresentation& Y) {
    require_valid(X, false);
    require_valid(Y, false);
    return assemble(X, Y, nullptr, true);
}

void add_override(ProductModel& m, int gen, const LieElement& extra) {
    if (gen < 0 || gen >= m.space.set->size())
        throw std::invalid_argument("override: no such generator");
    if (!extra.empty()) {
        const auto d = extra.degree();
        if (!d || *d != m.space.set->degree(gen) - 1)
            throw std::invalid_argument("override for '" + m.space.set->at(gen).name +
                                        "' is not homogeneous of the boundary degree");
    }
    std::vector<LieElement> diff = m.model.diffs();
    diff[static_cast<size_t>(gen)] += extra;
    m.model = DglPresentation(m.model.name(), m.space.set, std::move(diff));
    m.branch[static_cast<size_t>(gen)] = Branch::Adjusted;
}

bool projection_check(const ProductModel& m) {
    const ProductSpace& ps = m.space;
    std::vector<LieElement> to_left, to_right;
    for (int g = 0; g < ps.set->size(); ++g) {
        to_left.push_back(ps.is_left(g) ? LieElement::generator(ps.left.set(), g)
                                        : LieElement(ps.left.set()));
        to_right.push_back(ps.is_right(g) ? LieElement::generator(ps.right.set(), g - ps.nv)
                                          : LieElement(ps.right.set()));
    }
    for (int g = 0; g < ps.set->size(); ++g) {
        const LieElement& Dg = m.model.diff(g);
        LieElement wantL(ps.left.set()), wantR(ps.right.set());
        if (ps.is_left(g)) wantL = ps.left.diff(g);
        if (ps.is_right(g)) wantR = ps.right.diff(g - ps.nv);
        if (apply_morphism(to_left, ps.left.set(), Dg) != wantL) return false;
        if (apply_morphism(to_right, ps.right.set(), Dg) != wantR) return false;
    }
    return true;
}

bool minimality_check(const ProductModel& m) {
    for (const LieElement& d : m.model.diffs())
        if (!d.empty() && d.min_bracket_length() < 2) return false;
    return true;
}

bool suspension_form_check(const ProductModel& m) {
    const ProductSpace& ps = m.space;
    const std::vector<bool> susp = ps.susp_mask();
    for (int g = 0; g < ps.set->size(); ++g) {
        if (!ps.is_susp(g)) continue;
        const Generator& s = ps.set->at(g);
        LieElement rest = m.model.diff(g) -
                          bracket(LieElement::generator(ps.set, s.left),
                                  LieElement::generator(ps.set, s.right));
        for (const auto& [tree, c] : rest.terms())
            if (!tree.has_leaf_where(susp)) return false;
    }
    return true;
}

std::pair<LieElement, LieElement> star_jacobiator_check(const ProductModel& m,
                                                        const MagmaElement& A,
                                                        const MagmaElement& B,
                                                        const MagmaElement& C,
                                                        const LieElement& T) {
    const ProductSpace& ps = m.space;
    const auto degb = B.degree();
    if (!degb) throw std::invalid_argument("star_jacobiator_check: B must be homogeneous");

    LieElement lhs = star(ps, jacobiator(A, B, C), T);

    const LieElement Tp = ps.include_right(T);
    LieElement inner = apply(sigma_of(ps, ps.include_left(underline(A))),
                             apply(sigma_of(ps, ps.include_left(underline(B))),
                                   apply(sigma_of(ps, ps.include_left(underline(C))), Tp)));
    LieElement rhs = apply(m.model.differential(), inner);
    if (*degb % 2 != 0) rhs *= Rational(-1);
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace gla
