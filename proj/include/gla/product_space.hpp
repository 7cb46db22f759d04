#pragma once

#include "gla/dgl.hpp"

namespace gla {

// Generator bookkeeping for L(V + W + s(V (x) W)): the two factor algebras
// embedded side by side, plus one suspension generator per factor pair.
struct ProductSpace {
    GenSetPtr set;
    DglPresentation left;   // over its own set
    DglPresentation right;  // over its own set
    int nv = 0, nw = 0;

    int left_index(int xi) const { return xi; }
    int right_index(int yi) const { return nv + yi; }
    bool is_left(int g) const { return set->at(g).origin == Origin::Left; }
    bool is_right(int g) const { return set->at(g).origin == Origin::Right; }
    bool is_susp(int g) const { return set->at(g).origin == Origin::Suspension; }
    int susp_index(int v_prod, int w_prod) const;

    LieElement include_left(const LieElement& x) const;
    LieElement include_right(const LieElement& y) const;
    LieElement susp_generator(int v_prod, int w_prod) const;

    // Boundary of both factors transported to the product set, zero on the
    // suspensions.  This is the map the sigma identities call the boundary.
    Derivation factor_differential() const;

    std::vector<bool> susp_mask() const;
    std::vector<bool> factor_mask() const;  // left or right, no suspensions
};

ProductSpace make_product_space(const DglPresentation& X, const DglPresentation& Y);

// The basic pairing derivations: sigma_v sends w to s(v,w) and kills
// everything else; sigma_w sends v to (-1)^{|v||w|} s(v,w).
Derivation sigma_left(const ProductSpace& ps, int v_prod);
Derivation sigma_right(const ProductSpace& ps, int w_prod);

// sigma_A for homogeneous A supported on the factor generators:
// sigma_A(v) = (-1)^{|v||A|} sigma_v(A), sigma_A(w) = (-1)^{|w||A|} sigma_w(A),
// zero on suspensions.
Derivation sigma_of(const ProductSpace& ps, const LieElement& A);

// Extend generator images to a Lie algebra morphism (brackets to brackets).
// Images are indexed by x's generators and live over the target set.
LieElement apply_morphism(const std::vector<LieElement>& images, const GenSetPtr& target,
                          const LieElement& x);

}  // namespace gla
