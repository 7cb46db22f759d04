#pragma once

#include <map>

#include "gla/magma.hpp"

namespace gla {

// Which formula produced a generator's differential value.
enum class Branch {
    Factor,     // carried over from a factor presentation
    CrossOnly,  // D(s) = [v,w]
    LeftCone,   // [v,w] - (-1)^{(|v|+1)|w|} sigma_w(dv)
    RightCone,  // [v,w] - (-1)^{|v|} sigma_v(dw)
    Full,       // all four terms
    Formal,     // the closed formula applied outside its guaranteed range
    Adjusted,   // Formal plus user-supplied correction terms
};

const char* branch_name(Branch b);

struct ProductModel {
    ProductSpace space;
    DglPresentation model;       // over space.set
    std::vector<Branch> branch;  // per generator of space.set
};

// D(s(v,w)) = [v,w] - (-1)^{(|v|+1)|w|} sigma_w(dv) - (-1)^{|v|} sigma_v(dw)
//             + (-1)^{|v|} dv_lift * dw
// where dv_lift is a magma representative of the left factor's dv.
LieElement suspension_differential(const ProductSpace& ps, int v_prod, int w_prod,
                                   const MagmaElement& dv_lift, ExpansionCache* cache = nullptr);

// Model of the product of two 2-cones.  Optional custom magma lifts of the
// left boundaries, keyed by left-factor generator index; defaults to the
// canonical lift.  The result is checked to square to zero.
ProductModel build_product_model(const DglPresentation& X, const DglPresentation& Y,
                                 const std::map<int, MagmaElement>* left_lifts = nullptr);

// Left factor with zero differential: D(s) = [v,w] - (-1)^{|v|} sigma_v(dw).
// Works for any minimal right factor, no cone bound.
ProductModel zero_left_product_model(const DglPresentation& X, const DglPresentation& Y);

struct ResidualReport {
    std::vector<LieElement> d_squared;  // one per generator
    bool pass = false;                  // all residuals zero
};

ResidualReport d_squared_residual(const DglPresentation& m);

// The closed formula applied to factors of any cone length, no guarantee
// claimed; pair with d_squared_residual to see where it breaks.
ProductModel build_candidate_model(const DglPresentation& X, const DglPresentation& Y);

// Add a correction term to one generator's differential value.
void add_override(ProductModel& m, int gen, const LieElement& extra);

// Component-wise projections to the two factors are chain maps.
bool projection_check(const ProductModel& m);

// Every differential value has bracket length >= 2.
bool minimality_check(const ProductModel& m);

// D(s(v,w)) - [v,w] is supported on trees with a suspension leaf.
bool suspension_form_check(const ProductModel& m);

// Both sides of the boundary identity for the starred Jacobiator:
//   J(A,B,C) * T   and   (-1)^{|B|} D(sigma_uA sigma_uB sigma_uC (T)).
// A, B, C over the left factor, T over the right; D from the model.
std::pair<LieElement, LieElement> star_jacobiator_check(const ProductModel& m,
                                                        const MagmaElement& A,
                                                        const MagmaElement& B,
                                                        const MagmaElement& C,
                                                        const LieElement& T);

}  // namespace gla
