#pragma once

#include "gla/product_model.hpp"

namespace gla {

// Same generators and boundaries with names suffixed; used as the second
// factor when modelling a space times itself.
DglPresentation prime_copy(const DglPresentation& X, const std::string& suffix = "'");

// Model of the diagonal of a 2-cone: the product model of X with a primed
// copy, plus one value per generator of X extending v -> v + v'.
struct DiagonalModel {
    DglPresentation base;
    DglPresentation primed;
    ProductModel product;
    std::vector<LieElement> delta;  // per base generator, over the product set
};

DiagonalModel build_diagonal(const DglPresentation& X);

// Transport an element of the base (resp. into the primed copy) into the
// product algebra.
LieElement include_base(const DiagonalModel& m, const LieElement& x);
LieElement include_primed(const DiagonalModel& m, const LieElement& x);

// The diagonal values extended as a Lie morphism.
LieElement apply_diagonal(const DiagonalModel& m, const LieElement& x);

// The pairing operator on magma words over the zero-boundary stage:
// Gamma(v) = 0 on leaves and
// Gamma(AB) = sigma_uA(uB') - (-1)^{|A||B|} sigma_uB(uA')
//             + 1/2 (-1)^{|A|} [delta0(uA) + uA + uA', Gamma B]
//             + 1/2 [Gamma A, delta0(uB) + uB + uB']
// where delta0 is the morphism v -> v + v'.
LieElement gamma(const DiagonalModel& m, const MagmaElement& A);

// Both sides of D(Gamma A) = delta0(uA) - uA - uA'.
std::pair<LieElement, LieElement> gamma_boundary_check(const DiagonalModel& m,
                                                       const MagmaElement& A);

// The explicit primitive of Gamma(J(A,B,C)); its boundary is checked to
// equal Gamma(J(A,B,C)) before returning.
LieElement gamma_jacobiator_witness(const DiagonalModel& m, const MagmaElement& A,
                                    const MagmaElement& B, const MagmaElement& C);

// D(delta(g)) = delta(boundary of g) on every generator.
bool diagonal_chain_map_check(const DiagonalModel& m);

// Composing with either component projection gives the identity.
bool diagonal_projection_check(const DiagonalModel& m);

}  // namespace gla
