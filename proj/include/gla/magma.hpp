#pragma once

#include "gla/product_space.hpp"

namespace gla {

// Element of the free magma on a generator set: a rational combination of
// planar binary trees.  No relations are imposed; trees are kept verbatim.
class MagmaElement {
public:
    explicit MagmaElement(GenSetPtr set);
    static MagmaElement generator(const GenSetPtr& set, int gen);
    static MagmaElement from_terms(const GenSetPtr& set, const std::vector<std::pair<Tree, Rational>>& terms);

    const GenSetPtr& set() const { return set_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::optional<int> degree() const;

    MagmaElement& operator+=(const MagmaElement& o);
    MagmaElement& operator-=(const MagmaElement& o);
    MagmaElement& operator*=(const Rational& c);
    friend MagmaElement operator+(MagmaElement a, const MagmaElement& b) { return a += b; }
    friend MagmaElement operator-(MagmaElement a, const MagmaElement& b) { return a -= b; }
    friend MagmaElement operator*(const Rational& c, MagmaElement a) { return a *= c; }
    bool operator==(const MagmaElement& o) const;

private:
    GenSetPtr set_;
    TermMap terms_;
};

MagmaElement magma_mul(const MagmaElement& a, const MagmaElement& b);

// Projection to the Lie algebra: trees read as iterated brackets.
LieElement underline(const MagmaElement& a);

// J(A,B,C) = A(BC) - (AB)C - (-1)^{|A||B|} B(AC), trilinear with the Koszul
// sign taken per term pair.
MagmaElement jacobiator(const MagmaElement& a, const MagmaElement& b, const MagmaElement& c);

// Canonical section of underline: basis trees reread as magma trees.
MagmaElement lift(const LieElement& x);

// The degree +2 star operator.  A lives over the left factor, T over the
// right; the value lives over the product set.  a * T = 0 on leaves, and
// (AB) * T = (-1)^{|A|} sigma_{uA} sigma_{uB}(T) + (-1)^{|B||T|}[A*T, uB] + [uA, B*T].
LieElement star(const ProductSpace& ps, const MagmaElement& A, const LieElement& T);

}  // namespace gla
