#pragma once

// Shared helpers for the test binaries: deterministic random inputs, small
// fixture models, and the single-case property checks reused by both the
// unit suites and the acceptance run.

#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gla/diagonal.hpp"
#include "gla/parse.hpp"
#include "gla/print.hpp"
#include "gla/product_model.hpp"

namespace testsup {

using namespace gla;

using Rng = std::mt19937_64;

inline int pick(Rng& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline Rational rand_coeff(Rng& g) {
    static const int pool[4] = {-2, -1, 1, 2};
    return Rational(pool[pick(g, 0, 3)]);
}

inline Rational parity_sign(long long e) { return (e % 2 != 0) ? Rational(-1) : Rational(1); }

inline int pool_pick(Rng& g, const std::vector<int>& pool) {
    return pool[static_cast<size_t>(pick(g, 0, static_cast<int>(pool.size()) - 1))];
}

inline Tree rand_tree(Rng& g, const std::vector<int>& pool, int leaves) {
    if (leaves == 1) return Tree::leaf(pool_pick(g, pool));
    const int left = pick(g, 1, leaves - 1);
    return Tree::node(rand_tree(g, pool, left), rand_tree(g, pool, leaves - left));
}

// Nonzero homogeneous element: up to `terms` random planar trees of one common
// degree, coefficients in {-2,-1,1,2}.  Trees whose canonical form vanishes
// are resampled; a lone generator is the fallback.
inline LieElement random_homogeneous(Rng& g, const GenSetPtr& set, const std::vector<int>& pool,
                                     int min_leaves, int max_leaves, int max_degree,
                                     int terms = 1) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const Tree t = rand_tree(g, pool, pick(g, min_leaves, max_leaves));
        if (t.degree(*set) > max_degree) continue;
        LieElement x = LieElement::normalized(set, {{t, rand_coeff(g)}});
        if (x.empty()) continue;
        const int d = *x.degree();
        for (int extra = 1; extra < terms; ++extra) {
            for (int sub = 0; sub < 8; ++sub) {
                const Tree u = rand_tree(g, pool, pick(g, min_leaves, max_leaves));
                if (u.degree(*set) != d) continue;
                x += LieElement::normalized(set, {{u, rand_coeff(g)}});
                break;
            }
        }
        if (!x.empty()) return x;
    }
    return rand_coeff(g) * LieElement::generator(set, pool_pick(g, pool));
}

inline LieElement random_mixed(Rng& g, const GenSetPtr& set, const std::vector<int>& pool,
                               int pieces, int max_leaves, int max_degree) {
    LieElement x(set);
    for (int i = 0; i < pieces; ++i)
        x += random_homogeneous(g, set, pool, 1, max_leaves, max_degree);
    return x;
}

inline MagmaElement random_magma(Rng& g, const GenSetPtr& set, const std::vector<int>& pool,
                                 int min_leaves, int max_leaves) {
    const Tree t = rand_tree(g, pool, pick(g, min_leaves, max_leaves));
    return rand_coeff(g) * MagmaElement::from_terms(set, {{t, Rational(1)}});
}

// Random 2-cone: a small stage-0 wedge plus generators whose boundaries are
// bracket-length >= 2 combinations over stage 0 (or zero boundary when the
// stage-0 alphabet admits none, e.g. a single even generator).
inline DglPresentation random_two_cone(Rng& g, const std::string& name, const std::string& prefix,
                                       int max_stage0 = 3, int max_stage1 = 2,
                                       int max_gen_degree = 3) {
    const int n0 = pick(g, 1, max_stage0);
    std::vector<Generator> gens;
    for (int i = 0; i < n0; ++i)
        gens.push_back({prefix + std::to_string(i), pick(g, 1, max_gen_degree)});
    const GenSetPtr stage0 = GeneratorSet::make(gens);
    std::vector<int> pool(static_cast<size_t>(n0));
    std::iota(pool.begin(), pool.end(), 0);

    const int n1 = pick(g, 1, max_stage1);
    std::vector<Raw> raws;
    for (int i = 0; i < n1; ++i) {
        LieElement b(stage0);
        for (int attempt = 0; attempt < 32 && b.min_bracket_length() < 2; ++attempt)
            b = random_homogeneous(g, stage0, pool, 2, 3, 1000, pick(g, 1, 2));
        if (b.min_bracket_length() < 2) b = LieElement(stage0);
        raws.push_back(b.raw());
        const int bdeg = b.empty() ? pick(g, 2, 2 * max_gen_degree) : *b.degree();
        gens.push_back({prefix + "h" + std::to_string(i), bdeg + 1});
    }

    const GenSetPtr full = GeneratorSet::make(gens);
    std::vector<LieElement> diffs(static_cast<size_t>(n0), LieElement(full));
    for (const Raw& r : raws) diffs.push_back(LieElement::normalized(full, r));
    return DglPresentation(name, full, std::move(diffs));
}

// Inline copies of the small worked models, so tests stay self-contained.
inline DglPresentation sphere_model(const std::string& name, const std::string& gen, int deg) {
    return parse_dgl("dgl " + name + "\ngen " + gen + " " + std::to_string(deg) + "\n");
}
inline DglPresentation cp2_model() {
    return parse_dgl("dgl cp2\ngen x 1\ngen y 3\ndiff y = [x,x]\n");
}
inline DglPresentation wedge_abc() {
    return parse_dgl("dgl wabc\ngen a 2\ngen b 3\ngen c 7\n");
}
inline DglPresentation wedge_xyz() {
    return parse_dgl("dgl wxyz\ngen x 2\ngen y 3\ngen z 7\n");
}
inline DglPresentation wedge_yz() {
    return parse_dgl("dgl wyz\ngen y 3\ngen z 7\n");
}
inline DglPresentation cone_abcv() {
    return parse_dgl("dgl tabcv\ngen a 2\ngen b 3\ngen c 7\ngen v 13\ndiff v = [a,[b,c]]\n");
}
inline DglPresentation cone_xyzw() {
    return parse_dgl("dgl txyzw\ngen x 2\ngen y 3\ngen z 7\ngen w 13\ndiff w = [x,[y,z]]\n");
}
inline DglPresentation diag_cone() {
    return parse_dgl("dgl dabcv\ngen a 2\ngen b 2\ngen c 2\ngen v 7\ndiff v = [a,[b,c]]\n");
}
inline DglPresentation three_cone_abcv() {
    return parse_dgl(
        "dgl c3abcv\ngen a 2\ngen b 3\ngen c 7\ngen v 13\n"
        "diff c = [b,b]\ndiff v = [a,[b,c]]\n");
}

// A derivation-shaped operator evaluated by composition on single arguments.
// Bracketing two Derivation values materializes every generator image, which
// is wasteful when a commutator is only ever applied to one element.
struct DerOp {
    int degree = 0;
    std::function<LieElement(const LieElement&)> f;
    LieElement operator()(const LieElement& x) const { return f(x); }
};

inline DerOp as_op(const Derivation& d) {
    return {d.degree, [d](const LieElement& x) { return apply(d, x); }};
}

// s t - (-1)^{|s||t|} t s, evaluated pointwise.
inline DerOp commutator(const DerOp& s, const DerOp& t) {
    const Rational sg = parity_sign(static_cast<long long>(s.degree) * t.degree);
    return {s.degree + t.degree, [s, t, sg](const LieElement& x) {
                LieElement out = s.f(t.f(x));
                out -= sg * t.f(s.f(x));
                return out;
            }};
}

// Product model of two 2-cones together with the index pools the property
// checks sample from.  Pools V*/W* hold product-set indices; left*/right*
// hold factor-set indices.
struct Fixture {
    DglPresentation X, Y;
    ProductModel pm;
    Derivation D, Dfact;
    std::vector<int> Vfull, V0, Wfull, W0;
    std::vector<int> leftAll, leftV0, rightAll, rightW0;

    Fixture(DglPresentation X_, DglPresentation Y_)
        : X(std::move(X_)),
          Y(std::move(Y_)),
          pm(build_product_model(X, Y)),
          D(pm.model.differential()),
          Dfact(pm.space.factor_differential()) {
        const ProductSpace& ps = pm.space;
        for (int i = 0; i < ps.nv; ++i) {
            leftAll.push_back(i);
            Vfull.push_back(ps.left_index(i));
            if (ps.left.diff(i).empty()) {
                leftV0.push_back(i);
                V0.push_back(ps.left_index(i));
            }
        }
        for (int j = 0; j < ps.nw; ++j) {
            rightAll.push_back(j);
            Wfull.push_back(ps.right_index(j));
            if (ps.right.diff(j).empty()) {
                rightW0.push_back(j);
                W0.push_back(ps.right_index(j));
            }
        }
    }
};

inline Fixture two_cone_fixture() { return Fixture(cone_abcv(), cone_xyzw()); }

// ---- single-case property checks ----------------------------------------
// Each draws its own random inputs and returns whether the identity held.
// Equality is always is_zero of the difference, i.e. checked in the tensor
// algebra, not just on canonical forms.

// [D, sigma_S] = ad_S - sigma_{dS} on elements of the right (cone-point free)
// half, for S over the whole left factor.
inline bool check_commutator_with_boundary_left(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement S = random_homogeneous(g, ps.set, f.Vfull, 1, 4, 16);
    const LieElement T = random_homogeneous(g, ps.set, f.W0, 1, 4, 16);
    const DerOp lhs = commutator(as_op(f.D), as_op(sigma_of(ps, S)));
    LieElement rhs = bracket(S, T);
    rhs -= apply(sigma_of(ps, apply(f.Dfact, S)), T);
    return is_zero(lhs(T) - rhs);
}

// Mirror: [D, sigma_T] = -ad_T - sigma_{dT} on the stage-0 left half, T over
// the whole right factor.
inline bool check_commutator_with_boundary_right(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement T = random_homogeneous(g, ps.set, f.Wfull, 1, 4, 16);
    const LieElement S = random_homogeneous(g, ps.set, f.V0, 1, 4, 16);
    const DerOp lhs = commutator(as_op(f.D), as_op(sigma_of(ps, T)));
    LieElement rhs = -bracket(T, S);
    rhs -= apply(sigma_of(ps, apply(f.Dfact, T)), S);
    return is_zero(lhs(S) - rhs);
}

// sigma_A sigma_B kills every right-factor generator.
inline bool check_sigma_sigma_on_right_generator(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement A = random_homogeneous(g, ps.set, f.Vfull, 1, 4, 16);
    const LieElement B = random_homogeneous(g, ps.set, f.Vfull, 1, 4, 16);
    const LieElement w = LieElement::generator(ps.set, pool_pick(g, f.Wfull));
    return is_zero(apply(sigma_of(ps, A), apply(sigma_of(ps, B), w)));
}

// Left-hung suspension derivations commute: [sigma_A, sigma_B] = 0.
inline bool check_sigma_commute(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement A = random_homogeneous(g, ps.set, f.Vfull, 1, 4, 16);
    const LieElement B = random_homogeneous(g, ps.set, f.Vfull, 1, 4, 16);
    const Derivation br = derivation_bracket(sigma_of(ps, A), sigma_of(ps, B));
    for (const LieElement& v : br.values)
        if (!is_zero(v)) return false;
    return true;
}

// [[D, sigma_A], sigma_B] = (-1)^{|A|+1} sigma_{[A,B]} on the right half.
inline bool check_double_commutator(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement A = random_homogeneous(g, ps.set, f.Vfull, 1, 4, 16);
    const LieElement B = random_homogeneous(g, ps.set, f.Vfull, 1, 4, 16);
    const LieElement T = random_homogeneous(g, ps.set, f.W0, 1, 4, 16);
    const DerOp lhs =
        commutator(commutator(as_op(f.D), as_op(sigma_of(ps, A))), as_op(sigma_of(ps, B)));
    const LieElement rhs =
        parity_sign(*A.degree() + 1) * apply(sigma_of(ps, bracket(A, B)), T);
    return is_zero(lhs(T) - rhs);
}

// Boundary of a double substitution, stage-0 arguments on both sides.
inline bool check_boundary_of_sigma_sigma(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement A = random_homogeneous(g, ps.set, f.V0, 1, 4, 16);
    const LieElement B = random_homogeneous(g, ps.set, f.V0, 1, 4, 16);
    const LieElement T = random_homogeneous(g, ps.set, f.W0, 1, 4, 16);
    const int da = *A.degree(), db = *B.degree(), dt = *T.degree();
    const LieElement sBT = apply(sigma_of(ps, B), T);
    const LieElement sAT = apply(sigma_of(ps, A), T);
    const LieElement lhs = apply(f.D, apply(sigma_of(ps, A), sBT));
    LieElement rhs = parity_sign(da + 1) * apply(sigma_of(ps, bracket(A, B)), T);
    rhs += parity_sign(da + static_cast<long long>(db) * dt) * bracket(sAT, B);
    rhs += bracket(A, sBT);
    return is_zero(lhs - rhs);
}

// Three or more suspension derivations: the iterated commutator with D dies.
inline bool check_triple_commutator(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement A1 = random_homogeneous(g, ps.set, f.Vfull, 1, 3, 16);
    const LieElement A2 = random_homogeneous(g, ps.set, f.Vfull, 1, 3, 16);
    const LieElement A3 = random_homogeneous(g, ps.set, f.Vfull, 1, 3, 16);
    const LieElement T = random_homogeneous(g, ps.set, f.W0, 1, 3, 16);
    const DerOp lhs = commutator(
        commutator(commutator(as_op(f.D), as_op(sigma_of(ps, A1))), as_op(sigma_of(ps, A2))),
        as_op(sigma_of(ps, A3)));
    return is_zero(lhs(T));
}

// Boundary of a triple substitution, stage-0 arguments.
inline bool check_boundary_of_sigma_sigma_sigma(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement A = random_homogeneous(g, ps.set, f.V0, 1, 3, 16);
    const LieElement B = random_homogeneous(g, ps.set, f.V0, 1, 3, 16);
    const LieElement C = random_homogeneous(g, ps.set, f.V0, 1, 3, 16);
    const LieElement T = random_homogeneous(g, ps.set, f.W0, 1, 3, 16);
    const long long da = *A.degree(), db = *B.degree(), dc = *C.degree(), dt = *T.degree();
    const Derivation sA = sigma_of(ps, A), sB = sigma_of(ps, B), sC = sigma_of(ps, C);
    const LieElement sCT = apply(sC, T);
    const LieElement sBCT = apply(sB, sCT);
    const LieElement sACT = apply(sA, sCT);
    const LieElement sABT = apply(sA, apply(sB, T));
    const LieElement lhs = apply(f.D, apply(sA, sBCT));
    LieElement rhs = parity_sign(da + db) * apply(sA, apply(sigma_of(ps, bracket(B, C)), T));
    rhs -= parity_sign(da * db) * apply(sB, apply(sigma_of(ps, bracket(A, C)), T));
    rhs -= parity_sign(da) * apply(sigma_of(ps, bracket(A, B)), sCT);
    rhs -= parity_sign(da + db + dc * dt) * bracket(sABT, C);
    rhs += bracket(A, sBCT);
    rhs -= parity_sign(da + db + da * db) * bracket(B, sACT);
    return is_zero(lhs - rhs);
}

// (AB + (-1)^{|A||B|} BA) ⋆ T = 0.
inline bool check_star_antisymmetry(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const MagmaElement A = random_magma(g, f.X.set(), f.leftAll, 1, 3);
    const MagmaElement B = random_magma(g, f.X.set(), f.leftAll, 1, 3);
    const LieElement T = random_homogeneous(g, f.Y.set(), f.rightAll, 1, 3, 16);
    const LieElement s1 = star(ps, magma_mul(A, B), T);
    const LieElement s2 = star(ps, magma_mul(B, A), T);
    return is_zero(s1 + parity_sign(static_cast<long long>(*A.degree()) * *B.degree()) * s2);
}

// J(A,B,C) ⋆ T = (-1)^{|B|} D(sigma_A sigma_B sigma_C (T)), stage-0 inputs.
inline bool check_jacobiator_star(const Fixture& f, Rng& g) {
    const MagmaElement A = random_magma(g, f.X.set(), f.leftV0, 1, 2);
    const MagmaElement B = random_magma(g, f.X.set(), f.leftV0, 1, 2);
    const MagmaElement C = random_magma(g, f.X.set(), f.leftV0, 1, 2);
    const LieElement T = random_homogeneous(g, f.Y.set(), f.rightW0, 1, 3, 16);
    const auto [lhs, rhs] = star_jacobiator_check(f.pm, A, B, C, T);
    return is_zero(lhs - rhs);
}

// D(lift(A) ⋆ T) = -sigma_A(T) + (-1)^{|A||T|} sigma_T(A), and the boundary
// is insensitive to the lift: star values of antisymmetry and Jacobi ideal
// elements are D-closed.
inline bool check_star_boundary(const Fixture& f, Rng& g) {
    const ProductSpace& ps = f.pm.space;
    const LieElement A = random_homogeneous(g, f.X.set(), f.leftV0, 1, 3, 16, pick(g, 1, 2));
    const LieElement T = random_homogeneous(g, f.Y.set(), f.rightW0, 1, 3, 16);
    const LieElement lhs = apply(f.D, star(ps, lift(A), T));
    const LieElement Ai = ps.include_left(A);
    const LieElement Ti = ps.include_right(T);
    LieElement rhs = -apply(sigma_of(ps, Ai), Ti);
    rhs += parity_sign(static_cast<long long>(*A.degree()) * *T.degree()) *
           apply(sigma_of(ps, Ti), Ai);
    if (!is_zero(lhs - rhs)) return false;

    const MagmaElement P = random_magma(g, f.X.set(), f.leftV0, 1, 2);
    const MagmaElement Q = random_magma(g, f.X.set(), f.leftV0, 1, 2);
    const MagmaElement R = random_magma(g, f.X.set(), f.leftV0, 1, 2);
    MagmaElement anti = magma_mul(P, Q);
    anti += parity_sign(static_cast<long long>(*P.degree()) * *Q.degree()) * magma_mul(Q, P);
    if (!is_zero(apply(f.D, star(ps, anti, T)))) return false;
    return is_zero(apply(f.D, star(ps, jacobiator(P, Q, R), T)));
}

// D(Gamma(A)) = Delta0(uA) - uA - uA' on random stage-0 magma elements.
inline bool check_gamma_boundary(const DiagonalModel& m, const std::vector<int>& pool, Rng& g) {
    MagmaElement A = random_magma(g, m.base.set(), pool, 1, 4);
    if (pick(g, 0, 2) == 0) {
        const MagmaElement extra = random_magma(g, m.base.set(), pool, 1, 3);
        if (extra.degree() == A.degree()) A += extra;
    }
    const auto [lhs, rhs] = gamma_boundary_check(m, A);
    return is_zero(lhs - rhs);
}

// Gamma kills graded-antisymmetric products.
inline bool check_gamma_antisymmetry(const DiagonalModel& m, const std::vector<int>& pool,
                                     Rng& g) {
    const MagmaElement P = random_magma(g, m.base.set(), pool, 1, 3);
    const MagmaElement Q = random_magma(g, m.base.set(), pool, 1, 3);
    MagmaElement anti = magma_mul(P, Q);
    anti += parity_sign(static_cast<long long>(*P.degree()) * *Q.degree()) * magma_mul(Q, P);
    return is_zero(gamma(m, anti));
}

// The stored witness hits Gamma of the jacobiator under D.
inline bool check_gamma_witness(const DiagonalModel& m, const Derivation& D,
                                const std::vector<int>& pool, Rng& g) {
    const MagmaElement A = random_magma(g, m.base.set(), pool, 1, 2);
    const MagmaElement B = random_magma(g, m.base.set(), pool, 1, 2);
    const MagmaElement C = random_magma(g, m.base.set(), pool, 1, 2);
    const LieElement w = gamma_jacobiator_witness(m, A, B, C);
    return is_zero(apply(D, w) - gamma(m, jacobiator(A, B, C)));
}

}  // namespace testsup
