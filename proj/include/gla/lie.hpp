#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gla/basis.hpp"
#include "gla/tensor.hpp"

namespace gla {

// Term order inside an element: degree first, then the tree order.
// The comparator pins the generator set the trees are read against.
struct TermLess {
    const GeneratorSet* set = nullptr;
    bool operator()(const Tree& a, const Tree& b) const {
        const int da = a.degree(*set), db = b.degree(*set);
        if (da != db) return da < db;
        return Tree::compare(a, b) < 0;
    }
};

using TermMap = std::map<Tree, Rational, TermLess>;

// An element of the free graded Lie algebra, kept in canonical form: a
// rational combination of super-Lyndon basis trees.  Addition and scaling
// stay canonical termwise; everything else goes through normalization.
class LieElement {
public:
    explicit LieElement(GenSetPtr set);
    static LieElement generator(const GenSetPtr& set, int gen);
    static LieElement normalized(const GenSetPtr& set, const Raw& raw,
                                 std::optional<int> max_degree = std::nullopt,
                                 ExpansionCache* cache = nullptr);

    const GenSetPtr& set() const { return set_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Degree of a homogeneous element; nullopt when zero or mixed.
    std::optional<int> degree() const;
    std::vector<int> term_degrees() const;
    LieElement component(int degree) const;
    Raw raw() const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rational& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
    LieElement operator-() const;
    bool operator==(const LieElement& o) const;
    bool operator!=(const LieElement& o) const { return !(*this == o); }

    bool uses_only_leaves(const std::vector<bool>& allowed) const;
    bool has_leaf_where(const std::vector<bool>& mark) const;
    int min_bracket_length() const;  // 0 when zero

private:
    GenSetPtr set_;
    TermMap terms_;
};

LieElement bracket(const LieElement& a, const LieElement& b,
                   std::optional<int> max_degree = std::nullopt);

// Ground-truth zero test through the tensor-algebra embedding.
bool is_zero_raw(const GeneratorSet& set, const Raw& raw);
bool is_zero(const LieElement& x);
TensorElement tensor_expand(const LieElement& x);

}  // namespace gla
