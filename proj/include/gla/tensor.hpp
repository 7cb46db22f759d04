#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gla/rational.hpp"
#include "gla/tree.hpp"

namespace gla {

// A word in the tensor algebra: the sequence of leaf generator indices.
using Word = boost::container::small_vector<std::uint16_t, 14>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Ordered so that begin() is the lex-leading (minimal) word.
using TensorElement = std::map<Word, Rational, WordLess>;

// Expansion of a single tree: sorted by word, zero coefficients dropped.
using Expansion = std::vector<std::pair<Word, Rational>>;
using ExpansionPtr = std::shared_ptr<const Expansion>;

struct RawTerm {
    Tree tree;
    Rational coeff;
};
using Raw = std::vector<RawTerm>;

// Optional cross-call memo for expansions of structurally shared trees.
// Bound by leaf count so degree-12 rank sweeps do not hold every row alive.
class ExpansionCache {
public:
    explicit ExpansionCache(int max_cached_leaves = 9) : max_leaves_(max_cached_leaves) {}
    ExpansionPtr find(const Tree& t) const;
    void insert(const Tree& t, ExpansionPtr e);
    int max_leaves() const { return max_leaves_; }

private:
    int max_leaves_;
    std::unordered_map<Tree, ExpansionPtr, TreeHash> memo_;
};

// Image of a bracket tree under [A,B] -> AB - (-1)^{|A||B|} BA, letterwise.
ExpansionPtr expand_tree(const Tree& t, const GeneratorSet& set, ExpansionCache* cache = nullptr);

void add_scaled(TensorElement& dst, const Expansion& e, const Rational& c);
TensorElement tensor_expand_raw(const Raw& raw, const GeneratorSet& set, ExpansionCache* cache = nullptr);

}  // namespace gla
