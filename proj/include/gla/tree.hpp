#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gla/generators.hpp"

namespace gla {

// Immutable binary tree over generator indices.  Serves both as a bracket
// tree (Lie side, where only canonical basis trees are kept) and as a free
// magma tree (planar, no relations).  Subtrees are shared.
class Tree {
public:
    static Tree leaf(int gen);
    static Tree node(const Tree& l, const Tree& r);

    bool is_leaf() const { return n_->gen >= 0; }
    int gen() const { return n_->gen; }
    Tree left() const { return Tree(n_->l); }
    Tree right() const { return Tree(n_->r); }
    int leaf_count() const { return n_->leaves; }
    std::size_t hash() const { return n_->h; }

    int degree(const GeneratorSet& set) const;
    void append_leaves(std::vector<int>& out) const;
    std::vector<int> leaves() const;
    bool uses_only_leaves(const std::vector<bool>& allowed) const;
    bool has_leaf_where(const std::vector<bool>& mark) const;

    // Total order: leaf count, then leaf sequence, then shape.
    static int compare(const Tree& a, const Tree& b);
    bool operator==(const Tree& o) const;
    bool operator!=(const Tree& o) const { return !(*this == o); }

private:
    struct Node {
        int gen;  // >= 0 for leaves, -1 for internal nodes
        std::shared_ptr<const Node> l, r;
        int leaves;
        std::size_t h;
    };
    explicit Tree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    std::shared_ptr<const Node> n_;

    friend struct TreeHash;
};

struct TreeHash {
    std::size_t operator()(const Tree& t) const { return t.hash(); }
};
struct TreeStructLess {
    bool operator()(const Tree& a, const Tree& b) const { return Tree::compare(a, b) < 0; }
};

}  // namespace gla
