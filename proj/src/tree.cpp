#include "gla/tree.hpp"

namespace gla {

namespace {
std::size_t mix(std::size_t a, std::size_t b) {
    // boost::hash_combine flavor
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}
}  // namespace

Tree Tree::leaf(int gen) {
    auto n = std::make_shared<Node>();
    n->gen = gen;
    n->leaves = 1;
    n->h = mix(0x517cc1b727220a95ULL, static_cast<std::size_t>(gen));
    return Tree(std::move(n));
}

Tree Tree::node(const Tree& l, const Tree& r) {
    auto n = std::make_shared<Node>();
    n->gen = -1;
    n->l = l.n_;
    n->r = r.n_;
    n->leaves = l.leaf_count() + r.leaf_count();
    n->h = mix(l.hash(), r.hash());
    return Tree(std::move(n));
}

int Tree::degree(const GeneratorSet& set) const {
    if (is_leaf()) return set.degree(gen());
    return left().degree(set) + right().degree(set);
}

void Tree::append_leaves(std::vector<int>& out) const {
    if (is_leaf()) {
        out.push_back(gen());
        return;
    }
    left().append_leaves(out);
    right().append_leaves(out);
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(leaf_count()));
    append_leaves(out);
    return out;
}

bool Tree::uses_only_leaves(const std::vector<bool>& allowed) const {
    if (is_leaf()) {
        auto g = static_cast<size_t>(gen());
        return g < allowed.size() && allowed[g];
    }
    return left().uses_only_leaves(allowed) && right().uses_only_leaves(allowed);
}

bool Tree::has_leaf_where(const std::vector<bool>& mark) const {
    if (is_leaf()) {
        auto g = static_cast<size_t>(gen());
        return g < mark.size() && mark[g];
    }
    return left().has_leaf_where(mark) || right().has_leaf_where(mark);
}

namespace {
int shape_compare(const Tree& a, const Tree& b) {
    if (a.is_leaf() && b.is_leaf()) return 0;
    if (a.is_leaf()) return -1;
    if (b.is_leaf()) return 1;
    if (int c = shape_compare(a.left(), b.left())) return c;
    return shape_compare(a.right(), b.right());
}
}  // namespace

int Tree::compare(const Tree& a, const Tree& b) {
    if (a.n_ == b.n_) return 0;
    if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count() ? -1 : 1;
    std::vector<int> la = a.leaves(), lb = b.leaves();
    if (la != lb) return la < lb ? -1 : 1;
    return shape_compare(a, b);
}

bool Tree::operator==(const Tree& o) const {
    if (n_ == o.n_) return true;
    if (n_->h != o.n_->h || n_->leaves != o.n_->leaves) return false;
    return compare(*this, o) == 0;
}

}  // namespace gla
