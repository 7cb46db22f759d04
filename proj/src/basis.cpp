#include "gla/basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gla {

bool is_lyndon_word(const Word& w) {
    if (w.empty()) return false;
    // strictly smaller than every proper suffix
    for (size_t i = 1; i < w.size(); ++i) {
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<long>(i), w.end()))
            return false;
    }
    return true;
}

std::size_t standard_split(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard_split: word too short");
    size_t best = 1;
    for (size_t i = 2; i < w.size(); ++i) {
        if (std::lexicographical_compare(w.begin() + static_cast<long>(i), w.end(),
                                         w.begin() + static_cast<long>(best), w.end()))
            best = i;
    }
    return best;
}

Tree lyndon_bracketing(const Word& w) {
    if (w.size() == 1) return Tree::leaf(w[0]);
    const size_t k = standard_split(w);
    Word u(w.begin(), w.begin() + static_cast<long>(k));
    Word v(w.begin() + static_cast<long>(k), w.end());
    return Tree::node(lyndon_bracketing(u), lyndon_bracketing(v));
}

int word_degree(const Word& w, const GeneratorSet& set) {
    int d = 0;
    for (auto g : w) d += set.degree(g);
    return d;
}

std::optional<Tree> basis_tree_for_leading(const Word& w, const GeneratorSet& set) {
    if (w.empty()) return std::nullopt;
    if (is_lyndon_word(w)) return lyndon_bracketing(w);
    if (w.size() % 2 == 0) {
        const size_t h = w.size() / 2;
        Word u(w.begin(), w.begin() + static_cast<long>(h));
        if (std::equal(w.begin() + static_cast<long>(h), w.end(), u.begin()) && is_lyndon_word(u) &&
            word_degree(u, set) % 2 != 0) {
            Tree b = lyndon_bracketing(u);
            return Tree::node(b, b);
        }
    }
    return std::nullopt;
}

void enumerate_lyndon_words(const std::vector<int>& allowed, int max_len,
                            const std::function<void(const Word&)>& emit) {
    if (allowed.empty() || max_len <= 0) return;
    for (size_t i = 1; i < allowed.size(); ++i)
        if (allowed[i - 1] >= allowed[i])
            throw std::invalid_argument("enumerate_lyndon_words: alphabet must be strictly increasing");

    const size_t k = allowed.size();
    const size_t n = static_cast<size_t>(max_len);
    long long guard = 0;
    // Duval: positions into `allowed`, lex order, length <= n.
    std::vector<size_t> w{0};
    Word out;
    while (!w.empty()) {
        if (++guard > 50'000'000LL)
            throw std::runtime_error("Lyndon enumeration exceeds sanity bound");
        out.clear();
        for (size_t p : w) out.push_back(static_cast<std::uint16_t>(allowed[p]));
        emit(out);
        const size_t m = w.size();
        w.resize(n);
        for (size_t i = m; i < n; ++i) w[i] = w[i - m];
        while (!w.empty() && w.back() == k - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
}

std::vector<Tree> basis_trees_of_degree(const GeneratorSet& set, const std::vector<int>& allowed,
                                        int degree, int max_leaves) {
    std::vector<Tree> out;
    if (degree < 1 || allowed.empty()) return out;
    int min_deg = set.degree(allowed[0]);
    for (int g : allowed) min_deg = std::min(min_deg, set.degree(g));
    const int len_cap = std::min(max_leaves, degree / min_deg);

    enumerate_lyndon_words(allowed, len_cap, [&](const Word& w) {
        if (word_degree(w, set) == degree) out.push_back(lyndon_bracketing(w));
    });
    if (degree % 2 == 0 && (degree / 2) % 2 != 0) {
        const int half = degree / 2;
        enumerate_lyndon_words(allowed, std::min(max_leaves / 2, half / min_deg), [&](const Word& w) {
            if (word_degree(w, set) == half) {
                Tree b = lyndon_bracketing(w);
                out.push_back(Tree::node(b, b));
            }
        });
    }
    return out;
}

long long dimension_of_degree(const GeneratorSet& set, const std::vector<int>& allowed, int degree) {
    if (degree < 1 || allowed.empty()) return 0;
    int min_deg = set.degree(allowed[0]);
    for (int g : allowed) min_deg = std::min(min_deg, set.degree(g));

    long long count = 0;
    enumerate_lyndon_words(allowed, degree / min_deg, [&](const Word& w) {
        if (word_degree(w, set) == degree) ++count;
    });
    if (degree % 2 == 0 && (degree / 2) % 2 != 0) {
        const int half = degree / 2;
        enumerate_lyndon_words(allowed, half / min_deg, [&](const Word& w) {
            if (word_degree(w, set) == half) ++count;
        });
    }
    return count;
}

long long dimension_of_degree(const GeneratorSet& set, int degree) {
    return dimension_of_degree(set, all_generator_indices(set), degree);
}

std::vector<int> all_generator_indices(const GeneratorSet& set) {
    std::vector<int> idx(static_cast<size_t>(set.size()));
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

}  // namespace gla
