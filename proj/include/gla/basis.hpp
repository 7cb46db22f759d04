#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gla/tensor.hpp"

namespace gla {

// Canonical basis of the free graded Lie algebra: standard bracketings of
// Lyndon words over the generator order, plus squares [b(u),b(u)] for each
// Lyndon word u whose bracketing has odd degree.

bool is_lyndon_word(const Word& w);

// For a Lyndon word of length >= 2: start of the lex-least proper suffix,
// which is the standard right factor.
std::size_t standard_split(const Word& w);

Tree lyndon_bracketing(const Word& w);

// The basis tree whose expansion has leading word w, if any.  Leading words
// are exactly the Lyndon words (coefficient 1) and squares u.u with u Lyndon
// of odd degree (coefficient 2).
std::optional<Tree> basis_tree_for_leading(const Word& w, const GeneratorSet& set);

int word_degree(const Word& w, const GeneratorSet& set);

// Enumerate Lyndon words over the sub-alphabet `allowed` (generator indices,
// strictly increasing) with length <= max_len, in lex order.
void enumerate_lyndon_words(const std::vector<int>& allowed, int max_len,
                            const std::function<void(const Word&)>& emit);

// All canonical basis trees of the given total degree, leaf count <= max_leaves.
std::vector<Tree> basis_trees_of_degree(const GeneratorSet& set, const std::vector<int>& allowed,
                                        int degree, int max_leaves);

long long dimension_of_degree(const GeneratorSet& set, int degree);
long long dimension_of_degree(const GeneratorSet& set, const std::vector<int>& allowed, int degree);

std::vector<int> all_generator_indices(const GeneratorSet& set);

}  // namespace gla
