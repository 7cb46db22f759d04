#include "gla/generators.hpp"

#include <stdexcept>

namespace gla {

std::shared_ptr<const GeneratorSet> GeneratorSet::make(std::vector<Generator> gens) {
    if (gens.size() >= 65535)
        throw std::invalid_argument("generator set too large");
    auto set = std::make_shared<GeneratorSet>();
    set->gens_ = std::move(gens);
    set->min_degree_ = 0;
    for (int i = 0; i < set->size(); ++i) {
        const Generator& g = set->gens_[static_cast<size_t>(i)];
        if (g.name.empty())
            throw std::invalid_argument("generator with empty name");
        if (g.degree < 1)
            throw std::invalid_argument("generator '" + g.name + "' has degree " +
                                        std::to_string(g.degree) + "; degrees must be >= 1");
        if (!set->by_name_.emplace(g.name, i).second)
            throw std::invalid_argument("duplicate generator name '" + g.name + "'");
        if (g.origin == Origin::Suspension) {
            if (g.left < 0 || g.left >= set->size() || g.right < 0 || g.right >= set->size())
                throw std::invalid_argument("suspension '" + g.name + "' references missing factor");
            const Generator& v = set->gens_[static_cast<size_t>(g.left)];
            const Generator& w = set->gens_[static_cast<size_t>(g.right)];
            if (g.degree != v.degree + w.degree + 1)
                throw std::invalid_argument("suspension '" + g.name + "' must have degree |" +
                                            v.name + "|+|" + w.name + "|+1");
            if (!set->susp_.emplace(std::make_pair(g.left, g.right), i).second)
                throw std::invalid_argument("duplicate suspension for pair (" + v.name + "," + w.name + ")");
        }
        if (set->min_degree_ == 0 || g.degree < set->min_degree_)
            set->min_degree_ = g.degree;
    }
    return set;
}

std::optional<int> GeneratorSet::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> GeneratorSet::suspension_of(int left, int right) const {
    auto it = susp_.find({left, right});
    if (it == susp_.end()) return std::nullopt;
    return it->second;
}

}  // namespace gla
