#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gla {

// Where a generator comes from.  Plain generators belong to a single free
// algebra; Left/Right mark the two factors of a product; Suspension marks
// the generators s(v,w) attached for each factor pair.
enum class Origin { Plain, Left, Right, Suspension };

struct Generator {
    std::string name;
    int degree = 0;
    Origin origin = Origin::Plain;
    // For suspensions: indices (within the owning set) of the factor pair.
    int left = -1;
    int right = -1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Ordered list of generators.  The stored order is the total order used by
// the canonical (Lyndon) basis, so two sets with the same generators in a
// different order present the same algebra on different bases.
class GeneratorSet {
public:
    static std::shared_ptr<const GeneratorSet> make(std::vector<Generator> gens);

    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& at(int i) const { return gens_.at(static_cast<size_t>(i)); }
    int degree(int i) const { return at(i).degree; }
    bool odd(int i) const { return at(i).degree % 2 != 0; }

    std::optional<int> find(const std::string& name) const;
    std::optional<int> suspension_of(int left, int right) const;
    int min_degree() const { return min_degree_; }
    bool same_as(const GeneratorSet& o) const { return gens_ == o.gens_; }

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> by_name_;
    std::map<std::pair<int, int>, int> susp_;
    int min_degree_ = 0;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

// Same set object, or a set listing identical generators in the same order.
// Elements over two such sets have matching canonical forms and may mix.
inline bool same_generator_set(const GenSetPtr& a, const GenSetPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

}  // namespace gla
