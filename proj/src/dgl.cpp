#include "gla/dgl.hpp"

#include <stdexcept>

namespace gla {

Derivation make_derivation(GenSetPtr set, int degree, std::vector<LieElement> values) {
    if (!set) throw std::invalid_argument("make_derivation: null set");
    if (values.size() != static_cast<size_t>(set->size()))
        throw std::invalid_argument("make_derivation: one value per generator required");
    for (int g = 0; g < set->size(); ++g) {
        const LieElement& v = values[static_cast<size_t>(g)];
        if (!same_generator_set(v.set(), set)) throw std::invalid_argument("make_derivation: value over wrong set");
        if (v.empty()) continue;
        const std::optional<int> d = v.degree();
        if (!d || *d != set->degree(g) + degree)
            throw std::invalid_argument("make_derivation: value for '" + set->at(g).name +
                                        "' is not homogeneous of degree |g|" +
                                        (degree >= 0 ? "+" : "") + std::to_string(degree));
    }
    return Derivation{std::move(set), degree, std::move(values)};
}

Derivation zero_derivation(const GenSetPtr& set, int degree) {
    return Derivation{set, degree, std::vector<LieElement>(static_cast<size_t>(set->size()), LieElement(set))};
}

namespace {

// sigma([A,B]) = [sigma A, B] + (-1)^{p|A|} [A, sigma B], accumulated as raw
// terms: replace one leaf at a time, with the Koszul sign of moving sigma
// past everything left of it.
void apply_tree(const Derivation& d, const Tree& t, const Rational& c, Raw& out,
                const GeneratorSet& set) {
    struct Rec {
        const Derivation& d;
        const GeneratorSet& set;
        Raw& out;
        // graft: rebuild the surrounding tree around the replaced subtree
        void go(const Tree& t, const Rational& c, const std::vector<std::pair<bool, Tree>>& path) {
            if (t.is_leaf()) {
                const LieElement& img = d.values[static_cast<size_t>(t.gen())];
                for (const auto& [tree, coeff] : img.terms()) {
                    Tree rebuilt = tree;
                    for (auto it = path.rbegin(); it != path.rend(); ++it)
                        rebuilt = it->first ? Tree::node(it->second, rebuilt) : Tree::node(rebuilt, it->second);
                    out.push_back({rebuilt, c * coeff});
                }
                return;
            }
            // descend left: no extra sign
            auto lp = path;
            lp.emplace_back(false, t.right());
            go(t.left(), c, lp);
            // descend right: sign (-1)^{p |left|}
            auto rp = path;
            rp.emplace_back(true, t.left());
            const bool flip = (d.degree % 2 != 0) && (t.left().degree(set) % 2 != 0);
            go(t.right(), flip ? -c : c, rp);
        }
    } rec{d, set, out};
    rec.go(t, c, {});
}

}  // namespace

LieElement apply(const Derivation& d, const LieElement& x, ExpansionCache* cache) {
    if (!same_generator_set(d.set, x.set())) throw std::invalid_argument("apply: generator set mismatch");
    Raw out;
    for (const auto& [tree, c] : x.terms()) apply_tree(d, tree, c, out, *d.set);
    return LieElement::normalized(d.set, out, std::nullopt, cache);
}

Derivation derivation_bracket(const Derivation& s, const Derivation& t) {
    if (!same_generator_set(s.set, t.set)) throw std::invalid_argument("derivation_bracket: set mismatch");
    const bool flip = (s.degree % 2 != 0) && (t.degree % 2 != 0);
    std::vector<LieElement> values;
    values.reserve(static_cast<size_t>(s.set->size()));
    for (int g = 0; g < s.set->size(); ++g) {
        LieElement v = apply(s, t.values[static_cast<size_t>(g)]);
        LieElement w = apply(t, s.values[static_cast<size_t>(g)]);
        values.push_back(flip ? v + w : v - w);
    }
    return make_derivation(s.set, s.degree + t.degree, std::move(values));
}

Derivation ad(const LieElement& x) {
    const std::optional<int> d = x.degree();
    if (!x.empty() && !d) throw std::invalid_argument("ad: element must be homogeneous");
    const GenSetPtr& set = x.set();
    std::vector<LieElement> values;
    values.reserve(static_cast<size_t>(set->size()));
    for (int g = 0; g < set->size(); ++g) values.push_back(bracket(x, LieElement::generator(set, g)));
    return make_derivation(set, d.value_or(0), std::move(values));
}

DglPresentation::DglPresentation(std::string name, GenSetPtr set, std::vector<LieElement> diff)
    : name_(std::move(name)), set_(std::move(set)), diff_(std::move(diff)) {
    if (!set_) throw std::invalid_argument("DglPresentation: null set");
    if (diff_.size() != static_cast<size_t>(set_->size()))
        throw std::invalid_argument("DglPresentation: one differential value per generator");
    for (const LieElement& v : diff_)
        if (!same_generator_set(v.set(), set_)) throw std::invalid_argument("DglPresentation: differential over wrong set");
}

Derivation DglPresentation::differential() const { return make_derivation(set_, -1, diff_); }

std::optional<ConeFiltration> cone_filtration(const DglPresentation& p) {
    const int n = p.set()->size();
    ConeFiltration f;
    f.stage_of.assign(static_cast<size_t>(n), -1);
    std::vector<bool> placed(static_cast<size_t>(n), false);
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> stage;
        for (int g = 0; g < n; ++g) {
            if (placed[static_cast<size_t>(g)]) continue;
            if (p.diff(g).uses_only_leaves(placed)) stage.push_back(g);
        }
        if (stage.empty()) return std::nullopt;  // not well-founded
        for (int g : stage) {
            placed[static_cast<size_t>(g)] = true;
            f.stage_of[static_cast<size_t>(g)] = static_cast<int>(f.stages.size());
        }
        remaining -= static_cast<int>(stage.size());
        f.stages.push_back(std::move(stage));
    }
    return f;
}

ValidationReport validate(const DglPresentation& p) {
    ValidationReport r;
    r.homogeneous_ok = r.d_squared_ok = r.minimal = true;

    // Degree check first: a non-homogeneous boundary makes the differential
    // derivation ill-formed, so d^2 is only evaluated when degrees are clean.
    const int n = p.set()->size();
    for (int g = 0; g < n; ++g) {
        GeneratorCheck c{g, false, false, false, LieElement(p.set())};
        const LieElement& v = p.diff(g);
        const std::optional<int> d = v.degree();
        c.homogeneous_ok = v.empty() || (d && *d == p.set()->degree(g) - 1);
        c.minimal = v.empty() || v.min_bracket_length() >= 2;
        r.homogeneous_ok = r.homogeneous_ok && c.homogeneous_ok;
        r.minimal = r.minimal && c.minimal;
        r.per_gen.push_back(std::move(c));
    }
    if (r.homogeneous_ok) {
        const Derivation d = p.differential();
        for (int g = 0; g < n; ++g) {
            GeneratorCheck& c = r.per_gen[static_cast<size_t>(g)];
            c.d_squared = apply(d, p.diff(g));
            c.d_squared_zero = c.d_squared.empty();
            r.d_squared_ok = r.d_squared_ok && c.d_squared_zero;
        }
    } else {
        r.d_squared_ok = false;
    }
    r.filtration = cone_filtration(p);
    r.well_founded = r.filtration.has_value();
    r.ok = r.homogeneous_ok && r.d_squared_ok && r.minimal && r.well_founded;
    return r;
}

}  // namespace gla
