#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gla/lie.hpp"

namespace gla {

// Degree-p linear self-map obeying the graded Leibniz rule, stored by its
// values on generators.  p may be negative (differentials have p = -1).
struct Derivation {
    GenSetPtr set;
    int degree = 0;
    std::vector<LieElement> values;  // one per generator
};

Derivation make_derivation(GenSetPtr set, int degree, std::vector<LieElement> values);
Derivation zero_derivation(const GenSetPtr& set, int degree);
LieElement apply(const Derivation& d, const LieElement& x, ExpansionCache* cache = nullptr);
// [s,t] = s.t - (-1)^{|s||t|} t.s
Derivation derivation_bracket(const Derivation& s, const Derivation& t);
Derivation ad(const LieElement& x);  // y -> [x,y]; x homogeneous

// A free dgl given by generators and their differential values.
class DglPresentation {
public:
    DglPresentation(std::string name, GenSetPtr set, std::vector<LieElement> diff);
    const std::string& name() const { return name_; }
    const GenSetPtr& set() const { return set_; }
    const LieElement& diff(int gen) const { return diff_.at(static_cast<size_t>(gen)); }
    const std::vector<LieElement>& diffs() const { return diff_; }
    Derivation differential() const;

private:
    std::string name_;
    GenSetPtr set_;
    std::vector<LieElement> diff_;
};

// Stages of the generator filtration: stage 0 carries the cycles, stage i
// the generators whose boundary lives on earlier stages.
struct ConeFiltration {
    std::vector<std::vector<int>> stages;
    std::vector<int> stage_of;  // per generator
    int length() const { return static_cast<int>(stages.size()); }
};

std::optional<ConeFiltration> cone_filtration(const DglPresentation& p);

struct GeneratorCheck {
    int gen = -1;
    bool homogeneous_ok = false;  // boundary homogeneous of degree |g|-1 (or zero)
    bool minimal = false;         // no linear term
    bool d_squared_zero = false;
    LieElement d_squared;
};

struct ValidationReport {
    bool ok = false;  // all of the below
    bool homogeneous_ok = false;
    bool d_squared_ok = false;
    bool minimal = false;
    bool well_founded = false;
    std::vector<GeneratorCheck> per_gen;
    std::optional<ConeFiltration> filtration;
};

ValidationReport validate(const DglPresentation& p);

}  // namespace gla
