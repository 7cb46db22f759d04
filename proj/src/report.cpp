#include "gla/report.hpp"

#include <algorithm>

#include "gla/print.hpp"

namespace gla {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_null()) return "none";
    return j.dump();
}

void render(const Json& j, std::string& out, int indent);

void render_item(const Json& item, std::string& out, int indent) {
    if (is_scalar(item)) {
        out += std::string(static_cast<size_t>(indent), ' ') + "- " + scalar_text(item) + "\n";
        return;
    }
    std::string block;
    render(item, block, indent + 2);
    if (static_cast<size_t>(indent) < block.size()) block[static_cast<size_t>(indent)] = '-';
    out += block;
}

void render(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object()) {
                if (v.empty()) {
                    out += pad + k + ": (none)\n";
                    continue;
                }
                out += pad + k + ":\n";
                render(v, out, indent + 2);
            } else if (v.is_array()) {
                if (v.empty()) {
                    out += pad + k + ": (none)\n";
                } else if (std::all_of(v.begin(), v.end(), is_scalar)) {
                    out += pad + k + ":";
                    bool first = true;
                    for (const auto& x : v) {
                        out += first ? " " : ", ";
                        out += scalar_text(x);
                        first = false;
                    }
                    out += "\n";
                } else {
                    out += pad + k + ":\n";
                    for (const auto& x : v) render_item(x, out, indent + 2);
                }
            } else {
                out += pad + k + ": " + scalar_text(v) + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) render_item(x, out, indent);
    } else {
        out += pad + scalar_text(j) + "\n";
    }
}

const char* status_name(TermStatus s) {
    switch (s) {
        case TermStatus::Exact: return "exact";
        case TermStatus::Sign: return "sign";
        case TermStatus::Coeff: return "coefficient";
        case TermStatus::Missing: return "missing";
        case TermStatus::Unexpected: return "unexpected";
    }
    return "?";
}

}  // namespace

std::string render_text(const Json& j) {
    std::string out;
    render(j, out, 0);
    return out;
}

Comparison compare_elements(std::string label, const LieElement& computed,
                            const LieElement& expected) {
    Comparison c{std::move(label), computed, expected, {}};
    const auto record = [&c](TermComparison t) {
        switch (t.status) {
            case TermStatus::Exact: ++c.exact; break;
            case TermStatus::Sign: ++c.sign; break;
            case TermStatus::Coeff: ++c.coeff; break;
            case TermStatus::Missing: ++c.missing; break;
            case TermStatus::Unexpected: ++c.unexpected; break;
        }
        c.terms.push_back(std::move(t));
    };
    auto ci = computed.terms().begin();
    const auto ce = computed.terms().end();
    auto ei = expected.terms().begin();
    const auto ee = expected.terms().end();
    while (ci != ce || ei != ee) {
        int cmp;
        if (ci == ce) {
            cmp = 1;
        } else if (ei == ee) {
            cmp = -1;
        } else {
            const int dc = ci->first.degree(*computed.set());
            const int de = ei->first.degree(*expected.set());
            cmp = dc != de ? (dc < de ? -1 : 1) : Tree::compare(ci->first, ei->first);
        }
        if (cmp < 0) {
            record({ci->first, ci->second, Rational(0), TermStatus::Unexpected});
            ++ci;
        } else if (cmp > 0) {
            record({ei->first, Rational(0), ei->second, TermStatus::Missing});
            ++ei;
        } else {
            const TermStatus s = ci->second == ei->second
                                     ? TermStatus::Exact
                                     : (ci->second == -ei->second ? TermStatus::Sign
                                                                  : TermStatus::Coeff);
            record({ci->first, ci->second, ei->second, s});
            ++ci;
            ++ei;
        }
    }
    c.trees_match = c.missing == 0 && c.unexpected == 0;
    c.identical = c.trees_match && c.sign == 0 && c.coeff == 0;
    return c;
}

Json comparison_json(const Comparison& c) {
    const GeneratorSet& set = *c.computed.set();
    Json deviations = Json::array();
    for (const auto& t : c.terms) {
        if (t.status == TermStatus::Exact) continue;
        Json row{{"tree", print_tree(t.tree, set)}, {"status", status_name(t.status)}};
        if (t.computed != 0) row["computed"] = rational_str(t.computed);
        if (t.expected != 0) row["expected"] = rational_str(t.expected);
        deviations.push_back(std::move(row));
    }
    return Json{{"label", c.label},
                {"computed", print_element(c.computed)},
                {"expected", print_element(c.expected)},
                {"terms", static_cast<int>(c.terms.size())},
                {"exact_terms", c.exact},
                {"deviations", deviations},
                {"trees_match", c.trees_match},
                {"identical", c.identical}};
}

Json validation_json(const DglPresentation& p, const ValidationReport& r) {
    const GeneratorSet& set = *p.set();
    Json j{{"name", p.name()},
           {"ok", r.ok},
           {"homogeneous", r.homogeneous_ok},
           {"d_squared", r.d_squared_ok},
           {"minimal", r.minimal},
           {"well_founded", r.well_founded}};
    if (r.filtration) {
        j["cone_length"] = r.filtration->length();
        Json stages = Json::array();
        for (size_t i = 0; i < r.filtration->stages.size(); ++i) {
            Json names = Json::array();
            for (const int g : r.filtration->stages[i]) names.push_back(set.at(g).name);
            stages.push_back(Json{{"stage", static_cast<int>(i)}, {"generators", names}});
        }
        j["stages"] = std::move(stages);
    } else {
        j["cone_length"] = nullptr;
    }
    Json gens = Json::array();
    for (const auto& c : r.per_gen) {
        Json g{{"gen", set.at(c.gen).name},
               {"degree", set.degree(c.gen)},
               {"boundary", print_element(p.diff(c.gen))},
               {"homogeneous", c.homogeneous_ok},
               {"minimal", c.minimal},
               {"d_squared_zero", c.d_squared_zero}};
        if (!c.d_squared.empty()) g["residual"] = print_element(c.d_squared);
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    return j;
}

Json residual_json(const DglPresentation& p, const ResidualReport& r) {
    const GeneratorSet& set = *p.set();
    Json rows = Json::array();
    for (int i = 0; i < set.size(); ++i) {
        const LieElement& v = r.d_squared[static_cast<size_t>(i)];
        if (v.empty()) continue;
        rows.push_back(Json{{"gen", set.at(i).name}, {"d_squared", print_element(v)}});
    }
    return Json{{"name", p.name()},
                {"pass", r.pass},
                {"nonzero_residuals", static_cast<int>(rows.size())},
                {"residuals", std::move(rows)}};
}

Json model_json(const ProductModel& m) {
    const GeneratorSet& set = *m.model.set();
    Json gens = Json::array();
    for (int i = 0; i < set.size(); ++i)
        gens.push_back(Json{{"gen", set.at(i).name},
                            {"degree", set.degree(i)},
                            {"branch", branch_name(m.branch[static_cast<size_t>(i)])},
                            {"d", print_element(m.model.diff(i))}});
    return Json{{"name", m.model.name()}, {"generators", std::move(gens)}};
}

Json diagonal_json(const DiagonalModel& m) {
    const GeneratorSet& bset = *m.base.set();
    Json rows = Json::array();
    for (int i = 0; i < bset.size(); ++i)
        rows.push_back(Json{{"gen", bset.at(i).name},
                            {"delta", print_element(m.delta[static_cast<size_t>(i)])}});
    return Json{{"name", m.base.name()},
                {"model", model_json(m.product)},
                {"diagonal", std::move(rows)}};
}

}  // namespace gla
