#pragma once

#include <json.hpp>
#include <string>

#include "gla/diagonal.hpp"
#include "gla/product_model.hpp"

namespace gla {

// All command output is built as a JSON document first; the text rendering
// walks the same document, so both formats carry identical content.
using Json = nlohmann::ordered_json;

std::string render_text(const Json& j);

// Per-term diff of a computed element against a stored expectation.
enum class TermStatus { Exact, Sign, Coeff, Missing, Unexpected };

struct TermComparison {
    Tree tree;
    Rational computed;  // 0 when absent
    Rational expected;  // 0 when absent
    TermStatus status = TermStatus::Exact;
};

struct Comparison {
    std::string label;
    LieElement computed;
    LieElement expected;
    std::vector<TermComparison> terms;
    int exact = 0, sign = 0, coeff = 0, missing = 0, unexpected = 0;
    // Same basis trees on both sides (signs/coefficients may deviate).
    bool trees_match = false;
    bool identical = false;
};

Comparison compare_elements(std::string label, const LieElement& computed,
                            const LieElement& expected);

Json comparison_json(const Comparison& c);
Json validation_json(const DglPresentation& p, const ValidationReport& r);
Json residual_json(const DglPresentation& p, const ResidualReport& r);
Json model_json(const ProductModel& m);
Json diagonal_json(const DiagonalModel& m);

}  // namespace gla
