// Command-line surface: validation, product and diagonal model construction,
// star evaluation, normalization, residual checks with overrides, and the
// stored-example reproductions.  Exit codes: 0 success, 1 verification
// failure, 2 input error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gla/diagonal.hpp"
#include "gla/parse.hpp"
#include "gla/print.hpp"
#include "gla/reproduce.hpp"

using namespace gla;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_out(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

// Each line prefixed with '#' so the result stays a parseable model file.
std::string commented(const std::string& text) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out += "# " + line + "\n";
    return out;
}

int max_cone_length(const DglPresentation& p) {
    const auto f = cone_filtration(p);
    return f ? f->length() : -1;
}

struct CheckCmd {
    std::string file;
    int run(const std::string& format) const {
        const DglPresentation p = parse_dgl(slurp(file));
        const ValidationReport r = validate(p);
        const Json j = validation_json(p, r);
        std::cout << (format == "json" ? json_text(j) : render_text(j));
        return r.ok ? 0 : 1;
    }
};

struct ProductCmd {
    std::string file_x, file_y, out;
    bool force = false;

    int run(const std::string& format) const {
        const DglPresentation X = parse_dgl(slurp(file_x));
        const DglPresentation Y = parse_dgl(slurp(file_y));
        if (!force) {
            const int cx = max_cone_length(X), cy = max_cone_length(Y);
            if (cx > 2 || cy > 2)
                throw std::invalid_argument(
                    "a factor has cone length > 2, outside the guaranteed range of the "
                    "closed formula; rerun with --force to build the candidate model and "
                    "report its residual");
            const ProductModel m = build_product_model(X, Y);
            const std::string body =
                format == "json" ? json_text(Json{{"model", model_json(m)}})
                                 : print_presentation(m.model);
            if (out.empty())
                std::cout << body;
            else
                write_out(out, body);
            return 0;
        }
        ProductModel m = build_candidate_model(X, Y);
        const ResidualReport r = d_squared_residual(m.model);
        const Json rj = residual_json(m.model, r);
        if (format == "json") {
            const std::string body = json_text(Json{{"model", model_json(m)}, {"residual", rj}});
            if (out.empty())
                std::cout << body;
            else {
                write_out(out, body);
                std::cout << json_text(rj);
            }
        } else {
            if (out.empty())
                std::cout << print_presentation(m.model) << commented(render_text(rj));
            else {
                write_out(out, print_presentation(m.model));
                std::cout << render_text(rj);
            }
        }
        return r.pass ? 0 : 1;
    }
};

struct DiagonalCmd {
    std::string file, out;

    int run(const std::string& format) const {
        const DglPresentation X = parse_dgl(slurp(file));
        const DiagonalModel m = build_diagonal(X);
        std::string body;
        if (format == "json") {
            body = json_text(diagonal_json(m));
        } else {
            body = print_presentation(m.product.model);
            const GeneratorSet& bset = *m.base.set();
            for (int i = 0; i < bset.size(); ++i)
                body += "# delta " + bset.at(i).name + " = " +
                        print_element(m.delta[static_cast<size_t>(i)]) + "\n";
        }
        if (out.empty())
            std::cout << body;
        else
            write_out(out, body);
        return 0;
    }
};

struct StarCmd {
    std::string file_v, file_w, a_expr, t_expr;

    int run(const std::string& format) const {
        const DglPresentation X = parse_dgl(slurp(file_v));
        const DglPresentation Y = parse_dgl(slurp(file_w));
        const ProductSpace ps = make_product_space(X, Y);
        const MagmaElement A = parse_magma_expr(a_expr, X.set());
        const LieElement T = parse_lie_expr(t_expr, Y.set());
        const LieElement value = star(ps, A, T);
        if (format == "json")
            std::cout << json_text(Json{{"value", print_element(value)}});
        else
            std::cout << print_element(value) << "\n";
        return 0;
    }
};

struct NormalizeCmd {
    std::string file, expr;

    int run(const std::string& format) const {
        const DglPresentation p = parse_dgl(slurp(file));
        const LieElement value = parse_lie_expr(expr, p.set());
        if (format == "json")
            std::cout << json_text(Json{{"value", print_element(value)}});
        else
            std::cout << print_element(value) << "\n";
        return 0;
    }
};

struct ResidualCmd {
    std::string file;
    std::vector<std::string> overrides;

    int run(const std::string& format) const {
        const DglPresentation p = parse_dgl(slurp(file));
        const GenSetPtr& set = p.set();
        std::vector<LieElement> diffs = p.diffs();
        for (const std::string& ov : overrides) {
            const size_t eq = ov.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("override must look like GEN=EXPR, got '" + ov + "'");
            std::string gname;
            for (const char c : ov.substr(0, eq))
                if (!std::isspace(static_cast<unsigned char>(c))) gname += c;
            const std::optional<int> g = set->find(gname);
            if (!g) throw std::invalid_argument("unknown generator '" + gname + "' in override");
            const LieElement extra = parse_lie_expr(ov.substr(eq + 1), set);
            if (!extra.empty()) {
                const std::optional<int> d = extra.degree();
                if (!d || *d != set->degree(*g) - 1)
                    throw std::invalid_argument(
                        "override for '" + gname + "' must be homogeneous of degree " +
                        std::to_string(set->degree(*g) - 1));
            }
            diffs[static_cast<size_t>(*g)] += extra;
        }
        const DglPresentation q(p.name(), set, std::move(diffs));
        const ResidualReport r = d_squared_residual(q);
        const Json j = residual_json(q, r);
        std::cout << (format == "json" ? json_text(j) : render_text(j));
        return r.pass ? 0 : 1;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal models of products of rational 2-cones"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CheckCmd check;
    auto* c_check = app.add_subcommand("check", "validate a presentation file");
    c_check->add_option("file", check.file, "presentation file")->required();

    ProductCmd product;
    auto* c_product = app.add_subcommand("product", "build the model of a product");
    c_product->add_option("file_x", product.file_x, "left factor")->required();
    c_product->add_option("file_y", product.file_y, "right factor")->required();
    c_product->add_flag("--force", product.force,
                        "apply the closed formula outside its guaranteed range and "
                        "report the residual");
    c_product->add_option("-o,--output", product.out, "write the model file here");

    DiagonalCmd diagonal;
    auto* c_diagonal = app.add_subcommand("diagonal", "build the diagonal model of a 2-cone");
    c_diagonal->add_option("file", diagonal.file, "presentation file")->required();
    c_diagonal->add_option("-o,--output", diagonal.out, "write the model file here");

    StarCmd star_cmd;
    auto* c_star = app.add_subcommand("star", "evaluate the star operator");
    c_star->add_option("file_v", star_cmd.file_v, "left factor")->required();
    c_star->add_option("file_w", star_cmd.file_w, "right factor")->required();
    c_star->add_option("-A,--magma", star_cmd.a_expr, "magma expression over the left factor")
        ->required();
    c_star->add_option("-T,--lie", star_cmd.t_expr, "Lie expression over the right factor")
        ->required();

    NormalizeCmd normalize;
    auto* c_normalize = app.add_subcommand("normalize", "canonical form of an expression");
    c_normalize->add_option("file", normalize.file, "presentation file")->required();
    c_normalize->add_option("-e,--expr", normalize.expr, "Lie expression")->required();

    ResidualCmd residual;
    auto* c_residual = app.add_subcommand("residual", "report d squared on every generator");
    c_residual->add_option("file", residual.file, "model file")->required();
    c_residual->add_option("--override", residual.overrides,
                           "GEN=EXPR added to that generator's boundary (repeatable)");

    std::string target;
    auto* c_reproduce = app.add_subcommand("reproduce", "rerun a stored example");
    c_reproduce->add_option("target", target, "one of: ex2.4ii ex3.10 ex3.11 ex3.14 diag4.1 cone3")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_check) return check.run(format);
        if (*c_product) return product.run(format);
        if (*c_diagonal) return diagonal.run(format);
        if (*c_star) return star_cmd.run(format);
        if (*c_normalize) return normalize.run(format);
        if (*c_residual) return residual.run(format);
        if (*c_reproduce) {
            const ReproduceResult res = reproduce(target);
            std::cout << (format == "json" ? json_text(res.report) : render_text(res.report));
            return res.pass ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: line " << e.line << ", col " << e.col << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
