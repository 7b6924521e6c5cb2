#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xi/algebra_name.hpp"
#include "xi/causality.hpp"
#include "xi/classify.hpp"
#include "xi/crown.hpp"
#include "xi/jordan.hpp"
#include "xi/report.hpp"

namespace {

enum class Format { table, json };

std::size_t output_width() {
    const char* w = std::getenv("XI_WIDTH");
    if (!w) return 0;
    try {
        return std::stoul(w);
    } catch (const std::exception&) {
        return 0;
    }
}

/// Writes to --out if given, otherwise to stdout.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw xi::Error("cannot write " + out_path);
    f << text;
}

void add_format(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"table", Format::table}, {"json", Format::json}},
                                            CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinguished boundaries of complex crowns: root data, extreme points, stabilizers"};
    app.require_subcommand(1);
    Format format = Format::table;
    std::string out_path;
    int status = 0;

    std::string label;
    auto* roots = app.add_subcommand("roots", "Root system summary, e.g. roots E7");
    roots->add_option("system", label, "A1.., B2.., C2.., D3.., BC1.., E6, E7")->required();
    add_format(roots, format);
    roots->callback([&] {
        const auto rd = xi::build_root_system(label);
        emit(format == Format::json ? xi::canonical_dump(xi::roots_json(rd)) : xi::render_roots(rd), out_path);
    });

    std::string xi0_algebra;
    auto* extremes = app.add_subcommand("extremes", "Extreme points of the crown polytope up to the Weyl group");
    extremes->add_option("system", label, "Root system label");
    extremes->add_option("--xi0", xi0_algebra, "Use the doubly restricted polytope of so(p,q) or so(n,C) instead");
    add_format(extremes, format);
    extremes->callback([&] {
        if (label.empty() == xi0_algebra.empty()) throw CLI::ValidationError("give either a system label or --xi0 ALGEBRA");
        const auto poly = xi0_algebra.empty() ? xi::make_crown(xi::build_root_system(label)) : xi::xi0_polytope(xi0_algebra);
        emit(format == Format::json ? xi::canonical_dump(xi::extremes_json(poly)) : xi::render_extremes(poly), out_path);
    });

    std::string algebra;
    bool xi0 = false;
    auto* classify = app.add_subcommand("classify", "Boundary components and their stabilizer algebras");
    classify->add_option("algebra", algebra, xi::algebra_grammar())->required();
    classify->add_flag("--xi0", xi0, "Boundary of the polytope of doubly restricted roots (so(p,q), so(n,C))");
    add_format(classify, format);
    classify->add_option("--out", out_path, "Write the report to a file");
    classify->callback([&] {
        const auto c = xi0 ? xi::classify_xi0_boundary(algebra) : xi::classify_boundary(algebra);
        emit(format == Format::json ? xi::canonical_dump(xi::classification_json(c))
                                    : xi::render_classification(c, output_width()),
             out_path);
        if (!c.ok()) status = 1;
    });

    std::string kind;
    std::size_t n = 0;
    auto* jordan = app.add_subcommand("jordan", "Signature strata of Symm(n,R) or Herm(n,C)");
    jordan->add_option("kind", kind, "symm or herm")->required();
    jordan->add_option("n", n, "Rank")->required()->check(CLI::Range(1, 8));
    add_format(jordan, format);
    jordan->add_option("--out", out_path, "Write the report to a file");
    jordan->callback([&] {
        const auto r = xi::jordan_report(xi::JordanAlgebra(xi::parse_jordan_kind(kind), n));
        emit(format == Format::json ? xi::canonical_dump(xi::jordan_json(r)) : xi::render_jordan(r, output_width()),
             out_path);
        if (!r.ok()) status = 1;
    });

    auto* verify = app.add_subcommand("verify", "Run every check for one algebra");
    verify->add_option("algebra", algebra, xi::algebra_grammar())->required();
    verify->callback([&] {
        const auto c = xi::classify_boundary(algebra);
        std::cout << xi::render_verification(c);
        if (!c.ok()) status = 1;
    });

    auto* table = app.add_subcommand("table", "The reference table of non-compactly causal pairs");
    bool cayley = false;
    table->add_flag("--cayley", cayley, "Only the Cayley type rows");
    table->callback([&] {
        const auto rows = cayley ? xi::cayley_rows() : xi::causal_reference_table();
        for (const auto& r : rows)
            std::cout << r.g << "  ->  " << r.h << (r.range.empty() ? "" : "   (" + r.range + ")") << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
