#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cellform/bench.hpp"
#include "cellform/io.hpp"

namespace {

// Exit codes: 0 success, 2 usage, 3 missing file, 4 parse error,
// 5 validation error.
constexpr int kExitUsage = 2;
constexpr int kExitMissingFile = 3;
constexpr int kExitParse = 4;
constexpr int kExitValidation = 5;

struct CommonFlags {
    int max_iter = 100;
    int patience = 20;
    std::string output;
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) {
        std::cerr << "error: cannot open output file " << path << '\n';
        std::exit(kExitMissingFile);
    }
    return file;
}

cellform::IncidenceMatrix load_matrix(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open " << path << '\n';
        std::exit(kExitMissingFile);
    }
    return cellform::parse_incidence(file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Machine-part cell formation: similarity-based clustering "
                 "with an efficacy-improving part assignment heuristic"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string input;
    std::string format = "text";
    int fixed_k = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "incidence matrix file")->required();
        cmd->add_option("--max-iter", flags.max_iter, "improvement iteration cap")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--patience", flags.patience,
                        "consecutive non-improving iterations before stopping")
            ->check(CLI::PositiveNumber);
        cmd->add_option("-o,--output", flags.output, "write to file instead of stdout");
    };

    auto* cmd_solve = app.add_subcommand("solve", "solve one instance and print the report");
    add_common(cmd_solve);
    cmd_solve->add_option("-k,--k", fixed_k, "fixed cell count (default: try 2..m-1)")
        ->check(CLI::PositiveNumber);
    cmd_solve->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_dendro =
        app.add_subcommand("dendro", "print the linkage table (left right level)");
    add_common(cmd_dendro);

    std::string manifest_path;
    auto* cmd_bench = app.add_subcommand("bench", "run the benchmark manifest");
    cmd_bench->add_option("manifest", manifest_path, "benchmark manifest file")->required();
    cmd_bench->add_option("--max-iter", flags.max_iter, "improvement iteration cap")
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("--patience", flags.patience,
                          "consecutive non-improving iterations before stopping")
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("-o,--output", flags.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    cellform::ImprovementParams improvement{flags.max_iter, flags.patience};

    try {
        std::ofstream file;
        std::ostream& out = open_output(flags.output, file);

        if (cmd_solve->parsed()) {
            auto matrix = load_matrix(input);
            cellform::SolveParams params;
            params.improvement = improvement;
            if (fixed_k > 0) params.fixed_k = fixed_k;
            auto report = cellform::solve(matrix, params);
            cellform::write_report(matrix, report,
                                   format == "json" ? cellform::ReportFormat::json
                                                    : cellform::ReportFormat::text,
                                   out);
        } else if (cmd_dendro->parsed()) {
            auto matrix = load_matrix(input);
            auto tree = cellform::build_dendrogram(cellform::similarity_matrix(matrix));
            cellform::write_dendrogram(tree, out);
        } else if (cmd_bench->parsed()) {
            std::ifstream manifest(manifest_path);
            if (!manifest) {
                std::cerr << "error: cannot open manifest " << manifest_path << '\n';
                return kExitMissingFile;
            }
            auto records = cellform::load_manifest(manifest);
            auto base_dir = std::filesystem::path(manifest_path).parent_path().string();
            cellform::run_benchmark(records, base_dir, improvement, out);
        }
    } catch (const cellform::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const cellform::validation_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
