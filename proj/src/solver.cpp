#include "cellform/solver.hpp"

#include <stdexcept>

namespace cellform {

namespace {

// Default cut: the k in [2, m-1] whose cut crosses the largest drop in
// merge similarity, i.e. maximizing level(last kept merge) - level(first
// undone merge); ties go to the smaller k. On both reference instances
// this lands on the 2-cell split below the root.
int largest_drop_k(const LinkageTree& tree) {
    const int m = tree.leaf_count;
    if (m <= 3) return 2;
    int best_k = 2;
    double best_drop = tree.merges[m - 3].level - tree.merges[m - 2].level;
    for (int k = 3; k <= m - 1; ++k) {
        const double drop = tree.merges[m - k - 1].level - tree.merges[m - k].level;
        if (drop > best_drop) {
            best_drop = drop;
            best_k = k;
        }
    }
    return best_k;
}

std::pair<int, int> resolve_k_range(const SolveParams& params, const LinkageTree& tree) {
    const int m = tree.leaf_count;
    int lo, hi;
    if (params.fixed_k) {
        lo = hi = *params.fixed_k;
    } else if (params.k_range) {
        lo = params.k_range->first;
        hi = params.k_range->second;
    } else {
        lo = hi = largest_drop_k(tree);
    }
    if (lo < 1 || hi > m || lo > hi)
        throw std::domain_error("cell-count range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "] invalid for " + std::to_string(m) +
                                " machines");
    return {lo, hi};
}

SolveReport run(const IncidenceMatrix& matrix, const SolveParams& params, bool parallel) {
    SolveReport report;
    const SimilarityMatrix sim =
        parallel ? similarity_matrix(matrix) : similarity_matrix_serial(matrix);
    report.dendrogram = build_dendrogram(sim);
    const auto [k_lo, k_hi] = resolve_k_range(params, report.dendrogram);

    struct CutOutcome {
        CellConfiguration config;
        ImprovementTrace trace;
        Rational tau;
    };
    const int cuts = k_hi - k_lo + 1;
    std::vector<CutOutcome> outcomes(cuts);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int idx = 0; idx < cuts; ++idx) {
        const int k = k_lo + idx;
        auto cells = cut_tree(report.dendrogram, k);
        auto start = initial_assignment(matrix, cells);
        auto [config, trace] = improve(matrix, start, params.improvement);
        outcomes[idx].config = std::move(config);
        outcomes[idx].trace = std::move(trace);
    }
    for (int idx = 0; idx < cuts; ++idx)
        outcomes[idx].tau = efficacy(matrix, outcomes[idx].config).efficacy;

    int best_idx = 0;
    for (int idx = 0; idx < cuts; ++idx) {
        report.per_cut.push_back({k_lo + idx, outcomes[idx].tau});
        if (outcomes[idx].tau > outcomes[best_idx].tau) best_idx = idx;
    }

    report.best = std::move(outcomes[best_idx].config);
    report.trace = std::move(outcomes[best_idx].trace);
    report.best_k = k_lo + best_idx;
    report.breakdown = efficacy(matrix, report.best);
    return report;
}

}  // namespace

SolveReport solve(const IncidenceMatrix& matrix, const SolveParams& params) {
    return run(matrix, params, true);
}

SolveReport solve_serial(const IncidenceMatrix& matrix, const SolveParams& params) {
    return run(matrix, params, false);
}

}  // namespace cellform
