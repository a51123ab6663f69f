#pragma once

#include <optional>

#include "cellform/assignment.hpp"
#include "cellform/clustering.hpp"

namespace cellform {

struct SolveParams {
    ImprovementParams improvement;
    // Inclusive range of cell counts to evaluate. When neither field is
    // set, one cut is chosen by the largest drop in dendrogram merge
    // similarity (ties to the smaller k). fixed_k overrides the range.
    std::optional<std::pair<int, int>> k_range;
    std::optional<int> fixed_k;
};

struct CutResult {
    int k = 0;
    Rational efficacy;
};

struct SolveReport {
    CellConfiguration best;
    EfficacyBreakdown breakdown;
    int best_k = 0;
    std::vector<CutResult> per_cut;  // one entry per evaluated k, ascending
    ImprovementTrace trace;          // improvement trace of the winning cut
    LinkageTree dendrogram;
};

// Full pipeline: similarity -> dendrogram -> for each cut level, initial
// assignment + improvement -> best configuration by efficacy, ties broken
// by smaller k. Cut levels are independent; the OpenMP version evaluates
// them concurrently and reduces deterministically, the serial version is
// the reference.
SolveReport solve(const IncidenceMatrix& matrix, const SolveParams& params = {});
SolveReport solve_serial(const IncidenceMatrix& matrix, const SolveParams& params = {});

}  // namespace cellform
