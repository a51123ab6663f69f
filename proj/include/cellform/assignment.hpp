#pragma once

#include <utility>
#include <vector>

#include "cellform/efficacy.hpp"

namespace cellform {

struct ImprovementParams {
    int max_iterations = 100;
    int patience = 20;  // consecutive non-improving attempts before stopping
};

struct TraceEntry {
    int iteration = 0;
    Rational efficacy;
    bool accepted = false;
};
using ImprovementTrace = std::vector<TraceEntry>;

// Seed assignment: each part goes to the cell with the most machines that
// process it; ties by largest fraction of the cell's machines visited,
// remaining ties by lowest cell index.
CellConfiguration initial_assignment(const IncidenceMatrix& matrix,
                                     const std::vector<std::vector<int>>& machine_cells);

// Membership index of a part to a cell:
//   D_cj = (N_cj / m_c) * (N_cj / n_j) * 1 / max(v_c, 1)
// where N_cj = machines in the cell processing the part, m_c = machines in
// the cell, n_j = machines the part needs, v_c = voids of the cell under
// the current configuration. Zero when no machine of the cell touches the
// part.
double membership_index(const IncidenceMatrix& matrix, const CellConfiguration& config,
                        int cell, int part);

// M_cj: machines of the cell the part does not use.
int unused_machines(const IncidenceMatrix& matrix, const CellConfiguration& config,
                    int cell, int part);

// Strict-improvement reassignment loop. Each iteration picks the part with
// the most unused machines in its current cell and tries the other cells
// in descending membership-index order, accepting the first move that
// strictly raises efficacy. Stops at max_iterations, after `patience`
// consecutive non-improving attempts, or after a full pass with no
// accepted move. Machine cells are never changed.
std::pair<CellConfiguration, ImprovementTrace> improve(const IncidenceMatrix& matrix,
                                                       const CellConfiguration& start,
                                                       const ImprovementParams& params);

}  // namespace cellform
