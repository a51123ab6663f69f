#pragma once

#include <string>
#include <vector>

#include "cellform/incidence.hpp"
#include "cellform/rational.hpp"

namespace cellform {

// Partition of machines into cells plus an assignment of every part to one
// cell. Cell indices are 0-based and dense in [0, cell_count). A cell may
// carry an empty part family; its block then has zero area and no voids.
struct CellConfiguration {
    int cell_count = 0;
    std::vector<int> machine_cell;  // machine index -> cell index
    std::vector<int> part_cell;     // part index -> cell index
};

struct EfficacyBreakdown {
    int total_ones = 0;    // E
    int exceptional = 0;   // E_e: 1s outside the diagonal blocks
    int voids = 0;         // E_v: 0s inside the diagonal blocks
    Rational efficacy;     // (E - E_e) / (E + E_v)
};

// Grouping efficacy of a configuration. Throws validation_error on
// dimension mismatch between matrix and configuration.
EfficacyBreakdown efficacy(const IncidenceMatrix& matrix, const CellConfiguration& config);

// Every violated invariant, each with a machine/part/cell locus. Empty
// result means the configuration is valid for the matrix.
std::vector<std::string> validate(const IncidenceMatrix& matrix, const CellConfiguration& config);

}  // namespace cellform
