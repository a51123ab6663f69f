#include "cellform/efficacy.hpp"

namespace cellform {

EfficacyBreakdown efficacy(const IncidenceMatrix& matrix, const CellConfiguration& config) {
    if (static_cast<int>(config.machine_cell.size()) != matrix.machines() ||
        static_cast<int>(config.part_cell.size()) != matrix.parts())
        throw validation_error("configuration dimensions do not match matrix");

    EfficacyBreakdown b;
    b.total_ones = matrix.ones();
    for (int i = 0; i < matrix.machines(); ++i) {
        for (int j = 0; j < matrix.parts(); ++j) {
            bool inside = config.machine_cell[i] == config.part_cell[j];
            if (matrix.at(i, j)) {
                if (!inside) ++b.exceptional;
            } else if (inside) {
                ++b.voids;
            }
        }
    }
    b.efficacy = Rational(b.total_ones - b.exceptional, b.total_ones + b.voids);
    return b;
}

std::vector<std::string> validate(const IncidenceMatrix& matrix, const CellConfiguration& config) {
    std::vector<std::string> violations;
    const int k = config.cell_count;
    if (k < 1) violations.push_back("cell count must be at least 1");
    if (k > matrix.machines()) violations.push_back("cell count exceeds machine count");

    if (static_cast<int>(config.machine_cell.size()) != matrix.machines())
        violations.push_back("machine assignment covers " +
                             std::to_string(config.machine_cell.size()) + " machines, matrix has " +
                             std::to_string(matrix.machines()));
    if (static_cast<int>(config.part_cell.size()) != matrix.parts())
        violations.push_back("part assignment covers " + std::to_string(config.part_cell.size()) +
                             " parts, matrix has " + std::to_string(matrix.parts()));

    std::vector<int> machines_in_cell(std::max(k, 0), 0);
    for (std::size_t i = 0; i < config.machine_cell.size(); ++i) {
        int c = config.machine_cell[i];
        if (c < 0 || c >= k)
            violations.push_back("machine " + std::to_string(i + 1) + ": cell index " +
                                 std::to_string(c + 1) + " out of range");
        else
            ++machines_in_cell[c];
    }
    for (std::size_t j = 0; j < config.part_cell.size(); ++j) {
        int c = config.part_cell[j];
        if (c < 0 || c >= k)
            violations.push_back("part " + std::to_string(j + 1) + ": cell index " +
                                 std::to_string(c + 1) + " out of range");
    }
    for (int c = 0; c < k && static_cast<int>(config.machine_cell.size()) == matrix.machines(); ++c)
        if (machines_in_cell[c] == 0)
            violations.push_back("cell " + std::to_string(c + 1) + " has no machines");
    return violations;
}

}  // namespace cellform
