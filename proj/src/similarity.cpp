#include "cellform/similarity.hpp"

namespace cellform {

double sorenson_pair(std::span<const std::uint8_t> row_i, std::span<const std::uint8_t> row_j) {
    if (row_i.size() != row_j.size())
        throw validation_error("rows have different part counts");
    int a = 0, b = 0, c = 0;
    for (std::size_t p = 0; p < row_i.size(); ++p) {
        bool x = row_i[p] != 0;
        bool y = row_j[p] != 0;
        a += x && y;
        b += x && !y;
        c += !x && y;
    }
    if (a == 0) return 0.0;
    return 2.0 * a / (2.0 * a + b + c);
}

static SimilarityMatrix compute(const IncidenceMatrix& matrix, bool parallel) {
    const int m = matrix.machines();
    SimilarityMatrix sim;
    sim.machine_count = m;
    sim.values.assign(static_cast<std::size_t>(m) * m, 0.0);

#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < m; ++i) {
        sim.at(i, i) = 1.0;
        for (int j = i + 1; j < m; ++j) {
            double s = sorenson_pair(matrix.row(i), matrix.row(j));
            sim.at(i, j) = s;
            sim.at(j, i) = s;
        }
    }
    return sim;
}

SimilarityMatrix similarity_matrix(const IncidenceMatrix& matrix) {
    return compute(matrix, true);
}

SimilarityMatrix similarity_matrix_serial(const IncidenceMatrix& matrix) {
    return compute(matrix, false);
}

}  // namespace cellform
