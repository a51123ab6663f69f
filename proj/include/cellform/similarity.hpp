#pragma once

#include <span>
#include <vector>

#include "cellform/incidence.hpp"

namespace cellform {

// Symmetric machine-machine similarity matrix with unit diagonal.
struct SimilarityMatrix {
    int machine_count = 0;
    std::vector<double> values;  // row-major m x m

    double at(int i, int j) const { return values[i * machine_count + j]; }
    double& at(int i, int j) { return values[i * machine_count + j]; }
};

// Sorenson (Dice) coefficient 2a/(2a+b+c) between two binary routing rows:
// a = parts on both machines, b = parts on the first only, c = on the
// second only. 0 when the part sets are disjoint.
double sorenson_pair(std::span<const std::uint8_t> row_i, std::span<const std::uint8_t> row_j);

// All m(m-1)/2 machine pairs. The OpenMP version parallelizes over rows;
// the serial version is the reference the tests compare against.
SimilarityMatrix similarity_matrix(const IncidenceMatrix& matrix);
SimilarityMatrix similarity_matrix_serial(const IncidenceMatrix& matrix);

}  // namespace cellform
