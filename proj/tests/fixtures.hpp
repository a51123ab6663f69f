#pragma once

#include <random>

#include "cellform/incidence.hpp"
#include "cellform/efficacy.hpp"

namespace fixtures {

// 3x5 introductory instance: m1 = {p2,p3,p5}, m2 = {p1,p4,p5}, m3 = {p3,p5}.
inline cellform::IncidenceMatrix small3x5() {
    return {3, 5,
            {0, 1, 1, 0, 1,
             1, 0, 0, 1, 1,
             0, 0, 1, 0, 1}};
}

// King & Nakornchai 5x7 instance.
inline cellform::IncidenceMatrix king5x7() {
    return {5, 7,
            {0, 1, 0, 1, 1, 1, 0,
             1, 0, 1, 0, 0, 0, 0,
             1, 0, 1, 0, 0, 1, 1,
             0, 1, 0, 1, 0, 1, 0,
             1, 0, 0, 0, 1, 0, 1}};
}

// Published solution of the 5x7 instance: cells {m1,m4} and {m2,m3,m5},
// part families {p2,p4,p5,p6} and {p1,p3,p7}.
inline cellform::CellConfiguration king5x7_solution() {
    return {2, {0, 1, 1, 0, 1}, {1, 0, 1, 0, 0, 0, 1}};
}

// Solution of the 3x5 instance: cells {m1,m3}+{p2,p3,p5} and {m2}+{p1,p4}.
inline cellform::CellConfiguration small3x5_solution() {
    return {2, {0, 1, 0}, {1, 0, 0, 1, 0}};
}

// Random valid incidence matrix (no all-zero row or column).
inline cellform::IncidenceMatrix random_matrix(std::mt19937& rng, int m, int n,
                                               double density = 0.45) {
    std::bernoulli_distribution bit(density);
    while (true) {
        std::vector<std::uint8_t> entries(static_cast<std::size_t>(m) * n);
        for (auto& e : entries) e = bit(rng) ? 1 : 0;
        try {
            return cellform::IncidenceMatrix(m, n, std::move(entries));
        } catch (const cellform::validation_error&) {
            // degenerate draw, retry
        }
    }
}

}  // namespace fixtures
