#include "cellform/assignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellform {

namespace {

// N_cj over all cells for one part.
std::vector<int> cell_hits(const IncidenceMatrix& matrix, const std::vector<int>& machine_cell,
                           int cell_count, int part) {
    std::vector<int> hits(cell_count, 0);
    for (int i = 0; i < matrix.machines(); ++i)
        if (matrix.at(i, part)) ++hits[machine_cell[i]];
    return hits;
}

std::vector<int> cell_sizes(const std::vector<int>& machine_cell, int cell_count) {
    std::vector<int> sizes(cell_count, 0);
    for (int c : machine_cell) ++sizes[c];
    return sizes;
}

int voids_of_cell(const IncidenceMatrix& matrix, const CellConfiguration& config, int cell) {
    int v = 0;
    for (int i = 0; i < matrix.machines(); ++i) {
        if (config.machine_cell[i] != cell) continue;
        for (int j = 0; j < matrix.parts(); ++j)
            if (config.part_cell[j] == cell && !matrix.at(i, j)) ++v;
    }
    return v;
}

}  // namespace

CellConfiguration initial_assignment(const IncidenceMatrix& matrix,
                                     const std::vector<std::vector<int>>& machine_cells) {
    const int k = static_cast<int>(machine_cells.size());
    CellConfiguration config;
    config.cell_count = k;
    config.machine_cell.assign(matrix.machines(), -1);
    for (int c = 0; c < k; ++c)
        for (int machine : machine_cells[c]) config.machine_cell[machine] = c;
    for (int i = 0; i < matrix.machines(); ++i)
        if (config.machine_cell[i] < 0)
            throw validation_error("machine cells do not cover machine " + std::to_string(i + 1));

    const auto sizes = cell_sizes(config.machine_cell, k);
    config.part_cell.assign(matrix.parts(), 0);
    for (int j = 0; j < matrix.parts(); ++j) {
        const auto hits = cell_hits(matrix, config.machine_cell, k, j);
        int best = 0;
        for (int c = 1; c < k; ++c) {
            if (hits[c] > hits[best]) {
                best = c;
            } else if (hits[c] == hits[best]) {
                // Tie: larger percentage of the cell's machines visited.
                if (hits[c] * static_cast<long>(sizes[best]) >
                    hits[best] * static_cast<long>(sizes[c]))
                    best = c;
            }
        }
        config.part_cell[j] = best;
    }
    return config;
}

int unused_machines(const IncidenceMatrix& matrix, const CellConfiguration& config, int cell,
                    int part) {
    if (cell < 0 || cell >= config.cell_count || part < 0 || part >= matrix.parts())
        throw std::domain_error("cell or part index out of range");
    int unused = 0;
    for (int i = 0; i < matrix.machines(); ++i)
        if (config.machine_cell[i] == cell && !matrix.at(i, part)) ++unused;
    return unused;
}

double membership_index(const IncidenceMatrix& matrix, const CellConfiguration& config, int cell,
                        int part) {
    if (cell < 0 || cell >= config.cell_count || part < 0 || part >= matrix.parts())
        throw std::domain_error("cell or part index out of range");
    int hits = 0, size = 0;
    for (int i = 0; i < matrix.machines(); ++i) {
        if (config.machine_cell[i] != cell) continue;
        ++size;
        if (matrix.at(i, part)) ++hits;
    }
    if (hits == 0) return 0.0;
    int needed = 0;
    for (int i = 0; i < matrix.machines(); ++i)
        if (matrix.at(i, part)) ++needed;
    const int voids = voids_of_cell(matrix, config, cell);
    return (static_cast<double>(hits) / size) * (static_cast<double>(hits) / needed) /
           std::max(voids, 1);
}

std::pair<CellConfiguration, ImprovementTrace> improve(const IncidenceMatrix& matrix,
                                                       const CellConfiguration& start,
                                                       const ImprovementParams& params) {
    if (params.max_iterations < 1) throw std::domain_error("max_iterations must be positive");
    if (params.patience < 1 || params.patience > params.max_iterations)
        throw std::domain_error("patience must be in [1, max_iterations]");

    CellConfiguration config = start;
    Rational tau = efficacy(matrix, config).efficacy;
    ImprovementTrace trace;

    const int n = matrix.parts();
    int iteration = 0;
    int non_improving = 0;
    bool stop = false;

    while (!stop) {
        // Rank parts by unused machines in their current cell, descending;
        // ties by lowest part index.
        std::vector<int> order(n);
        for (int j = 0; j < n; ++j) order[j] = j;
        std::vector<int> slack(n);
        for (int j = 0; j < n; ++j) slack[j] = unused_machines(matrix, config, config.part_cell[j], j);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return slack[a] > slack[b]; });

        bool pass_accepted = false;
        for (int part : order) {
            if (iteration >= params.max_iterations) {
                stop = true;
                break;
            }
            ++iteration;

            // Candidate cells in descending membership-index order.
            const int home = config.part_cell[part];
            std::vector<std::pair<double, int>> candidates;
            for (int c = 0; c < config.cell_count; ++c)
                if (c != home) candidates.push_back({membership_index(matrix, config, c, part), c});
            std::stable_sort(candidates.begin(), candidates.end(),
                             [](const auto& a, const auto& b) { return a.first > b.first; });

            bool accepted = false;
            for (const auto& [index, c] : candidates) {
                config.part_cell[part] = c;
                Rational candidate_tau = efficacy(matrix, config).efficacy;
                if (candidate_tau > tau) {
                    tau = candidate_tau;
                    accepted = true;
                    break;
                }
                config.part_cell[part] = home;
            }

            trace.push_back({iteration, tau, accepted});
            if (accepted) {
                non_improving = 0;
                pass_accepted = true;
            } else if (++non_improving >= params.patience) {
                stop = true;
                break;
            }
        }
        if (!pass_accepted) stop = true;
    }
    return {std::move(config), std::move(trace)};
}

}  // namespace cellform
