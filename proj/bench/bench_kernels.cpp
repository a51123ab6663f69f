// Compares the OpenMP kernels against their serial references and reports
// speedups. The two paths must agree exactly; any mismatch aborts.

#include <chrono>
#include <cstdio>
#include <random>

#include "cellform/solver.hpp"

using namespace cellform;

namespace {

IncidenceMatrix random_matrix(std::mt19937& rng, int m, int n, double density) {
    std::bernoulli_distribution bit(density);
    while (true) {
        std::vector<std::uint8_t> entries(static_cast<std::size_t>(m) * n);
        for (auto& e : entries) e = bit(rng) ? 1 : 0;
        try {
            return IncidenceMatrix(m, n, std::move(entries));
        } catch (const validation_error&) {
        }
    }
}

template <typename F>
double time_best_of(int repeats, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count());
    }
    return best;
}

}  // namespace

int main() {
    std::mt19937 rng(12345);

    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)", "speedup");

    for (auto [m, n] : {std::pair{16, 30}, {64, 200}, {256, 800}}) {
        auto matrix = random_matrix(rng, m, n, 0.3);
        SimilarityMatrix ser, par;
        const double t_ser = time_best_of(5, [&] { ser = similarity_matrix_serial(matrix); });
        const double t_par = time_best_of(5, [&] { par = similarity_matrix(matrix); });
        if (ser.values != par.values) {
            std::fprintf(stderr, "similarity kernels disagree on %dx%d\n", m, n);
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof(label), "similarity %dx%d", m, n);
        std::printf("%-28s %12.3f %12.3f %8.2fx\n", label, t_ser, t_par, t_ser / t_par);
    }

    for (auto [m, n] : {std::pair{16, 30}, {24, 40}, {32, 60}}) {
        auto matrix = random_matrix(rng, m, n, 0.3);
        SolveReport ser, par;
        const double t_ser = time_best_of(3, [&] { ser = solve_serial(matrix); });
        const double t_par = time_best_of(3, [&] { par = solve(matrix); });
        if (ser.breakdown.efficacy != par.breakdown.efficacy ||
            ser.best.part_cell != par.best.part_cell) {
            std::fprintf(stderr, "solve paths disagree on %dx%d\n", m, n);
            return 1;
        }
        char label[64];
        std::snprintf(label, sizeof(label), "solve %dx%d", m, n);
        std::printf("%-28s %12.3f %12.3f %8.2fx\n", label, t_ser, t_par, t_ser / t_par);
    }
    return 0;
}
