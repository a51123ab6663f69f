#include "cellform/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cellform {

namespace {

std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

int run_benchmark(const std::vector<ProblemRecord>& records, const std::string& base_dir,
                  const ImprovementParams& improvement, std::ostream& out) {
    int solved = 0, matched = 0, improved = 0, worse = 0;
    std::ostringstream timings;

    for (const auto& rec : records) {
        const auto path = std::filesystem::path(base_dir) / rec.path;
        out << std::left << std::setw(28) << rec.name << std::setw(8) << rec.size;

        std::ifstream file(path);
        if (!file) {
            out << "SKIPPED (dataset not found: " << rec.path << ")\n";
            continue;
        }
        SolveReport report;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            SolveParams params;
            params.improvement = improvement;
            report = solve(parse_incidence(file), params);
        } catch (const std::exception& e) {
            out << "ERROR (" << e.what() << ")\n";
            continue;
        }
        const auto t1 = std::chrono::steady_clock::now();
        ++solved;

        const double tau = 100.0 * report.breakdown.efficacy.value();
        out << "best " << std::setw(8) << (rec.reported_best ? pct(*rec.reported_best) : "-");
        out << "hybrid " << std::setw(8)
            << (rec.reported_hybrid ? pct(*rec.reported_hybrid) : "-");
        out << "tau " << std::setw(8) << pct(tau);
        if (rec.reported_hybrid) {
            const double delta = tau - *rec.reported_hybrid;
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%+.2f", delta);
            out << "delta " << std::setw(8) << buf;
            // Reported values carry two decimals; match at half an ulp of that.
            if (std::fabs(delta) < 0.005 + 1e-9) {
                out << "match";
                ++matched;
            } else if (delta > 0) {
                out << "improved";
                ++improved;
            } else {
                out << "mismatch";
                ++worse;
            }
        }
        out << '\n';

        timings << "# time " << rec.name << ' ' << std::fixed << std::setprecision(3)
                << std::chrono::duration<double>(t1 - t0).count() << "s\n";
    }

    out << "summary solved " << solved << " skipped "
        << static_cast<int>(records.size()) - solved << " matched " << matched << " improved "
        << improved << " worse " << worse << '\n';
    out << timings.str();
    return solved;
}

}  // namespace cellform
