#include "oracle.hpp"

#include <stdexcept>

namespace cellform::oracle {

Rational recount_efficacy(const IncidenceMatrix& matrix, const CellConfiguration& config) {
    int ones = 0, in_block_ones = 0, in_block_zeros = 0;
    for (int i = 0; i < matrix.machines(); ++i) {
        for (int j = 0; j < matrix.parts(); ++j) {
            const bool one = matrix.at(i, j);
            const bool inside = config.machine_cell[i] == config.part_cell[j];
            ones += one;
            in_block_ones += one && inside;
            in_block_zeros += !one && inside;
        }
    }
    // (E - E_e) = ones inside blocks; (E + E_v) = ones + voids.
    return Rational(in_block_ones, ones + in_block_zeros);
}

BruteForceResult brute_force_optimum(const IncidenceMatrix& matrix, int k_min, int k_max) {
    const int m = matrix.machines();
    const int n = matrix.parts();
    if (m > 5 || n > 7)
        throw std::domain_error("instance exceeds enumeration budget (max 5 machines, 7 parts)");
    if (k_min < 1 || k_max > m || k_min > k_max)
        throw std::domain_error("invalid k range for brute force");

    BruteForceResult result;
    result.optimum = Rational(0, 1);
    bool any = false;

    // Restricted growth strings enumerate machine set-partitions once each.
    std::vector<int> rgs(m, 0);
    auto block_count = [&] {
        int k = 0;
        for (int v : rgs) k = std::max(k, v + 1);
        return k;
    };

    while (true) {
        const int k = block_count();
        if (k >= k_min && k <= k_max) {
            CellConfiguration config;
            config.cell_count = k;
            config.machine_cell = rgs;
            config.part_cell.assign(n, 0);

            // Mixed-radix counter over all k^n part assignments.
            while (true) {
                Rational tau = recount_efficacy(matrix, config);
                if (!any || tau > result.optimum) {
                    any = true;
                    result.optimum = tau;
                    result.maximizers.clear();
                    result.maximizers.push_back(config);
                } else if (tau == result.optimum) {
                    result.maximizers.push_back(config);
                }
                int pos = n - 1;
                while (pos >= 0 && config.part_cell[pos] == k - 1) config.part_cell[pos--] = 0;
                if (pos < 0) break;
                ++config.part_cell[pos];
            }
        }

        // Next restricted growth string.
        int pos = m - 1;
        while (pos > 0) {
            int cap = 0;
            for (int i = 0; i < pos; ++i) cap = std::max(cap, rgs[i]);
            if (rgs[pos] <= cap) break;
            --pos;
        }
        if (pos == 0) break;
        ++rgs[pos];
        for (int i = pos + 1; i < m; ++i) rgs[i] = 0;
    }
    if (!any) throw std::domain_error("no machine partition has a block count in the k range");
    return result;
}

}  // namespace cellform::oracle
