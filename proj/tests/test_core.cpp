#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"

using namespace cellform;

TEST_CASE("ones counts the 1-entries") {
    CHECK(fixtures::king5x7().ones() == 16);
    CHECK(fixtures::small3x5().ones() == 8);
    CHECK(IncidenceMatrix(2, 2, {1, 1, 1, 1}).ones() == 4);
}

TEST_CASE("construction rejects degenerate matrices") {
    CHECK_THROWS_AS(IncidenceMatrix(1, 2, {1, 1}), validation_error);
    CHECK_THROWS_AS(IncidenceMatrix(2, 2, {1, 0, 0, 0}), validation_error);  // zero row
    CHECK_THROWS_AS(IncidenceMatrix(2, 2, {1, 0, 1, 0}), validation_error);  // zero column
    CHECK_THROWS_AS(IncidenceMatrix(2, 2, {1, 2, 1, 1}), validation_error);  // non-binary
}

TEST_CASE("efficacy of the published 5x7 solution") {
    auto b = efficacy(fixtures::king5x7(), fixtures::king5x7_solution());
    CHECK(b.total_ones == 16);
    CHECK(b.exceptional == 2);
    CHECK(b.voids == 3);
    CHECK(b.efficacy == Rational(14, 19));
}

TEST_CASE("efficacy of the 3x5 block-diagonal layout") {
    auto b = efficacy(fixtures::small3x5(), fixtures::small3x5_solution());
    CHECK(b.efficacy == Rational(7, 9));
}

TEST_CASE("perfect block diagonal scores 1") {
    // Two clean blocks: m1+{p1,p2}, m2+{p3,p4}.
    IncidenceMatrix matrix(2, 4, {1, 1, 0, 0, 0, 0, 1, 1});
    CellConfiguration config{2, {0, 1}, {0, 0, 1, 1}};
    auto b = efficacy(matrix, config);
    CHECK(b.exceptional == 0);
    CHECK(b.voids == 0);
    CHECK(b.efficacy == Rational(1, 1));
}

TEST_CASE("efficacy rejects dimension mismatch") {
    CellConfiguration config{2, {0, 1}, {0, 1}};
    CHECK_THROWS_AS(efficacy(fixtures::king5x7(), config), validation_error);
}

TEST_CASE("validate") {
    auto matrix = fixtures::king5x7();

    SUBCASE("published solution is valid") {
        CHECK(validate(matrix, fixtures::king5x7_solution()).empty());
    }
    SUBCASE("empty machine cell is flagged") {
        CellConfiguration config{2, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}};
        auto v = validate(matrix, config);
        REQUIRE(v.size() == 1);
        CHECK(v[0] == "cell 2 has no machines");
    }
    SUBCASE("out-of-range cell index is flagged") {
        auto config = fixtures::king5x7_solution();
        config.part_cell[3] = config.cell_count;  // k+1 in 1-based terms
        auto v = validate(matrix, config);
        REQUIRE(!v.empty());
        CHECK(v[0].find("out of range") != std::string::npos);
    }
}

namespace {

CellConfiguration random_config(std::mt19937& rng, int m, int n) {
    std::uniform_int_distribution<int> kd(1, m);
    const int k = kd(rng);
    CellConfiguration config;
    config.cell_count = k;
    config.machine_cell.resize(m);
    // Keep every cell inhabited: first k machines cover the cells.
    for (int i = 0; i < m; ++i) config.machine_cell[i] = i < k ? i : kd(rng) % k;
    std::shuffle(config.machine_cell.begin(), config.machine_cell.end(), rng);
    config.part_cell.resize(n);
    for (int j = 0; j < n; ++j) config.part_cell[j] = kd(rng) - 1;
    for (auto& c : config.part_cell) c %= k;
    return config;
}

}  // namespace

TEST_CASE("efficacy properties on random instances") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + trial % 4;
        const int n = 2 + (trial / 2) % 5;
        auto matrix = fixtures::random_matrix(rng, m, n);
        auto config = random_config(rng, m, n);
        REQUIRE(validate(matrix, config).empty());
        auto b = efficacy(matrix, config);

        // tau in [0,1]; 1 exactly when the blocks are clean.
        CHECK(b.efficacy >= Rational(0, 1));
        CHECK(b.efficacy <= Rational(1, 1));
        CHECK((b.efficacy == Rational(1, 1)) == (b.exceptional == 0 && b.voids == 0));

        // E_e plus the in-block ones is E.
        int in_block = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (matrix.at(i, j) && config.machine_cell[i] == config.part_cell[j]) ++in_block;
        CHECK(b.exceptional + in_block == b.total_ones);

        // Consistent relabeling of machines, parts and cells preserves the breakdown.
        std::vector<int> mp(m), pp(n), cp(config.cell_count);
        std::iota(mp.begin(), mp.end(), 0);
        std::iota(pp.begin(), pp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(mp.begin(), mp.end(), rng);
        std::shuffle(pp.begin(), pp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        std::vector<std::uint8_t> entries(static_cast<std::size_t>(m) * n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) entries[mp[i] * n + pp[j]] = matrix.at(i, j) ? 1 : 0;
        IncidenceMatrix permuted(m, n, std::move(entries));
        CellConfiguration relabeled{config.cell_count, std::vector<int>(m), std::vector<int>(n)};
        for (int i = 0; i < m; ++i) relabeled.machine_cell[mp[i]] = cp[config.machine_cell[i]];
        for (int j = 0; j < n; ++j) relabeled.part_cell[pp[j]] = cp[config.part_cell[j]];
        auto b2 = efficacy(permuted, relabeled);
        CHECK(b2.total_ones == b.total_ones);
        CHECK(b2.exceptional == b.exceptional);
        CHECK(b2.voids == b.voids);
        CHECK(b2.efficacy == b.efficacy);
    }
}

TEST_CASE("moving one part only changes its column's contributions") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 3 + trial % 3;
        const int n = 3 + trial % 4;
        auto matrix = fixtures::random_matrix(rng, m, n);
        auto config = random_config(rng, m, n);
        if (config.cell_count < 2) continue;
        auto before = efficacy(matrix, config);

        std::uniform_int_distribution<int> pd(0, n - 1);
        const int part = pd(rng);
        const int from = config.part_cell[part];
        const int to = (from + 1) % config.cell_count;

        auto column_delta = [&](int cell) {
            int ones_in = 0, zeros_in = 0;
            for (int i = 0; i < m; ++i) {
                if (config.machine_cell[i] != cell) continue;
                (matrix.at(i, part) ? ones_in : zeros_in) += 1;
            }
            return std::pair{ones_in, zeros_in};
        };
        auto [ones_from, zeros_from] = column_delta(from);
        auto [ones_to, zeros_to] = column_delta(to);

        config.part_cell[part] = to;
        auto after = efficacy(matrix, config);
        CHECK(after.exceptional - before.exceptional == ones_from - ones_to);
        CHECK(after.voids - before.voids == zeros_to - zeros_from);
    }
}

TEST_CASE("rational rendering and ordering") {
    CHECK(Rational(14, 19).percent() == "73.68");
    CHECK(Rational(1, 1).percent() == "100.00");
    CHECK(Rational(7, 9) > Rational(14, 19));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK_THROWS(Rational(1, 0));
}
