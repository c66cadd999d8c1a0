#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gqss/grover.hpp"
#include "helpers.hpp"

using namespace gqss;
using Catch::Approx;

TEST_CASE("search specs validate their shape", "[grover]") {
    REQUIRE_THROWS_AS(SearchSpec(12, 1), ConfigError);
    REQUIRE_THROWS_AS(SearchSpec(8, 0), ConfigError);
    REQUIRE_THROWS_AS(SearchSpec(8, 9), ConfigError);
    REQUIRE_THROWS_AS(SearchSpec(1, 1), ConfigError);
    REQUIRE(SearchSpec(1024, 7).qubits() == 10);
    REQUIRE(SearchSpec(8, 2).marked_ratio() == Approx(0.25));
}

TEST_CASE("one round from uniform has the closed-form amplitudes", "[grover]") {
    SECTION("eight states, one marked") {
        const auto [unmarked, marked] = one_shot_amplitudes(SearchSpec(8, 1));
        REQUIRE(unmarked == Approx(1.0 / (4.0 * std::sqrt(2.0))).margin(1e-15));
        REQUIRE(marked == Approx(5.0 / (4.0 * std::sqrt(2.0))).margin(1e-15));
    }
    SECTION("a quarter marked leaves nothing outside the marked set") {
        const auto [unmarked, marked] = one_shot_amplitudes(SearchSpec(16, 4));
        REQUIRE(unmarked == 0.0);
        REQUIRE(marked == Approx(2.0 / std::sqrt(16.0)));
    }
    SECTION("sixteen states, one marked") {
        const auto [unmarked, marked] = one_shot_amplitudes(SearchSpec(16, 1));
        REQUIRE(marked == Approx(11.0 / 16.0));
        REQUIRE(unmarked == Approx(12.0 / 64.0));
    }
}

TEST_CASE("one-round success and failure track the cubic exactly", "[grover]") {
    REQUIRE(success_from_ratio(0.25) == 1.0);
    REQUIRE(success_from_ratio(1.0) == 1.0);
    REQUIRE(success_from_ratio(0.5) == Approx(0.5));
    REQUIRE(success_one_iteration(SearchSpec(8, 1)) == Approx(25.0 / 32.0).margin(1e-15));
    REQUIRE(failure_one_iteration(SearchSpec(8, 1)) == Approx(7.0 / 32.0).margin(1e-15));
    REQUIRE(failure_one_iteration(SearchSpec(16, 4)) == 0.0);
    REQUIRE(failure_one_iteration(SearchSpec(8, 8)) == 0.0);

    SECTION("success plus failure is one for every marked count") {
        for (std::uint64_t n : {4u, 8u, 32u, 256u, 1024u}) {
            for (std::uint64_t m = 1; m <= n; ++m) {
                const SearchSpec spec(n, m);
                REQUIRE(std::abs(success_one_iteration(spec) + failure_one_iteration(spec) -
                                 1.0) <= 1e-12);
            }
        }
    }
    SECTION("certainty happens only at a quarter marked or everything marked") {
        const std::uint64_t n = 1024;
        for (std::uint64_t m = 1; m <= n; ++m) {
            const double success = success_one_iteration(SearchSpec(n, m));
            if (m == n / 4 || m == n) {
                REQUIRE(std::abs(success - 1.0) <= 1e-12);
            } else {
                REQUIRE(success < 1.0 - 1e-12);
            }
        }
    }
    SECTION("failure matches its own closed form") {
        for (std::uint64_t m = 1; m <= 64; ++m) {
            const double n = 64.0;
            const double expected =
                (n - static_cast<double>(m)) * std::pow(n - 4.0 * static_cast<double>(m), 2) /
                std::pow(n, 3);
            REQUIRE(failure_one_iteration(SearchSpec(64, m)) == Approx(expected).margin(1e-12));
        }
    }
}

TEST_CASE("the amplitude recursion reproduces the known walkthrough", "[grover]") {
    SECTION("eight states, one marked, three rounds") {
        const IterationTrace trace = closed_form_trace(SearchSpec(8, 1), 3);
        REQUIRE(trace.size() == 4);
        REQUIRE(trace[0].marked_amplitude == Approx(1.0 / (2.0 * std::sqrt(2.0))).margin(1e-12));
        REQUIRE(trace[1].marked_amplitude == Approx(5.0 / (4.0 * std::sqrt(2.0))).margin(1e-12));
        REQUIRE(trace[2].marked_amplitude == Approx(11.0 / (8.0 * std::sqrt(2.0))).margin(1e-12));
        REQUIRE(trace[2].success == Approx(121.0 / 128.0).margin(1e-12));
        REQUIRE(trace[3].success == Approx(169.0 / 512.0).margin(1e-12));
    }
    SECTION("four states, one marked, certainty after one round") {
        const IterationTrace trace = closed_form_trace(SearchSpec(4, 1), 1);
        REQUIRE(trace[1].success == Approx(1.0).margin(1e-12));
        REQUIRE(std::abs(trace[1].unmarked_amplitude) <= 1e-12);
    }
    SECTION("row zero is the uniform start and rows stay normalized") {
        const SearchSpec spec(64, 5);
        const IterationTrace trace = closed_form_trace(spec, 6);
        REQUIRE(trace[0].unmarked_amplitude == Approx(0.125));
        REQUIRE(trace[0].marked_amplitude == Approx(0.125));
        for (const IterationRow& row : trace) {
            const double total = 59.0 * row.unmarked_amplitude * row.unmarked_amplitude +
                                 5.0 * row.marked_amplitude * row.marked_amplitude;
            REQUIRE(total == Approx(1.0).margin(1e-12));
            REQUIRE(row.success ==
                    Approx(5.0 * row.marked_amplitude * row.marked_amplitude).margin(1e-15));
        }
    }
    REQUIRE_THROWS_AS(closed_form_trace(SearchSpec(8, 1), -1), ConfigError);
}

TEST_CASE("the recursion agrees with explicit simulation", "[grover]") {
    SECTION("every deviation stays below 1e-12 across sizes and placements") {
        Rng rng(61);
        for (int qubits = 2; qubits <= 8; ++qubits) {
            const std::uint64_t n = std::uint64_t{1} << qubits;
            for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{2}, n / 4, n / 2}) {
                if (m < 1 || m > n) continue;
                const MarkedSet placement = test::random_marked(qubits, m, rng);
                REQUIRE(brute_force_check(SearchSpec(n, m), 5, placement) <= 1e-12);
            }
        }
    }
    SECTION("zero rounds trivially agree") {
        REQUIRE(brute_force_check(SearchSpec(16, 3), 0, MarkedSet({1, 7, 9})) <= 1e-15);
    }
    SECTION("the placement size must match the spec") {
        REQUIRE_THROWS_AS(brute_force_check(SearchSpec(16, 2), 1, MarkedSet({1})), ConfigError);
        REQUIRE_THROWS_AS(brute_force_check(SearchSpec(4, 1), 1, MarkedSet({9})), ConfigError);
    }
}

TEST_CASE("success curves pass through the certainty point", "[grover]") {
    const std::vector<SearchSpec> specs = {SearchSpec(16, 4), SearchSpec(16, 8),
                                           SearchSpec(16, 16), SearchSpec(8, 1)};
    const auto curve = success_curve(specs);
    REQUIRE(curve.size() == 4);
    REQUIRE(curve[0].first == Approx(0.25));
    REQUIRE(curve[0].second == Approx(1.0).margin(1e-12));
    REQUIRE(curve[1].first == Approx(0.5));
    REQUIRE(curve[1].second == Approx(0.5).margin(1e-12));
    REQUIRE(curve[2].second == Approx(1.0).margin(1e-12));
    REQUIRE(curve[3].second == Approx(25.0 / 32.0).margin(1e-12));
}

TEST_CASE("the iteration table lists single-target success per register size", "[grover]") {
    const auto cells = iteration_table({2, 3, 4, 5}, 4);
    REQUIRE(cells.size() == 16);

    const auto cell = [&](int qubits, int iteration) {
        for (const IterationCell& c : cells) {
            if (c.qubit_count == qubits && c.iteration == iteration) return c.success;
        }
        FAIL("cell not found");
        return 0.0;
    };

    REQUIRE(cell(2, 1) == Approx(1.0).margin(1e-12));
    REQUIRE(cell(3, 1) == Approx(25.0 / 32.0).margin(1e-12));
    REQUIRE(cell(3, 2) == Approx(121.0 / 128.0).margin(1e-12));
    REQUIRE(cell(3, 3) == Approx(169.0 / 512.0).margin(1e-12));
    REQUIRE(cell(4, 1) == Approx(121.0 / 256.0).margin(1e-12));
    REQUIRE(cell(4, 2) == Approx(3721.0 / 4096.0).margin(1e-12));
    REQUIRE(cell(4, 3) == Approx(63001.0 / 65536.0).margin(1e-12));
    REQUIRE(cell(5, 1) == Approx(529.0 / 2048.0).margin(1e-12));
    REQUIRE(cell(5, 2) == Approx(78961.0 / 131072.0).margin(1e-12));
    REQUIRE(cell(5, 3) == Approx(7524049.0 / 8388608.0).margin(1e-12));
    REQUIRE(cell(5, 4) == Approx(536431921.0 / 536870912.0).margin(1e-12));

    SECTION("each cell is cross-checked against simulation") {
        for (const IterationCell& c : cells) {
            const std::uint64_t n = std::uint64_t{1} << c.qubit_count;
            const StateVector about = StateVector::uniform(c.qubit_count);
            StateVector state = about;
            const MarkedSet target({n - 1});
            for (int k = 0; k < c.iteration; ++k) {
                state = grover_iterate(state, target, about);
            }
            REQUIRE(std::norm(state[n - 1]) == Approx(c.success).margin(1e-12));
        }
    }
    REQUIRE_THROWS_AS(iteration_table({2}, 0), ConfigError);
    REQUIRE_THROWS_AS(iteration_table({0}, 2), ConfigError);
}
