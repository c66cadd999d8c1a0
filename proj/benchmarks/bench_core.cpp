#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "gqss/adversary.hpp"
#include "gqss/grover.hpp"
#include "gqss/protocol.hpp"

using namespace gqss;

namespace {

// A quarter of the space, spread evenly, so oracle cost scales with a
// realistic marked fraction.
MarkedSet quarter_set(int qubits) {
    const std::uint64_t dim = std::uint64_t{1} << qubits;
    std::vector<std::uint64_t> indices;
    indices.reserve(dim / 4);
    for (std::uint64_t i = 0; i < dim; i += 4) {
        indices.push_back(i + 2);
    }
    return MarkedSet(std::move(indices));
}

void oracle(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const StateVector start = StateVector::uniform(qubits);
    const MarkedSet marked = quarter_set(qubits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_oracle(start, marked));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << qubits));
}

void diffusion(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const StateVector start = StateVector::uniform(qubits);
    const StateVector about = StateVector::uniform(qubits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_diffusion(start, about));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << qubits));
}

void full_iteration(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const StateVector start = StateVector::uniform(qubits);
    const StateVector about = StateVector::uniform(qubits);
    const MarkedSet marked = quarter_set(qubits);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grover_iterate(start, marked, about));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << qubits));
}

void born_sampling(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const StateVector decoded = collective_decode(
        apply_oracle(StateVector::uniform(qubits), quarter_set(qubits)),
        ProductState(std::vector<Letter>(static_cast<std::size_t>(qubits), Letter::Plus)));
    Rng rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_measurement(decoded, rng));
    }
}

void guess_family_report(benchmark::State& state) {
    Scenario sc;
    sc.qubits = 4;
    sc.initial = ProductState(std::vector<Letter>(4, Letter::Plus));
    sc.marked = MarkedSet({1, 3, 5, 7});
    sc.message_half_a = "a";
    sc.message_half_b = "b";
    sc.trials = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            exact_detection_probability(sc, GuessDiffusion{std::nullopt}));
    }
}

void forgery_family_report(benchmark::State& state) {
    Scenario sc;
    sc.qubits = 4;
    sc.initial = ProductState(std::vector<Letter>(4, Letter::Plus));
    sc.marked = MarkedSet({1, 3, 5, 7});
    sc.message_half_a = "a";
    sc.message_half_b = "b";
    sc.trials = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            exact_detection_probability(sc, InterceptResend{std::nullopt, std::nullopt}));
    }
}

} // namespace

BENCHMARK(oracle)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(diffusion)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(full_iteration)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(born_sampling)->Arg(10)->Arg(16)->Arg(20);
BENCHMARK(guess_family_report);
BENCHMARK(forgery_family_report);

BENCHMARK_MAIN();
