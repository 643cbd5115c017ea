#include "revcmp/verify.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace revcmp {

namespace {

// Runs trials [first, last); `input_at` produces the input vector of a trial.
template <typename InputAt>
VerificationReport run_range(const Circuit& circuit, const Reference& reference,
                             const VerifyOptions& options, std::size_t first, std::size_t last,
                             const InputAt& input_at) {
    VerificationReport report;
    for (std::size_t trial = first; trial < last; ++trial) {
        BitVector input = input_at(trial);
        BitVector actual = simulate(circuit, input).primary;
        BitVector expected = reference(input);
        const bool match = actual == expected;
        const bool holds = !options.output_invariant || options.output_invariant(actual);
        ++report.trials;
        if (!match) ++report.mismatches;
        if (!holds) ++report.invariant_violations;
        if ((!match || !holds) && !report.counterexample) {
            report.counterexample =
                Counterexample{trial, std::move(input), std::move(expected), std::move(actual),
                               match};
        }
    }
    return report;
}

template <typename InputAt>
VerificationReport run_parallel(const Circuit& circuit, const Reference& reference,
                                const VerifyOptions& options, std::size_t total,
                                const InputAt& input_at) {
    unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, 16);
    if (total < 4096) workers = 1;
    std::vector<VerificationReport> parts(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t first = std::min(total, w * chunk);
            const std::size_t last = std::min(total, first + chunk);
            pool.emplace_back([&, w, first, last] {
                parts[w] = run_range(circuit, reference, options, first, last, input_at);
            });
        }
    }
    VerificationReport report;
    for (const auto& part : parts) report = merge(std::move(report), part);
    return report;
}

}  // namespace

VerificationReport merge(VerificationReport a, const VerificationReport& b) {
    a.trials += b.trials;
    a.mismatches += b.mismatches;
    a.invariant_violations += b.invariant_violations;
    if (b.counterexample && (!a.counterexample || b.counterexample->trial < a.counterexample->trial)) {
        a.counterexample = b.counterexample;
    }
    return a;
}

VerificationReport verify_against(const Circuit& circuit, const Reference& reference,
                                  const Strategy& strategy, const VerifyOptions& options) {
    const std::size_t width = circuit.primary_input_lines().size();
    if (std::holds_alternative<Exhaustive>(strategy)) {
        if (width > kExhaustiveInputLimit) {
            throw Error(ErrorKind::TooLarge, std::to_string(width) +
                                                 " primary inputs exceed the exhaustive bound");
        }
        return run_parallel(circuit, reference, options, std::size_t{1} << width,
                            [width](std::size_t code) { return unpack_bits(code, width); });
    }

    const auto& random = std::get<Random>(strategy);
    std::vector<BitVector> inputs;
    inputs.reserve(options.edge_vectors.size() + random.count);
    for (const auto& edge : options.edge_vectors) {
        if (edge.size() != width) {
            throw Error(ErrorKind::Assignment, "edge vector width " + std::to_string(edge.size()) +
                                                   " does not match " + std::to_string(width) +
                                                   " primary inputs");
        }
        inputs.push_back(edge);
    }
    std::mt19937_64 rng(random.seed);
    for (std::size_t t = 0; t < random.count; ++t) {
        BitVector v(width);
        for (std::size_t i = 0; i < width; i += 64) {
            const std::uint64_t word = rng();
            for (std::size_t k = 0; k < 64 && i + k < width; ++k) v[i + k] = (word >> k) & 1u;
        }
        inputs.push_back(std::move(v));
    }
    return run_parallel(circuit, reference, options, inputs.size(),
                        [&inputs](std::size_t trial) { return inputs[trial]; });
}

}  // namespace revcmp
