#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "revcmp/netlist.hpp"

namespace revcmp {

struct Exhaustive {};

struct Random {
    std::size_t count = 0;
    std::uint64_t seed = 1;
};

using Strategy = std::variant<Exhaustive, Random>;

/// Expected primary-output vector for a primary-input vector, both packed in
/// the circuit's input and output orders. Must be safe to call concurrently.
using Reference = std::function<BitVector(const BitVector&)>;

struct Counterexample {
    std::size_t trial = 0;
    BitVector input;
    BitVector expected;
    BitVector actual;
    /// True when the outputs matched but the output invariant did not hold.
    bool invariant_only = false;
};

struct VerificationReport {
    std::size_t trials = 0;
    std::size_t mismatches = 0;
    std::size_t invariant_violations = 0;
    /// The failing trial with the lowest index.
    std::optional<Counterexample> counterexample;

    bool passed() const noexcept { return mismatches == 0 && invariant_violations == 0; }
};

/// Combines reports from disjoint trial ranges; associative.
VerificationReport merge(VerificationReport a, const VerificationReport& b);

struct VerifyOptions {
    /// Run before the random trials of a Random strategy.
    std::vector<BitVector> edge_vectors;
    /// Checked on every produced output vector when set (e.g. one-hot).
    std::function<bool(const BitVector&)> output_invariant;
    /// 0 picks hardware concurrency.
    unsigned threads = 0;
};

/// Exhaustive covers every input code (TooLarge above kExhaustiveInputLimit
/// inputs). Random runs the edge vectors then `count` uniformly drawn inputs
/// from a mt19937_64 seeded with `seed`. Failures are report content.
VerificationReport verify_against(const Circuit& circuit, const Reference& reference,
                                  const Strategy& strategy, const VerifyOptions& options = {});

}  // namespace revcmp
