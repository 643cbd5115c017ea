#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revcmp/netlist.hpp"

namespace revcmp {

// Irreversible reference semantics used as ground truth.

struct CompareResult {
    bool lt = false;
    bool eq = false;
    bool gt = false;
    bool operator==(const CompareResult&) const = default;
};

/// Unsigned comparison of two n-bit values, 1 <= n <= 64.
CompareResult compare_oracle(std::uint64_t a, std::uint64_t b, unsigned n);

/// One-hot vector of length 2^n with bit x set, 1 <= n <= 24.
BitVector decode_oracle(std::uint64_t x, unsigned n);

struct TargetFunction {
    std::string name;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    /// Output code per input code; first listed input/output is bit 0.
    std::vector<std::uint32_t> table;

    unsigned arity() const noexcept { return static_cast<unsigned>(inputs.size()); }
    unsigned output_arity() const noexcept { return static_cast<unsigned>(outputs.size()); }
};

/// AND, NAND, OR, NOR, XOR, XNOR, HALF_ADDER, HALF_SUB, FULL_ADDER, FULL_SUB
/// or COMPARE1 (outputs LT, EQ, GT). Throws UnknownTarget otherwise.
TargetFunction target_function(std::string_view name);

std::span<const std::string_view> target_names();

}  // namespace revcmp
