#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revcmp/gatelib.hpp"
#include "revcmp/oracles.hpp"

namespace revcmp {

/// What drives one gate port: a target variable or a constant bit.
struct PortSource {
    bool constant = false;
    /// Variable index when !constant, else the constant bit.
    unsigned value = 0;
    bool operator==(const PortSource&) const = default;
};

/// Which gate output feeds a target output, optionally through a NOT gate.
struct OutputTap {
    unsigned port = 0;
    bool inverted = false;
    bool operator==(const OutputTap&) const = default;
};

/// A single-gate wiring of a target function.
struct Realization {
    std::string gate;
    std::string target;
    std::vector<PortSource> ports;   // one per gate input port
    std::vector<OutputTap> outputs;  // one per target output
    unsigned constant_count = 0;
    unsigned not_count = 0;

    bool operator==(const Realization&) const = default;
};

/// True iff the wiring reproduces every row of the target's table.
bool realizes(const ReversibleGate& gate, const TargetFunction& target, const Realization& r);

/// Exhaustive search over port bindings (each variable on exactly one port,
/// constants on the rest) and output taps (distinct ports, optional NOT).
/// Returns the minimum by (constant_count, not_count), ties broken by the
/// lexicographically smallest binding (variable i encodes as i, constant 0
/// as arity, constant 1 as arity+1), then taps. std::nullopt means the space
/// is exhausted, including when the target has more inputs or outputs than
/// the gate has ports.
std::optional<Realization> search_realization(const ReversibleGate& gate,
                                              const TargetFunction& target);

struct Capability {
    std::string target;
    std::optional<Realization> realization;
};

/// search_realization for every known target, in target_names() order.
std::vector<Capability> enumerate_utilities(const ReversibleGate& gate);

/// e.g. "ports a<-a b<-b c<-cin d<-0; outputs sum=P carry=Q"
std::string describe(const ReversibleGate& gate, const TargetFunction& target,
                     const Realization& r);

/// Y/N capability table with the wiring found for each target.
std::string render_capability_matrix(const ReversibleGate& gate,
                                     const std::vector<Capability>& rows);

}  // namespace revcmp
