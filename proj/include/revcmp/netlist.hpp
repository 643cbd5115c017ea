#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revcmp/gatelib.hpp"

namespace revcmp {

/// One 0/1 entry per bit. Used for line states and for primary input/output
/// vectors, which can be wider than any machine word (decoders).
using BitVector = std::vector<std::uint8_t>;

/// Packs bits (entry 0 least significant); throws TooLarge beyond 64 bits.
std::uint64_t pack_bits(const BitVector& bits);
BitVector unpack_bits(std::uint64_t code, std::size_t width);

struct PrimaryInput {
    std::string name;
    bool operator==(const PrimaryInput&) const = default;
};

struct ConstantInput {
    bool value = false;
    bool operator==(const ConstantInput&) const = default;
};

using InputRole = std::variant<PrimaryInput, ConstantInput>;

enum class TerminalKind { Primary, Auxiliary };

/// A designated output terminal. Lines without a designation are garbage.
struct Terminal {
    std::size_t line = 0;
    std::string name;
    TerminalKind kind = TerminalKind::Primary;
    bool operator==(const Terminal&) const = default;
};

struct GateInstance {
    std::shared_ptr<const ReversibleGate> gate;
    /// Port i of the gate binds to lines[i].
    std::vector<std::size_t> lines;

    bool operator==(const GateInstance& other) const {
        return lines == other.lines && *gate == *other.gate;
    }
};

/// Cascade netlist: a fixed set of lines, each entering as a primary or
/// constant input, transformed by an ordered gate sequence, and leaving as a
/// primary output, an auxiliary output, or garbage.
///
/// Primary inputs are ordered by line index; designated outputs keep their
/// designation order. Those two orders define how input and output vectors are
/// packed everywhere else (simulate, truth_map, verification).
class Circuit {
public:
    /// Throws Range for zero lines, DuplicateName for repeated input names.
    Circuit(std::string name, std::vector<InputRole> roles);

    const std::string& name() const noexcept { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    std::size_t line_count() const noexcept { return roles_.size(); }
    const std::vector<InputRole>& input_roles() const noexcept { return roles_; }
    const std::vector<GateInstance>& gates() const noexcept { return gates_; }
    const std::vector<Terminal>& terminals() const noexcept { return terminals_; }

    std::vector<std::size_t> primary_input_lines() const;
    std::vector<std::string> primary_input_names() const;
    std::vector<const Terminal*> primary_outputs() const;
    std::vector<const Terminal*> auxiliary_outputs() const;
    std::optional<std::size_t> input_line(std::string_view name) const;
    const Terminal* terminal(std::string_view name) const;
    bool is_garbage(std::size_t line) const;

    /// Appends a line and returns its index. Throws DuplicateName for a
    /// repeated primary input name.
    std::size_t add_line(InputRole role);

    /// Throws Wiring on arity, range, or repeated-line violations.
    Circuit& add_gate(std::shared_ptr<const ReversibleGate> gate, std::vector<std::size_t> lines);
    Circuit& add_gate(std::string_view mnemonic, std::vector<std::size_t> lines);

    /// Throws RoleConflict if the line already carries a designation and
    /// DuplicateName if the terminal name is taken.
    Circuit& designate_output(std::size_t line, std::string name);
    Circuit& designate_auxiliary(std::size_t line, std::string name);

    /// Line state with constants loaded and primary inputs (in input order) placed.
    BitVector load(const BitVector& primary_inputs) const;

    /// Applies gates [first, last) to a full line state.
    void run(BitVector& state, std::size_t first = 0, std::size_t last = SIZE_MAX) const;

    /// Structural equality; the circuit name is not part of the structure.
    bool operator==(const Circuit& other) const {
        return roles_ == other.roles_ && gates_ == other.gates_ && terminals_ == other.terminals_;
    }

private:
    Circuit& designate(std::size_t line, std::string name, TerminalKind kind);

    std::string name_;
    std::vector<InputRole> roles_;
    std::vector<GateInstance> gates_;
    std::vector<Terminal> terminals_;
};

Circuit new_circuit(std::string name, std::vector<InputRole> roles);
[[nodiscard]] Circuit append_gate(Circuit circuit, std::string_view mnemonic,
                                  std::vector<std::size_t> lines);

struct SimulationResult {
    /// Final value of every line.
    BitVector lines;
    /// Primary outputs in designation order.
    BitVector primary;
    /// Every designated terminal (primary and auxiliary) by name.
    std::map<std::string, bool> named;
};

/// Throws Assignment unless the vector covers exactly the primary inputs.
SimulationResult simulate(const Circuit& circuit, const BitVector& primary_inputs);
SimulationResult simulate(const Circuit& circuit, const std::map<std::string, bool>& assignment);

inline constexpr std::size_t kExhaustiveInputLimit = 24;

/// Primary-output vector for every primary-input code, indexed by code.
/// Throws TooLarge above kExhaustiveInputLimit inputs.
std::vector<BitVector> truth_map(const Circuit& circuit);

/// True iff the map on full line states is a bijection; exhaustive, so
/// limited to 16 lines (TooLarge otherwise).
bool line_map_is_permutation(const Circuit& circuit);

struct MetricsReport {
    std::size_t gate_count = 0;
    std::size_t garbage_outputs = 0;
    std::size_t constant_inputs = 0;
    std::size_t primary_inputs = 0;
    std::size_t primary_outputs = 0;
    std::size_t auxiliary_outputs = 0;
    std::size_t line_count = 0;
    /// Longest chain of gates linked through shared lines.
    std::size_t depth = 0;

    bool operator==(const MetricsReport&) const = default;
};

MetricsReport metrics(const Circuit& circuit);

}  // namespace revcmp
