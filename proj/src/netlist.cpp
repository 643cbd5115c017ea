#include "revcmp/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace revcmp {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

void require_name(const std::string& name) {
    if (!valid_name(name)) {
        throw Error(ErrorKind::Contract, "invalid terminal name '" + name + "'");
    }
}

}  // namespace

std::uint64_t pack_bits(const BitVector& bits) {
    if (bits.size() > 64) {
        throw Error(ErrorKind::TooLarge, std::to_string(bits.size()) + " bits do not fit a word");
    }
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) code |= std::uint64_t{bits[i] != 0} << i;
    return code;
}

BitVector unpack_bits(std::uint64_t code, std::size_t width) {
    BitVector bits(width);
    for (std::size_t i = 0; i < width && i < 64; ++i) bits[i] = (code >> i) & 1u;
    return bits;
}

Circuit::Circuit(std::string name, std::vector<InputRole> roles)
    : name_(std::move(name)), roles_(std::move(roles)) {
    if (roles_.empty()) throw Error(ErrorKind::Range, "a circuit needs at least one line");
    std::set<std::string_view> seen;
    for (const auto& role : roles_) {
        if (const auto* in = std::get_if<PrimaryInput>(&role)) {
            require_name(in->name);
            if (!seen.insert(in->name).second) {
                throw Error(ErrorKind::DuplicateName, "input '" + in->name + "' declared twice");
            }
        }
    }
}

std::vector<std::size_t> Circuit::primary_input_lines() const {
    std::vector<std::size_t> lines;
    for (std::size_t i = 0; i < roles_.size(); ++i) {
        if (std::holds_alternative<PrimaryInput>(roles_[i])) lines.push_back(i);
    }
    return lines;
}

std::vector<std::string> Circuit::primary_input_names() const {
    std::vector<std::string> names;
    for (const auto& role : roles_) {
        if (const auto* in = std::get_if<PrimaryInput>(&role)) names.push_back(in->name);
    }
    return names;
}

std::vector<const Terminal*> Circuit::primary_outputs() const {
    std::vector<const Terminal*> out;
    for (const auto& t : terminals_) {
        if (t.kind == TerminalKind::Primary) out.push_back(&t);
    }
    return out;
}

std::vector<const Terminal*> Circuit::auxiliary_outputs() const {
    std::vector<const Terminal*> out;
    for (const auto& t : terminals_) {
        if (t.kind == TerminalKind::Auxiliary) out.push_back(&t);
    }
    return out;
}

std::optional<std::size_t> Circuit::input_line(std::string_view name) const {
    for (std::size_t i = 0; i < roles_.size(); ++i) {
        const auto* in = std::get_if<PrimaryInput>(&roles_[i]);
        if (in && in->name == name) return i;
    }
    return std::nullopt;
}

const Terminal* Circuit::terminal(std::string_view name) const {
    for (const auto& t : terminals_) {
        if (t.name == name) return &t;
    }
    return nullptr;
}

bool Circuit::is_garbage(std::size_t line) const {
    return std::none_of(terminals_.begin(), terminals_.end(),
                        [line](const Terminal& t) { return t.line == line; });
}

std::size_t Circuit::add_line(InputRole role) {
    if (const auto* in = std::get_if<PrimaryInput>(&role)) {
        require_name(in->name);
        if (input_line(in->name)) {
            throw Error(ErrorKind::DuplicateName, "input '" + in->name + "' declared twice");
        }
    }
    roles_.push_back(std::move(role));
    return roles_.size() - 1;
}

Circuit& Circuit::add_gate(std::shared_ptr<const ReversibleGate> gate,
                           std::vector<std::size_t> lines) {
    if (!gate) throw Error(ErrorKind::Wiring, "null gate");
    if (lines.size() != gate->width()) {
        throw Error(ErrorKind::Wiring, gate->name() + " takes " + std::to_string(gate->width()) +
                                           " lines, got " + std::to_string(lines.size()));
    }
    std::set<std::size_t> distinct;
    for (std::size_t line : lines) {
        if (line >= roles_.size()) {
            throw Error(ErrorKind::Wiring, gate->name() + ": line " + std::to_string(line) +
                                               " out of range");
        }
        if (!distinct.insert(line).second) {
            throw Error(ErrorKind::Wiring, gate->name() + ": line " + std::to_string(line) +
                                               " bound twice");
        }
    }
    gates_.push_back({std::move(gate), std::move(lines)});
    return *this;
}

Circuit& Circuit::add_gate(std::string_view mnemonic, std::vector<std::size_t> lines) {
    return add_gate(shared_library_gate(mnemonic), std::move(lines));
}

Circuit& Circuit::designate_output(std::size_t line, std::string name) {
    return designate(line, std::move(name), TerminalKind::Primary);
}

Circuit& Circuit::designate_auxiliary(std::size_t line, std::string name) {
    return designate(line, std::move(name), TerminalKind::Auxiliary);
}

Circuit& Circuit::designate(std::size_t line, std::string name, TerminalKind kind) {
    if (line >= roles_.size()) {
        throw Error(ErrorKind::Wiring, "output line " + std::to_string(line) + " out of range");
    }
    require_name(name);
    if (!is_garbage(line)) {
        throw Error(ErrorKind::RoleConflict, "line " + std::to_string(line) +
                                                 " already has an output designation");
    }
    if (terminal(name) != nullptr) {
        throw Error(ErrorKind::DuplicateName, "output '" + name + "' declared twice");
    }
    terminals_.push_back({line, std::move(name), kind});
    return *this;
}

BitVector Circuit::load(const BitVector& primary_inputs) const {
    BitVector state(roles_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < roles_.size(); ++i) {
        if (const auto* c = std::get_if<ConstantInput>(&roles_[i])) {
            state[i] = c->value;
        } else {
            if (next >= primary_inputs.size()) {
                throw Error(ErrorKind::Assignment, "too few primary input values");
            }
            state[i] = primary_inputs[next++] != 0;
        }
    }
    if (next != primary_inputs.size()) {
        throw Error(ErrorKind::Assignment, "too many primary input values");
    }
    return state;
}

void Circuit::run(BitVector& state, std::size_t first, std::size_t last) const {
    last = std::min(last, gates_.size());
    for (std::size_t g = first; g < last; ++g) {
        const auto& inst = gates_[g];
        Code in = 0;
        for (std::size_t p = 0; p < inst.lines.size(); ++p) {
            in |= Code{state[inst.lines[p]] != 0} << p;
        }
        const Code out = inst.gate->perm()[in];
        for (std::size_t p = 0; p < inst.lines.size(); ++p) {
            state[inst.lines[p]] = (out >> p) & 1u;
        }
    }
}

Circuit new_circuit(std::string name, std::vector<InputRole> roles) {
    return Circuit(std::move(name), std::move(roles));
}

Circuit append_gate(Circuit circuit, std::string_view mnemonic, std::vector<std::size_t> lines) {
    circuit.add_gate(mnemonic, std::move(lines));
    return circuit;
}

SimulationResult simulate(const Circuit& circuit, const BitVector& primary_inputs) {
    SimulationResult result;
    result.lines = circuit.load(primary_inputs);
    circuit.run(result.lines);
    for (const auto& t : circuit.terminals()) {
        const bool v = result.lines[t.line] != 0;
        if (t.kind == TerminalKind::Primary) result.primary.push_back(v);
        result.named.emplace(t.name, v);
    }
    return result;
}

SimulationResult simulate(const Circuit& circuit, const std::map<std::string, bool>& assignment) {
    const auto names = circuit.primary_input_names();
    BitVector inputs;
    inputs.reserve(names.size());
    for (const auto& name : names) {
        auto it = assignment.find(name);
        if (it == assignment.end()) {
            throw Error(ErrorKind::Assignment, "no value for input '" + name + "'");
        }
        inputs.push_back(it->second);
    }
    if (assignment.size() != names.size()) {
        for (const auto& [name, value] : assignment) {
            if (!circuit.input_line(name)) {
                throw Error(ErrorKind::Assignment, "'" + name + "' is not a primary input");
            }
        }
    }
    return simulate(circuit, inputs);
}

std::vector<BitVector> truth_map(const Circuit& circuit) {
    const std::size_t width = circuit.primary_input_lines().size();
    if (width > kExhaustiveInputLimit) {
        throw Error(ErrorKind::TooLarge, std::to_string(width) + " primary inputs exceed the " +
                                             std::to_string(kExhaustiveInputLimit) +
                                             "-input exhaustive bound");
    }
    std::vector<BitVector> table(std::size_t{1} << width);
    for (std::uint64_t code = 0; code < table.size(); ++code) {
        table[code] = simulate(circuit, unpack_bits(code, width)).primary;
    }
    return table;
}

bool line_map_is_permutation(const Circuit& circuit) {
    const std::size_t lines = circuit.line_count();
    if (lines > 16) {
        throw Error(ErrorKind::TooLarge, std::to_string(lines) +
                                             " lines exceed the 16-line exhaustive bound");
    }
    const std::size_t states = std::size_t{1} << lines;
    std::vector<std::uint8_t> hit(states, 0);
    for (std::uint64_t code = 0; code < states; ++code) {
        BitVector state = unpack_bits(code, lines);
        circuit.run(state);
        const std::uint64_t image = pack_bits(state);
        if (hit[image]) return false;
        hit[image] = 1;
    }
    return true;
}

MetricsReport metrics(const Circuit& circuit) {
    MetricsReport report;
    report.line_count = circuit.line_count();
    report.gate_count = circuit.gates().size();
    for (const auto& role : circuit.input_roles()) {
        if (std::holds_alternative<ConstantInput>(role)) {
            ++report.constant_inputs;
        } else {
            ++report.primary_inputs;
        }
    }
    for (const auto& t : circuit.terminals()) {
        if (t.kind == TerminalKind::Primary) {
            ++report.primary_outputs;
        } else {
            ++report.auxiliary_outputs;
        }
    }
    report.garbage_outputs = report.line_count - report.primary_outputs - report.auxiliary_outputs;

    std::vector<std::size_t> level(circuit.line_count(), 0);
    for (const auto& inst : circuit.gates()) {
        std::size_t d = 0;
        for (std::size_t line : inst.lines) d = std::max(d, level[line]);
        ++d;
        for (std::size_t line : inst.lines) level[line] = d;
        report.depth = std::max(report.depth, d);
    }
    return report;
}

}  // namespace revcmp
