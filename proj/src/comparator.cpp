#include "revcmp/comparator.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "revcmp/oracles.hpp"

namespace revcmp {

namespace {

struct Triple {
    std::size_t lt, eq, gt;
};

struct Carry {
    std::size_t gt, eq;
};

Triple place_in_cell(Circuit& c, std::size_t a, std::size_t b, std::size_t k0, std::size_t k1) {
    c.add_gate("INVENTIVE", {a, b, k0, k1});
    c.add_gate("NOT", {a});   // P = a^b  -> XNOR
    c.add_gate("NOT", {k1});  // S = ~(a&~b) -> a&~b
    return {b, a, k1};
}

Carry place_chain_cell(Circuit& c, std::size_t a, std::size_t b, std::size_t k0, Carry in,
                       std::size_t k1) {
    c.add_gate("TR", {a, b, k0});            // b <- a^b, k0 <- a&~b
    c.add_gate("TG", {in.eq, k0, in.gt});    // gt <- eq & a&~b ^ gt
    c.add_gate("NOT", {b});                  // b <- XNOR(a, b)
    c.add_gate("TG", {in.eq, b, k1});        // k1 <- eq & XNOR
    return {in.gt, k1};
}

Triple place_final_cell(Circuit& c, Carry in, std::size_t k) {
    c.add_gate("FG", {in.eq, k});
    c.add_gate("FG", {in.gt, k});
    c.add_gate("NOT", {k});
    return {k, in.eq, in.gt};
}

void designate(Circuit& c, const Triple& t) {
    c.designate_output(t.lt, "LT");
    c.designate_output(t.eq, "EQ");
    c.designate_output(t.gt, "GT");
}

std::string bit_name(char bus, unsigned i) { return std::string(1, bus) + std::to_string(i); }

}  // namespace

CellTargets cell_targets(CellKind kind) {
    switch (kind) {
    case CellKind::In: return {3, 2, 1};
    case CellKind::Chain: return {4, 2, 4};
    case CellKind::Final: return {3, 1, 0};
    }
    return {0, 0, 0};
}

Circuit build_in_cell() {
    Circuit c("in_cell", {PrimaryInput{"a"}, PrimaryInput{"b"}, ConstantInput{false},
                          ConstantInput{true}});
    designate(c, place_in_cell(c, 0, 1, 2, 3));
    return c;
}

Circuit build_chain_cell() {
    Circuit c("chain_cell", {PrimaryInput{"a"}, PrimaryInput{"b"}, ConstantInput{false},
                             PrimaryInput{"Q_in"}, PrimaryInput{"P_in"}, ConstantInput{false}});
    const Carry out = place_chain_cell(c, 0, 1, 2, {4, 3}, 5);
    c.designate_output(out.gt, "P_out");
    c.designate_output(out.eq, "Q_out");
    return c;
}

Circuit build_final_cell() {
    Circuit c("final_cell", {PrimaryInput{"P"}, PrimaryInput{"Q"}, ConstantInput{false}});
    designate(c, place_final_cell(c, {0, 1}, 2));
    return c;
}

ComparatorLayout assemble_comparator(unsigned n) {
    if (n == 0 || n > 64) throw Error(ErrorKind::Range, "comparator width must be 1..64");
    std::vector<InputRole> roles;
    for (unsigned i = 0; i < n; ++i) roles.push_back(PrimaryInput{bit_name('a', i)});
    for (unsigned i = 0; i < n; ++i) roles.push_back(PrimaryInput{bit_name('b', i)});
    ComparatorLayout layout{Circuit("comparator" + std::to_string(n), std::move(roles)), {}};
    Circuit& c = layout.circuit;
    auto a = [](unsigned i) { return std::size_t{i}; };
    auto b = [n](unsigned i) { return std::size_t{n} + i; };

    const std::size_t k0 = c.add_line(ConstantInput{false});
    const std::size_t k1 = c.add_line(ConstantInput{true});
    const Triple msb = place_in_cell(c, a(n - 1), b(n - 1), k0, k1);
    if (n == 1) {
        designate(c, msb);
        return layout;
    }
    Carry carry{msb.gt, msb.eq};
    layout.boundaries.push_back({c.gates().size(), carry.gt, carry.eq});
    for (unsigned j = n - 1; j-- > 0;) {
        const std::size_t z0 = c.add_line(ConstantInput{false});
        const std::size_t z1 = c.add_line(ConstantInput{false});
        carry = place_chain_cell(c, a(j), b(j), z0, carry, z1);
        layout.boundaries.push_back({c.gates().size(), carry.gt, carry.eq});
    }
    const std::size_t kf = c.add_line(ConstantInput{false});
    designate(c, place_final_cell(c, carry, kf));
    c.designate_auxiliary(msb.lt, "msb_lt");
    return layout;
}

Circuit build_comparator(unsigned n) { return assemble_comparator(n).circuit; }

unsigned comparator_width(const Circuit& circuit) {
    const auto names = circuit.primary_input_names();
    if (names.empty() || names.size() % 2 != 0 || names.size() > 128) return 0;
    const unsigned n = static_cast<unsigned>(names.size() / 2);
    for (unsigned i = 0; i < n; ++i) {
        if (std::find(names.begin(), names.end(), bit_name('a', i)) == names.end()) return 0;
        if (std::find(names.begin(), names.end(), bit_name('b', i)) == names.end()) return 0;
    }
    const auto outs = circuit.primary_outputs();
    if (outs.size() != 3) return 0;
    for (const char* want : {"LT", "EQ", "GT"}) {
        const Terminal* t = circuit.terminal(want);
        if (t == nullptr || t->kind != TerminalKind::Primary) return 0;
    }
    return n;
}

Reference compare_reference(const Circuit& circuit) {
    const unsigned n = comparator_width(circuit);
    if (n == 0) {
        throw Error(ErrorKind::Contract,
                    "circuit does not expose a comparator interface (a0.., b0.. -> LT, EQ, GT)");
    }
    const auto names = circuit.primary_input_names();
    auto position = [&names](const std::string& name) {
        return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) -
                                        names.begin());
    };
    std::vector<std::size_t> a_pos, b_pos;
    for (unsigned i = 0; i < n; ++i) {
        a_pos.push_back(position(bit_name('a', i)));
        b_pos.push_back(position(bit_name('b', i)));
    }
    std::array<std::size_t, 3> slot{};  // output position of LT, EQ, GT
    const auto outs = circuit.primary_outputs();
    for (std::size_t k = 0; k < outs.size(); ++k) {
        if (outs[k]->name == "LT") slot[0] = k;
        if (outs[k]->name == "EQ") slot[1] = k;
        if (outs[k]->name == "GT") slot[2] = k;
    }
    return [n, a_pos, b_pos, slot](const BitVector& in) {
        std::uint64_t a = 0, b = 0;
        for (unsigned i = 0; i < n; ++i) {
            a |= std::uint64_t{in[a_pos[i]] != 0} << i;
            b |= std::uint64_t{in[b_pos[i]] != 0} << i;
        }
        const CompareResult r = compare_oracle(a, b, n);
        BitVector out(3);
        out[slot[0]] = r.lt;
        out[slot[1]] = r.eq;
        out[slot[2]] = r.gt;
        return out;
    };
}

std::vector<BitVector> comparator_edge_vectors(unsigned n) {
    auto pair = [n](std::uint64_t a, std::uint64_t b) {
        BitVector v = unpack_bits(a, n);
        BitVector hi = unpack_bits(b, n);
        v.insert(v.end(), hi.begin(), hi.end());
        return v;
    };
    const std::uint64_t max = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<BitVector> edges{pair(0, 0), pair(max, max)};
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        edges.push_back(pair(0, bit));
        edges.push_back(pair(bit, 0));
        edges.push_back(pair(max, max ^ bit));
        edges.push_back(pair(max ^ bit, max));
    }
    return edges;
}

std::function<bool(const BitVector&)> one_hot_invariant() {
    return [](const BitVector& out) {
        return std::count(out.begin(), out.end(), std::uint8_t{1}) == 1;
    };
}

VerificationReport verify_comparator(const Circuit& circuit, const Strategy& strategy) {
    VerifyOptions options;
    options.output_invariant = one_hot_invariant();
    if (std::holds_alternative<Random>(strategy)) {
        const unsigned n = comparator_width(circuit);
        options.edge_vectors = comparator_edge_vectors(n);
        // Edge vectors are laid out (a bits, b bits); map to the circuit's input order.
        const auto names = circuit.primary_input_names();
        for (auto& edge : options.edge_vectors) {
            BitVector ordered(edge.size());
            for (std::size_t k = 0; k < names.size(); ++k) {
                const char bus = names[k][0];
                const std::size_t i = std::stoul(names[k].substr(1));
                ordered[k] = edge[(bus == 'a' ? 0 : n) + i];
            }
            edge = std::move(ordered);
        }
    }
    return verify_against(circuit, compare_reference(circuit), strategy, options);
}

VerificationReport verify_comparator(unsigned n, const Strategy& strategy) {
    return verify_comparator(build_comparator(n), strategy);
}

Strategy default_comparator_strategy(unsigned n) {
    if (2 * std::size_t{n} <= kExhaustiveInputLimit) return Exhaustive{};
    return Random{100000, 1};
}

std::string comparator_conformance(const Circuit& circuit, unsigned n) {
    const MetricsReport m = metrics(circuit);
    const CellTargets in = cell_targets(CellKind::In);
    const CellTargets chain = cell_targets(CellKind::Chain);
    const CellTargets fin = cell_targets(CellKind::Final);
    CellTargets target = in;
    if (n >= 2) {
        target.gates += (n - 1) * chain.gates + fin.gates;
        target.constants += (n - 1) * chain.constants + fin.constants;
        target.garbage += (n - 1) * chain.garbage + fin.garbage;
    }
    std::ostringstream out;
    auto row = [&out](const char* metric, std::size_t want, std::size_t got) {
        out << "  " << metric << ": target " << want << ", measured " << got << ", "
            << (want == got ? "ok" : "MISMATCH") << '\n';
    };
    out << "conformance comparator n=" << n << '\n';
    row("gates", target.gates, m.gate_count);
    row("garbage", target.garbage, m.garbage_outputs);
    row("constants", target.constants, m.constant_inputs);
    out << "  auxiliary: " << m.auxiliary_outputs
        << (n >= 2 ? " (msb_lt: LT of the MSB pair, not consumed by the chain)" : "") << '\n';
    out << "  depth: " << m.depth << '\n';

    const std::vector<Code> bme_table = printed_bme_table();
    const BijectivityVerdict bme = check_bijective(bme_table);
    out << "deviation: chain cell is TR + TG + NOT + TG instead of TR + BME + FG + NOT; "
           "the BME formulas as printed are not bijective";
    if (bme.witness) {
        auto abcd = [](Code c) {
            return "(" + std::to_string(c & 1u) + "," + std::to_string((c >> 1) & 1u) + "," +
                   std::to_string((c >> 2) & 1u) + "," + std::to_string((c >> 3) & 1u) + ")";
        };
        out << " ((A,B,C,D) = " << abcd(bme.witness->first) << " and "
            << abcd(bme.witness->second) << " both map to " << bme_table[bme.witness->first]
            << ")";
    }
    out << ", and no 4x4 reversible gate emits both AB^C and AD^C\n";
    out << "deviation: final cell uses 2 FG + 1 NOT (3 gates)\n";
    if (n >= 2) {
        out << "note: gate total counts gate instances (" << target.gates << "), not cells ("
            << n + 1 << ")\n";
    }
    return out.str();
}

}  // namespace revcmp
