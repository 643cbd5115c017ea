#include "revcmp/decoder.hpp"

#include <algorithm>
#include <sstream>

#include "revcmp/comparator.hpp"
#include "revcmp/oracles.hpp"

namespace revcmp {

namespace {

std::string out_name(std::size_t i) { return "d" + std::to_string(i); }

}  // namespace

Circuit build_base_decoder() {
    Circuit c("decoder2", {PrimaryInput{"a0"}, PrimaryInput{"a1"}, ConstantInput{false},
                           ConstantInput{true}});
    c.add_gate("INVENTIVE", {0, 1, 2, 3});  // P=a^b Q=~a&b R=~a&~b S=~(a&~b)
    c.add_gate("NOT", {3});
    c.add_gate("NOT", {0});
    c.add_gate("FG", {2, 0});  // ~a&~b ^ XNOR(a, b) = a&b
    c.designate_output(2, out_name(0));
    c.designate_output(3, out_name(1));
    c.designate_output(1, out_name(2));
    c.designate_output(0, out_name(3));
    return c;
}

unsigned decoder_width(const Circuit& circuit) {
    const auto names = circuit.primary_input_names();
    if (names.empty() || names.size() > 24) return 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] != "a" + std::to_string(i)) return 0;
    }
    const auto outs = circuit.primary_outputs();
    if (outs.size() != (std::size_t{1} << names.size())) return 0;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        if (outs[i]->name != out_name(i)) return 0;
    }
    return static_cast<unsigned>(names.size());
}

Circuit extend_decoder(const Circuit& decoder, const std::string& input) {
    const unsigned y = decoder_width(decoder);
    if (y == 0) {
        throw Error(ErrorKind::Contract, "'" + decoder.name() +
                                             "' does not expose a decoder interface (a0.. -> d0..)");
    }
    if (y >= 24) throw Error(ErrorKind::TooLarge, "decoder already has 24 address bits");
    if (!decoder.auxiliary_outputs().empty()) {
        throw Error(ErrorKind::Contract, "decoder must not carry auxiliary outputs");
    }
    Circuit c = decoder;
    c.rename("decoder" + std::to_string(y + 1));
    const std::size_t x = c.add_line(PrimaryInput{input});
    const std::size_t half = std::size_t{1} << y;
    std::vector<std::size_t> old_lines;
    for (const Terminal* t : c.primary_outputs()) old_lines.push_back(t->line);
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t fresh = c.add_line(ConstantInput{false});
        c.add_gate("FRG", {x, old_lines[i], fresh});
        c.designate_output(fresh, out_name(half + i));
    }
    return c;
}

Circuit build_decoder(unsigned n) {
    if (n < 2 || n > kMaxDecoderBits) {
        throw Error(ErrorKind::Range,
                    "decoder width must be 2.." + std::to_string(kMaxDecoderBits));
    }
    Circuit c = build_base_decoder();
    for (unsigned i = 2; i < n; ++i) c = extend_decoder(c, "a" + std::to_string(i));
    return c;
}

Reference decode_reference(const Circuit& circuit) {
    const unsigned n = decoder_width(circuit);
    if (n == 0) {
        throw Error(ErrorKind::Contract,
                    "circuit does not expose a decoder interface (a0.. -> d0..)");
    }
    return [n](const BitVector& in) { return decode_oracle(pack_bits(in), n); };
}

VerificationReport verify_decoder(const Circuit& circuit, const Strategy& strategy) {
    VerifyOptions options;
    options.output_invariant = one_hot_invariant();
    return verify_against(circuit, decode_reference(circuit), strategy, options);
}

std::string decoder_conformance(const Circuit& circuit, unsigned n) {
    const MetricsReport m = metrics(circuit);
    const std::size_t gate_bound = (std::size_t{1} << n) + 1;
    std::ostringstream out;
    out << "conformance decoder n=" << n << '\n';
    out << "  gates: bound <= " << gate_bound << ", measured " << m.gate_count << ", "
        << (m.gate_count <= gate_bound ? "ok" : "EXCEEDED") << '\n';
    out << "  garbage: bound <= " << n << ", measured " << m.garbage_outputs << ", "
        << (m.garbage_outputs <= n ? "ok" : "EXCEEDED") << '\n';
    out << "  constants: no target, measured " << m.constant_inputs << '\n';
    out << "  depth: " << m.depth << '\n';
    out << "deviation: 2-to-4 cell is INVENTIVE + 2 NOT + 1 FG (4 gates, 0 garbage); "
           "each extension adds 2^y FRG gates and 1 garbage line\n";
    if (n == 3) out << "note: 3-to-8 gate total is " << m.gate_count << "; bound 9, quoted 7\n";
    return out.str();
}

}  // namespace revcmp
