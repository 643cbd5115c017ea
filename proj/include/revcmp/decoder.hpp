#pragma once

#include <string>

#include "revcmp/netlist.hpp"
#include "revcmp/verify.hpp"

namespace revcmp {

// n-to-2^n one-hot decoder. Address bit a0 is least significant; output d<i>
// is high exactly when the address equals i.

/// 2-to-4 cell on lines (a0, a1, c=0, d=1):
/// INVENTIVE, NOT(S) -> a0&~a1, NOT(P) -> XNOR, FG(R -> P) -> a0&a1.
/// 4 gates, 2 constants, no garbage.
Circuit build_base_decoder();

/// Adds address bit `input` above the existing ones: one new input line,
/// 2^y constant-0 lines and 2^y FRG gates controlled by the new bit. Output
/// d<i> keeps its line and becomes d<i>&~x; d<i+2^y> = d<i>&x lands on the
/// fresh line. The new input line ends as garbage.
/// Throws Contract if `decoder` does not expose a y-to-2^y interface.
Circuit extend_decoder(const Circuit& decoder, const std::string& input);

inline constexpr unsigned kMaxDecoderBits = 12;

/// Base cell plus n-2 extensions, inputs a0..a(n-1). Throws Range outside
/// 2..kMaxDecoderBits.
Circuit build_decoder(unsigned n);

/// Address width of the decoder interface a circuit exposes, 0 if none.
unsigned decoder_width(const Circuit& circuit);

/// Reference for circuits exposing a0.. -> d0..; throws Contract otherwise.
Reference decode_reference(const Circuit& circuit);

/// Verification against decode_oracle with a one-hot output check.
VerificationReport verify_decoder(const Circuit& circuit, const Strategy& strategy);

/// Published bounds (gates <= 2^n+1, garbage <= n) against measured values.
std::string decoder_conformance(const Circuit& circuit, unsigned n);

}  // namespace revcmp
