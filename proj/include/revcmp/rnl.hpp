#pragma once

#include <string>
#include <string_view>

#include "revcmp/netlist.hpp"

namespace revcmp {

// .rnl text netlist, one directive per line, '#' starts a comment:
//
//   rnl 1
//   lines <L>
//   in <idx> <name>          primary input
//   const <idx> <0|1>        constant input
//   gate <GATE> <idx...>     ports bind in declaration order
//   out <idx> <name>         primary output
//   aux <idx> <name>         auxiliary output
//   end
//
// Lines without out/aux are garbage. `<gate-mnemonic> <idx...>` is accepted
// as shorthand for `gate <GATE> <idx...>`; mnemonics are case-insensitive.

/// Canonical text; byte-stable for a given circuit. Throws UnknownGate for
/// gates that have no library mnemonic.
std::string export_rnl(const Circuit& circuit);

/// Throws ParseError carrying the offending line number.
Circuit parse_rnl(std::string_view text, std::string name = "rnl");

}  // namespace revcmp
