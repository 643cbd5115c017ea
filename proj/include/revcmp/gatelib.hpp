#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revcmp/error.hpp"

namespace revcmp {

/// Packed bit-code: bit i holds the value on the i-th declared port.
using Code = std::uint32_t;

struct BijectivityVerdict {
    enum class Outcome { Bijective, Collision };

    Outcome outcome = Outcome::Bijective;
    /// Two distinct input codes with equal outputs; set only for Collision.
    std::optional<std::pair<Code, Code>> witness;

    bool bijective() const noexcept { return outcome == Outcome::Bijective; }
};

/// Decides whether `outputs` is a permutation of {0, ..., size-1}. On failure
/// the witness is the lexicographically first colliding pair (i, j), i < j.
/// Throws Range if the size is not a power of two or an entry is out of range.
BijectivityVerdict check_bijective(std::span<const Code> outputs);

class NotBijectiveError : public Error {
public:
    NotBijectiveError(const std::string& gate, BijectivityVerdict verdict);

    const BijectivityVerdict& verdict() const noexcept { return verdict_; }

private:
    BijectivityVerdict verdict_;
};

/// A k-port reversible gate stored as the permutation it induces on packed
/// codes. Values can only be obtained through gate_from_table (and the
/// library constructors built on it), so every instance is a bijection.
class ReversibleGate {
public:
    static constexpr unsigned max_width = 8;

    const std::string& name() const noexcept { return name_; }
    unsigned width() const noexcept { return width_; }
    const std::vector<std::string>& ports_in() const noexcept { return ports_in_; }
    const std::vector<std::string>& ports_out() const noexcept { return ports_out_; }
    std::span<const Code> perm() const noexcept { return perm_; }

    /// perm[input]; throws Range for codes >= 2^width.
    Code apply(Code input) const;

    bool operator==(const ReversibleGate&) const = default;

private:
    ReversibleGate(std::string name, unsigned width, std::vector<std::string> ports_in,
                   std::vector<std::string> ports_out, std::vector<Code> perm);

    friend ReversibleGate gate_from_table(std::string, unsigned, std::vector<Code>,
                                          std::vector<std::string>, std::vector<std::string>);

    std::string name_;
    unsigned width_;
    std::vector<std::string> ports_in_;
    std::vector<std::string> ports_out_;
    std::vector<Code> perm_;
};

/// Validates and wraps a truth table. Empty port lists default to A, B, C, ...
/// for inputs and P, Q, R, ... for outputs.
ReversibleGate gate_from_table(std::string name, unsigned width, std::vector<Code> outputs,
                               std::vector<std::string> ports_in = {},
                               std::vector<std::string> ports_out = {});

/// NOT, FG, TG, FRG, PG or TR built from their algebraic definitions.
ReversibleGate standard_gate(std::string_view name);

/// The 4x4 Inventive gate, ports (a, b, c, d) -> (P, Q, R, S).
ReversibleGate inventive_gate();

ReversibleGate invert(const ReversibleGate& gate);

/// Any gate known by mnemonic (standard gates plus INVENTIVE); case-insensitive.
ReversibleGate library_gate(std::string_view name);

/// Shared immutable instance of a library gate, cached per mnemonic.
std::shared_ptr<const ReversibleGate> shared_library_gate(std::string_view name);

/// Mnemonics accepted by library_gate, in a stable order.
std::span<const std::string_view> library_gate_names();

/// The 4x4 table obtained by evaluating the BME formulas exactly as printed
/// (P=A, Q=AB^C, R=AD^C, S=A'B^C^D). Not a permutation; kept as a fixture.
std::vector<Code> printed_bme_table();

}  // namespace revcmp
