#include "revcmp/gatelib.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>

namespace revcmp {

namespace {

bool bit(Code code, unsigned i) { return ((code >> i) & 1u) != 0; }

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

std::string describe(const BijectivityVerdict& verdict) {
    if (!verdict.witness) return "table is not a permutation";
    return "inputs " + std::to_string(verdict.witness->first) + " and " +
           std::to_string(verdict.witness->second) + " map to the same output";
}

// Builds a gate from a per-code evaluation of its output bits.
ReversibleGate tabulate(std::string name, unsigned width, const std::function<Code(Code)>& eval,
                        std::vector<std::string> ports_in = {},
                        std::vector<std::string> ports_out = {}) {
    std::vector<Code> table(std::size_t{1} << width);
    for (Code x = 0; x < table.size(); ++x) table[x] = eval(x);
    return gate_from_table(std::move(name), width, std::move(table), std::move(ports_in),
                           std::move(ports_out));
}

Code pack(std::initializer_list<bool> bits) {
    Code code = 0;
    unsigned i = 0;
    for (bool b : bits) code |= Code{b} << i++;
    return code;
}

// Rows of the Inventive gate's published truth table, in the printed column
// order: inputs d c b a, outputs P Q R S.
constexpr std::array<std::array<int, 8>, 16> kInventiveRows{{
    {0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 1, 1, 0, 0, 1},
    {0, 0, 1, 0, 1, 0, 1, 0},
    {0, 0, 1, 1, 0, 1, 0, 0},
    {0, 1, 0, 0, 1, 0, 1, 1},
    {0, 1, 0, 1, 0, 1, 0, 1},
    {0, 1, 1, 0, 0, 1, 1, 0},
    {0, 1, 1, 1, 1, 1, 1, 0},
    {1, 0, 0, 0, 0, 0, 1, 1},
    {1, 0, 0, 1, 1, 0, 0, 0},
    {1, 0, 1, 0, 1, 1, 0, 1},
    {1, 0, 1, 1, 0, 0, 0, 1},
    {1, 1, 0, 0, 1, 1, 0, 0},
    {1, 1, 0, 1, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1},
}};

constexpr std::array<std::string_view, 7> kLibraryNames{"NOT", "FG", "TG", "FRG",
                                                        "PG",  "TR", "INVENTIVE"};

}  // namespace

BijectivityVerdict check_bijective(std::span<const Code> outputs) {
    const std::size_t n = outputs.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw Error(ErrorKind::Range, "table length " + std::to_string(n) +
                                          " is not a power of two");
    }
    constexpr Code none = ~Code{0};
    std::vector<Code> first(n, none);
    std::vector<Code> second(n, none);
    for (Code x = 0; x < n; ++x) {
        const Code y = outputs[x];
        if (y >= n) {
            throw Error(ErrorKind::Range, "output code " + std::to_string(y) +
                                              " out of range for table of size " +
                                              std::to_string(n));
        }
        if (first[y] == none) {
            first[y] = x;
        } else if (second[y] == none) {
            second[y] = x;
        }
    }
    // The smallest colliding i is the first occurrence of its value; its
    // partner is that value's second occurrence.
    BijectivityVerdict verdict;
    for (Code y = 0; y < n; ++y) {
        if (second[y] == none) continue;
        if (!verdict.witness || first[y] < verdict.witness->first) {
            verdict.witness = std::pair{first[y], second[y]};
        }
    }
    if (verdict.witness) verdict.outcome = BijectivityVerdict::Outcome::Collision;
    return verdict;
}

NotBijectiveError::NotBijectiveError(const std::string& gate, BijectivityVerdict verdict)
    : Error(ErrorKind::NotBijective, gate + ": " + describe(verdict)), verdict_(verdict) {}

ReversibleGate::ReversibleGate(std::string name, unsigned width, std::vector<std::string> ports_in,
                               std::vector<std::string> ports_out, std::vector<Code> perm)
    : name_(std::move(name)),
      width_(width),
      ports_in_(std::move(ports_in)),
      ports_out_(std::move(ports_out)),
      perm_(std::move(perm)) {}

Code ReversibleGate::apply(Code input) const {
    if (input >= perm_.size()) {
        throw Error(ErrorKind::Range, "input code " + std::to_string(input) + " out of range for " +
                                          name_);
    }
    return perm_[input];
}

ReversibleGate gate_from_table(std::string name, unsigned width, std::vector<Code> outputs,
                               std::vector<std::string> ports_in,
                               std::vector<std::string> ports_out) {
    if (width < 1 || width > ReversibleGate::max_width) {
        throw Error(ErrorKind::Range, name + ": width " + std::to_string(width) +
                                          " outside 1.." +
                                          std::to_string(ReversibleGate::max_width));
    }
    if (outputs.size() != (std::size_t{1} << width)) {
        throw Error(ErrorKind::Range, name + ": expected " +
                                          std::to_string(std::size_t{1} << width) +
                                          " table entries, got " + std::to_string(outputs.size()));
    }
    auto defaults = [width](char first) {
        std::vector<std::string> names;
        for (unsigned i = 0; i < width; ++i) names.emplace_back(1, static_cast<char>(first + i));
        return names;
    };
    if (ports_in.empty()) ports_in = defaults('A');
    if (ports_out.empty()) ports_out = defaults('P');
    if (ports_in.size() != width || ports_out.size() != width) {
        throw Error(ErrorKind::Wiring, name + ": port lists must have length " +
                                           std::to_string(width));
    }
    const BijectivityVerdict verdict = check_bijective(outputs);
    if (!verdict.bijective()) throw NotBijectiveError(name, verdict);
    return ReversibleGate(std::move(name), width, std::move(ports_in), std::move(ports_out),
                          std::move(outputs));
}

ReversibleGate standard_gate(std::string_view name) {
    const std::string key = upper(name);
    if (key == "NOT") {
        return tabulate("NOT", 1, [](Code x) { return x ^ 1u; });
    }
    if (key == "FG") {
        return tabulate("FG", 2, [](Code x) {
            const bool a = bit(x, 0), b = bit(x, 1);
            return pack({a, a != b});
        });
    }
    if (key == "TG") {
        return tabulate("TG", 3, [](Code x) {
            const bool a = bit(x, 0), b = bit(x, 1), c = bit(x, 2);
            return pack({a, b, (a && b) != c});
        });
    }
    if (key == "FRG") {
        return tabulate("FRG", 3, [](Code x) {
            const bool a = bit(x, 0), b = bit(x, 1), c = bit(x, 2);
            return pack({a, a ? c : b, a ? b : c});
        });
    }
    if (key == "PG") {
        return tabulate("PG", 3, [](Code x) {
            const bool a = bit(x, 0), b = bit(x, 1), c = bit(x, 2);
            return pack({a, a != b, (a && b) != c});
        });
    }
    if (key == "TR") {
        return tabulate("TR", 3, [](Code x) {
            const bool a = bit(x, 0), b = bit(x, 1), c = bit(x, 2);
            return pack({a, a != b, (a && !b) != c});
        });
    }
    throw Error(ErrorKind::UnknownGate, "no standard gate named '" + std::string(name) + "'");
}

ReversibleGate inventive_gate() {
    std::vector<Code> table(16);
    for (const auto& row : kInventiveRows) {
        const Code in = pack({row[3] != 0, row[2] != 0, row[1] != 0, row[0] != 0});
        table[in] = pack({row[4] != 0, row[5] != 0, row[6] != 0, row[7] != 0});
    }
    return gate_from_table("INVENTIVE", 4, std::move(table), {"a", "b", "c", "d"},
                           {"P", "Q", "R", "S"});
}

ReversibleGate invert(const ReversibleGate& gate) {
    std::vector<Code> inverse(gate.perm().size());
    for (Code x = 0; x < inverse.size(); ++x) inverse[gate.perm()[x]] = x;
    return gate_from_table(gate.name() + "_inv", gate.width(), std::move(inverse),
                           gate.ports_out(), gate.ports_in());
}

ReversibleGate library_gate(std::string_view name) {
    if (upper(name) == "INVENTIVE") return inventive_gate();
    return standard_gate(name);
}

std::shared_ptr<const ReversibleGate> shared_library_gate(std::string_view name) {
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const ReversibleGate>> cache;
    const std::string key = upper(name);
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_shared<const ReversibleGate>(library_gate(key))).first;
    }
    return it->second;
}

std::span<const std::string_view> library_gate_names() { return kLibraryNames; }

std::vector<Code> printed_bme_table() {
    std::vector<Code> table(16);
    for (Code x = 0; x < 16; ++x) {
        const bool a = bit(x, 0), b = bit(x, 1), c = bit(x, 2), d = bit(x, 3);
        table[x] = pack({a, (a && b) != c, (a && d) != c, ((!a && b) != c) != d});
    }
    return table;
}

}  // namespace revcmp
