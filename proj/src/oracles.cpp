#include "revcmp/oracles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>

namespace revcmp {

namespace {

constexpr std::array<std::string_view, 11> kTargets{
    "AND",        "NAND",     "OR",         "NOR",      "XOR",     "XNOR",
    "HALF_ADDER", "HALF_SUB", "FULL_ADDER", "FULL_SUB", "COMPARE1"};

TargetFunction make(std::string name, std::vector<std::string> inputs,
                    std::vector<std::string> outputs,
                    const std::function<std::vector<bool>(const std::vector<bool>&)>& eval) {
    TargetFunction f{std::move(name), std::move(inputs), std::move(outputs), {}};
    const std::uint32_t rows = 1u << f.inputs.size();
    for (std::uint32_t x = 0; x < rows; ++x) {
        std::vector<bool> in(f.inputs.size());
        for (std::size_t i = 0; i < in.size(); ++i) in[i] = (x >> i) & 1u;
        const auto out = eval(in);
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < out.size(); ++i) code |= std::uint32_t{out[i]} << i;
        f.table.push_back(code);
    }
    return f;
}

TargetFunction binary(std::string name, bool (*op)(bool, bool)) {
    return make(std::move(name), {"a", "b"}, {"y"},
                [op](const std::vector<bool>& v) { return std::vector<bool>{op(v[0], v[1])}; });
}

}  // namespace

CompareResult compare_oracle(std::uint64_t a, std::uint64_t b, unsigned n) {
    if (n < 1 || n > 64) throw Error(ErrorKind::Range, "comparator width must be 1..64");
    if (n < 64 && ((a >> n) != 0 || (b >> n) != 0)) {
        throw Error(ErrorKind::Range, "operand does not fit in " + std::to_string(n) + " bits");
    }
    return {a < b, a == b, a > b};
}

BitVector decode_oracle(std::uint64_t x, unsigned n) {
    if (n < 1 || n > 24) throw Error(ErrorKind::Range, "decoder width must be 1..24");
    if ((x >> n) != 0) {
        throw Error(ErrorKind::Range, "address does not fit in " + std::to_string(n) + " bits");
    }
    BitVector onehot(std::size_t{1} << n, 0);
    onehot[x] = 1;
    return onehot;
}

TargetFunction target_function(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (key == "AND") return binary(key, [](bool a, bool b) { return a && b; });
    if (key == "NAND") return binary(key, [](bool a, bool b) { return !(a && b); });
    if (key == "OR") return binary(key, [](bool a, bool b) { return a || b; });
    if (key == "NOR") return binary(key, [](bool a, bool b) { return !(a || b); });
    if (key == "XOR") return binary(key, [](bool a, bool b) { return a != b; });
    if (key == "XNOR") return binary(key, [](bool a, bool b) { return a == b; });
    if (key == "HALF_ADDER") {
        return make(key, {"a", "b"}, {"sum", "carry"}, [](const std::vector<bool>& v) {
            return std::vector<bool>{v[0] != v[1], v[0] && v[1]};
        });
    }
    if (key == "HALF_SUB") {
        return make(key, {"a", "b"}, {"diff", "borrow"}, [](const std::vector<bool>& v) {
            return std::vector<bool>{v[0] != v[1], !v[0] && v[1]};
        });
    }
    if (key == "FULL_ADDER") {
        return make(key, {"a", "b", "cin"}, {"sum", "carry"}, [](const std::vector<bool>& v) {
            const bool a = v[0], b = v[1], c = v[2];
            return std::vector<bool>{(a != b) != c, (a && b) || (a && c) || (b && c)};
        });
    }
    if (key == "FULL_SUB") {
        return make(key, {"a", "b", "bin"}, {"diff", "borrow"}, [](const std::vector<bool>& v) {
            const bool a = v[0], b = v[1], bin = v[2];
            return std::vector<bool>{(a != b) != bin, (!a && b) || (bin && a == b)};
        });
    }
    if (key == "COMPARE1") {
        return make(key, {"a", "b"}, {"LT", "EQ", "GT"}, [](const std::vector<bool>& v) {
            return std::vector<bool>{!v[0] && v[1], v[0] == v[1], v[0] && !v[1]};
        });
    }
    throw Error(ErrorKind::UnknownTarget, "no target function named '" + std::string(name) + "'");
}

std::span<const std::string_view> target_names() { return kTargets; }

}  // namespace revcmp
