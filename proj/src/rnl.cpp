#include "revcmp/rnl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace revcmp {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_library_mnemonic(std::string_view word) {
    const auto names = library_gate_names();
    std::string upper(word);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return std::find(names.begin(), names.end(), upper) != names.end();
}

class Reader {
public:
    explicit Reader(std::string name) : name_(std::move(name)) {}

    Circuit read(std::string_view text) {
        std::size_t lineno = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            const std::string_view raw =
                text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            ++lineno;
            directive(tokenize(raw), lineno);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
        if (!ended_) fail(ErrorKind::Syntax, lineno, "missing 'end'");
        return finish(lineno);
    }

private:
    [[noreturn]] static void fail(ErrorKind kind, std::size_t lineno, const std::string& msg) {
        throw ParseError(kind, lineno, msg);
    }

    static std::size_t number(std::string_view token, std::size_t lineno) {
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            fail(ErrorKind::Syntax, lineno, "expected a number, got '" + std::string(token) + "'");
        }
        return value;
    }

    std::size_t index(std::string_view token, std::size_t lineno) const {
        const std::size_t idx = number(token, lineno);
        if (idx >= roles_.size()) {
            fail(ErrorKind::Syntax, lineno, "line index " + std::to_string(idx) + " out of range");
        }
        return idx;
    }

    void arity(const std::vector<std::string_view>& tokens, std::size_t n, std::size_t lineno) {
        if (tokens.size() != n) {
            fail(ErrorKind::Syntax, lineno,
                 "'" + std::string(tokens[0]) + "' expects " + std::to_string(n - 1) + " operand(s)");
        }
    }

    void directive(const std::vector<std::string_view>& tokens, std::size_t lineno) {
        if (tokens.empty()) return;
        if (ended_) fail(ErrorKind::Syntax, lineno, "content after 'end'");
        const std::string word = lower(tokens[0]);
        if (!header_) {
            if (word != "rnl" || tokens.size() != 2 || tokens[1] != "1") {
                fail(ErrorKind::Syntax, lineno, "expected header 'rnl 1'");
            }
            header_ = true;
            return;
        }
        if (roles_.empty()) {
            if (word != "lines") fail(ErrorKind::Syntax, lineno, "expected 'lines <L>'");
            arity(tokens, 2, lineno);
            const std::size_t count = number(tokens[1], lineno);
            if (count == 0) fail(ErrorKind::Syntax, lineno, "a circuit needs at least one line");
            roles_.resize(count);
            return;
        }
        if (word == "in") {
            arity(tokens, 3, lineno);
            set_role(index(tokens[1], lineno), PrimaryInput{std::string(tokens[2])}, lineno);
        } else if (word == "const") {
            arity(tokens, 3, lineno);
            if (tokens[2] != "0" && tokens[2] != "1") {
                fail(ErrorKind::Syntax, lineno, "constant must be 0 or 1");
            }
            set_role(index(tokens[1], lineno), ConstantInput{tokens[2] == "1"}, lineno);
        } else if (word == "gate") {
            if (tokens.size() < 2) fail(ErrorKind::Syntax, lineno, "'gate' needs a gate name");
            gate(tokens[1], {tokens.begin() + 2, tokens.end()}, lineno);
        } else if (word == "out" || word == "aux") {
            arity(tokens, 3, lineno);
            outputs_.push_back({index(tokens[1], lineno), std::string(tokens[2]),
                                word == "out" ? TerminalKind::Primary : TerminalKind::Auxiliary,
                                lineno});
        } else if (word == "end") {
            arity(tokens, 1, lineno);
            ended_ = true;
        } else if (word == "lines" || word == "rnl") {
            fail(ErrorKind::Syntax, lineno, "'" + word + "' may appear only once");
        } else if (is_library_mnemonic(word)) {
            gate(tokens[0], {tokens.begin() + 1, tokens.end()}, lineno);
        } else {
            fail(ErrorKind::Syntax, lineno, "unknown directive '" + std::string(tokens[0]) + "'");
        }
    }

    void set_role(std::size_t idx, InputRole role, std::size_t lineno) {
        if (roles_[idx]) {
            fail(ErrorKind::RoleConflict, lineno,
                 "line " + std::to_string(idx) + " already has an input role");
        }
        roles_[idx] = std::move(role);
    }

    void gate(std::string_view mnemonic, const std::vector<std::string_view>& operands,
              std::size_t lineno) {
        std::shared_ptr<const ReversibleGate> g;
        try {
            g = shared_library_gate(mnemonic);
        } catch (const Error& e) {
            fail(ErrorKind::UnknownGate, lineno, "unknown gate '" + std::string(mnemonic) + "'");
        }
        std::vector<std::size_t> lines;
        for (auto op : operands) lines.push_back(index(op, lineno));
        gates_.push_back({std::move(g), std::move(lines), lineno});
    }

    Circuit finish(std::size_t lineno) {
        std::vector<InputRole> roles;
        for (std::size_t i = 0; i < roles_.size(); ++i) {
            if (!roles_[i]) {
                fail(ErrorKind::RoleConflict, lineno,
                     "line " + std::to_string(i) + " has no input role");
            }
            roles.push_back(*roles_[i]);
        }
        auto wrap = [](std::size_t at, auto&& fn) {
            try {
                fn();
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(e.kind(), at, e.what());
            }
        };
        std::optional<Circuit> circuit;
        wrap(lineno, [&] { circuit.emplace(name_, std::move(roles)); });
        for (auto& g : gates_) {
            wrap(g.lineno, [&] { circuit->add_gate(std::move(g.gate), std::move(g.lines)); });
        }
        for (auto& o : outputs_) {
            wrap(o.lineno, [&] {
                if (o.kind == TerminalKind::Primary) {
                    circuit->designate_output(o.line, std::move(o.name));
                } else {
                    circuit->designate_auxiliary(o.line, std::move(o.name));
                }
            });
        }
        return std::move(*circuit);
    }

    struct PendingGate {
        std::shared_ptr<const ReversibleGate> gate;
        std::vector<std::size_t> lines;
        std::size_t lineno;
    };
    struct PendingOutput {
        std::size_t line;
        std::string name;
        TerminalKind kind;
        std::size_t lineno;
    };

    std::string name_;
    bool header_ = false;
    bool ended_ = false;
    std::vector<std::optional<InputRole>> roles_;
    std::vector<PendingGate> gates_;
    std::vector<PendingOutput> outputs_;
};

}  // namespace

std::string export_rnl(const Circuit& circuit) {
    std::ostringstream out;
    out << "# " << circuit.name() << '\n';
    out << "rnl 1\n";
    out << "lines " << circuit.line_count() << '\n';
    const auto& roles = circuit.input_roles();
    for (std::size_t i = 0; i < roles.size(); ++i) {
        if (const auto* in = std::get_if<PrimaryInput>(&roles[i])) {
            out << "in " << i << ' ' << in->name << '\n';
        } else {
            out << "const " << i << ' ' << (std::get<ConstantInput>(roles[i]).value ? 1 : 0)
                << '\n';
        }
    }
    for (const auto& inst : circuit.gates()) {
        if (!is_library_mnemonic(inst.gate->name()) ||
            *inst.gate != *shared_library_gate(inst.gate->name())) {
            throw Error(ErrorKind::UnknownGate,
                        "gate '" + inst.gate->name() + "' has no .rnl mnemonic");
        }
        out << "gate " << inst.gate->name();
        for (std::size_t line : inst.lines) out << ' ' << line;
        out << '\n';
    }
    for (const auto& t : circuit.terminals()) {
        out << (t.kind == TerminalKind::Primary ? "out " : "aux ") << t.line << ' ' << t.name
            << '\n';
    }
    out << "end\n";
    return out.str();
}

Circuit parse_rnl(std::string_view text, std::string name) {
    return Reader(std::move(name)).read(text);
}

}  // namespace revcmp
