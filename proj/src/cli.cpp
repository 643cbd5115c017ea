#include "revcmp/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "revcmp/comparator.hpp"
#include "revcmp/costmodel.hpp"
#include "revcmp/decoder.hpp"
#include "revcmp/rnl.hpp"
#include "revcmp/synth.hpp"

namespace revcmp {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_value(const std::string& text) {
    std::string_view digits = text;
    int base = 10;
    if (digits.starts_with("0x") || digits.starts_with("0X")) {
        digits.remove_prefix(2);
        base = 16;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, base);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw UsageError("cannot parse value '" + text + "'");
    }
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw IoError("cannot write '" + path + "'");
}

Circuit load_circuit(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_rnl(text, std::filesystem::path(path).stem().string());
    } catch (const ParseError& e) {
        throw IoError(path + ": " + e.what());
    }
}

std::string bits_to_string(const BitVector& bits) {
    std::string s;
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) s += *it ? '1' : '0';
    return s;
}

std::map<std::string, bool> resolve_assignment(const Circuit& circuit,
                                               const std::vector<std::string>& sets) {
    std::map<std::string, bool> assignment;
    const auto names = circuit.primary_input_names();
    for (const auto& item : sets) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--set expects name=value, got '" + item + "'");
        }
        const std::string name = item.substr(0, eq);
        const std::uint64_t value = parse_value(item.substr(eq + 1));
        if (circuit.input_line(name)) {
            if (value > 1) throw UsageError("input '" + name + "' is a single bit");
            assignment[name] = value != 0;
            continue;
        }
        // Bus form: name0, name1, ... with name0 least significant.
        unsigned width = 0;
        while (circuit.input_line(name + std::to_string(width))) ++width;
        if (width == 0) throw UsageError("no input or bus named '" + name + "'");
        if (width < 64 && (value >> width) != 0) {
            throw UsageError("value for bus '" + name + "' does not fit " + std::to_string(width) +
                             " bits");
        }
        for (unsigned i = 0; i < width; ++i) {
            assignment[name + std::to_string(i)] = i < 64 && ((value >> i) & 1u);
        }
    }
    for (const auto& n : names) {
        if (!assignment.contains(n)) throw UsageError("no value for input '" + n + "'");
    }
    return assignment;
}

std::vector<unsigned> parse_widths(const std::string& list) {
    std::vector<unsigned> widths;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const std::uint64_t v = parse_value(item);
        if (v < 2 || v > 4096) throw UsageError("width " + item + " outside 2..4096");
        widths.push_back(static_cast<unsigned>(v));
    }
    if (widths.empty()) throw UsageError("--widths needs at least one width");
    return widths;
}

void print_metrics(const MetricsReport& m, std::ostream& out) {
    out << "lines " << m.line_count << '\n'
        << "gates " << m.gate_count << '\n'
        << "garbage " << m.garbage_outputs << '\n'
        << "constants " << m.constant_inputs << '\n'
        << "primary_inputs " << m.primary_inputs << '\n'
        << "primary_outputs " << m.primary_outputs << '\n'
        << "auxiliary_outputs " << m.auxiliary_outputs << '\n'
        << "depth " << m.depth << '\n';
}

std::string conformance_for(const Circuit& circuit) {
    if (unsigned n = comparator_width(circuit)) return comparator_conformance(circuit, n);
    if (unsigned n = decoder_width(circuit)) return decoder_conformance(circuit, n);
    return "no published targets for this circuit interface\n";
}

void print_report(const VerificationReport& report, std::ostream& out) {
    out << "trials " << report.trials << '\n'
        << "mismatches " << report.mismatches << '\n'
        << "invariant_violations " << report.invariant_violations << '\n';
    if (report.counterexample) {
        const auto& c = *report.counterexample;
        out << "counterexample trial " << c.trial << " input " << bits_to_string(c.input)
            << " expected " << bits_to_string(c.expected) << " actual "
            << bits_to_string(c.actual) << '\n';
    }
    out << "result " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reversible comparator and decoder toolkit", "revcmp"};
    app.require_subcommand(1, 1);

    // build
    auto* build = app.add_subcommand("build", "Generate a circuit as .rnl");
    std::string build_kind;
    unsigned bits = 0;
    std::string cell_kind;
    std::string build_out;
    bool build_report = false;
    build->add_option("what", build_kind, "comparator | decoder | cell")
        ->required()
        ->check(CLI::IsMember({"comparator", "decoder", "cell"}));
    build->add_option("--bits", bits, "Operand or address width");
    build->add_option("--kind", cell_kind, "Cell for 'build cell': in | chain | final | decoder")
        ->check(CLI::IsMember({"in", "chain", "final", "decoder"}));
    build->add_option("-o,--output", build_out, "Output path (default stdout)");
    build->add_flag("--report", build_report, "Print the conformance report after building");

    // simulate
    auto* sim = app.add_subcommand("simulate", "Simulate a .rnl circuit on one input");
    std::string sim_file;
    std::vector<std::string> sets;
    sim->add_option("file", sim_file)->required();
    sim->add_option("--set", sets, "name=value; buses a0..ak accept 'a=value'");

    // verify
    auto* ver = app.add_subcommand("verify", "Check a .rnl circuit against an oracle");
    std::string ver_file;
    std::string oracle;
    bool exhaustive = false;
    std::size_t random_count = 0;
    std::uint64_t seed = 1;
    ver->add_option("file", ver_file)->required();
    ver->add_option("--oracle", oracle)->required()->check(CLI::IsMember({"compare", "decode"}));
    auto* ex_flag = ver->add_flag("--exhaustive", exhaustive);
    auto* rnd_opt = ver->add_option("--random", random_count, "Number of random trials");
    auto* seed_opt = ver->add_option("--seed", seed, "Random seed (default 1)");
    ex_flag->excludes(rnd_opt);

    // metrics
    auto* met = app.add_subcommand("metrics", "Gate, garbage and constant counts");
    std::string met_file;
    bool paper_targets = false;
    met->add_option("file", met_file)->required();
    met->add_flag("--paper-targets", paper_targets, "Compare against published targets");

    // synth
    auto* syn = app.add_subcommand("synth", "Single-gate realization search");
    std::string syn_gate;
    std::string syn_target;
    syn->add_option("--gate", syn_gate)->required();
    syn->add_option("--target", syn_target, "Target function or 'all'")->required();

    // tables
    auto* tab = app.add_subcommand("tables", "Cost comparison tables");
    std::string widths_list;
    std::string format = "csv";
    std::string tab_out;
    tab->add_option("--widths", widths_list)->required();
    tab->add_option("--format", format)->check(CLI::IsMember({"csv", "markdown"}));
    tab->add_option("-o,--output", tab_out);

    // gates
    auto* gates = app.add_subcommand("gates", "Gate library");
    bool list = false;
    gates->add_flag("--list", list)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (build->parsed()) {
            Circuit circuit = build_base_decoder();
            std::string report;
            if (build_kind == "comparator") {
                if (bits < 1 || bits > 64) throw UsageError("--bits must be 1..64");
                circuit = build_comparator(bits);
                report = comparator_conformance(circuit, bits);
            } else if (build_kind == "decoder") {
                if (bits < 2 || bits > kMaxDecoderBits) {
                    throw UsageError("--bits must be 2.." + std::to_string(kMaxDecoderBits));
                }
                circuit = build_decoder(bits);
                report = decoder_conformance(circuit, bits);
            } else {
                if (cell_kind.empty()) throw UsageError("'build cell' needs --kind");
                if (cell_kind == "in") circuit = build_in_cell();
                if (cell_kind == "chain") circuit = build_chain_cell();
                if (cell_kind == "final") circuit = build_final_cell();
                report = conformance_for(circuit);
            }
            write_output(build_out, export_rnl(circuit), out);
            if (build_report) out << report;
            return kExitOk;
        }
        if (sim->parsed()) {
            const Circuit circuit = load_circuit(sim_file);
            const auto result = simulate(circuit, resolve_assignment(circuit, sets));
            for (const auto& t : circuit.terminals()) {
                out << t.name << '=' << (result.lines[t.line] ? 1 : 0)
                    << (t.kind == TerminalKind::Auxiliary ? " (aux)" : "") << '\n';
            }
            return kExitOk;
        }
        if (ver->parsed()) {
            const Circuit circuit = load_circuit(ver_file);
            const std::size_t inputs = circuit.primary_input_lines().size();
            Strategy strategy = Exhaustive{};
            if (rnd_opt->count() > 0 || (!exhaustive && inputs > kExhaustiveInputLimit)) {
                strategy = Random{rnd_opt->count() > 0 ? random_count : 100000, seed};
            }
            if (const auto* r = std::get_if<Random>(&strategy)) {
                out << "strategy random " << r->count << " seed " << r->seed
                    << (seed_opt->count() == 0 ? " (default)" : "") << '\n';
            } else {
                out << "strategy exhaustive " << (std::uint64_t{1} << inputs) << '\n';
            }
            VerificationReport report;
            try {
                report = oracle == "compare" ? verify_comparator(circuit, strategy)
                                             : verify_decoder(circuit, strategy);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::Contract || e.kind() == ErrorKind::TooLarge) {
                    throw UsageError(e.what());
                }
                throw;
            }
            print_report(report, out);
            return report.passed() ? kExitOk : kExitVerificationFailed;
        }
        if (met->parsed()) {
            const Circuit circuit = load_circuit(met_file);
            print_metrics(metrics(circuit), out);
            if (paper_targets) out << conformance_for(circuit);
            return kExitOk;
        }
        if (syn->parsed()) {
            const ReversibleGate gate = library_gate(syn_gate);
            if (syn_target == "all") {
                out << render_capability_matrix(gate, enumerate_utilities(gate));
                return kExitOk;
            }
            const TargetFunction target = target_function(syn_target);
            const auto found = search_realization(gate, target);
            if (!found) {
                out << gate.name() << " -> " << target.name << ": NotFound (search exhausted)\n";
            } else {
                out << gate.name() << " -> " << target.name << ": " << describe(gate, target, *found)
                    << "; constants " << found->constant_count << ", nots " << found->not_count
                    << '\n';
            }
            return kExitOk;
        }
        if (tab->parsed()) {
            const auto widths = parse_widths(widths_list);
            write_output(tab_out,
                         render_tables(widths, format == "csv" ? TableFormat::Csv
                                                               : TableFormat::Markdown),
                         out);
            return kExitOk;
        }
        if (gates->parsed()) {
            for (auto name : library_gate_names()) {
                const ReversibleGate g = library_gate(name);
                out << g.name() << ' ' << g.width() << 'x' << g.width() << " (";
                for (std::size_t i = 0; i < g.width(); ++i) out << (i ? "," : "") << g.ports_in()[i];
                out << ") -> (";
                for (std::size_t i = 0; i < g.width(); ++i) out << (i ? "," : "") << g.ports_out()[i];
                out << ") perm [";
                for (std::size_t i = 0; i < g.perm().size(); ++i) out << (i ? "," : "") << g.perm()[i];
                out << "]\n";
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace revcmp
