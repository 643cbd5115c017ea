#include "revcmp/synth.hpp"

#include <sstream>
#include <tuple>

namespace revcmp {

namespace {

using Column = std::vector<bool>;  // one entry per target input row

struct Search {
    const ReversibleGate& gate;
    const TargetFunction& target;
    unsigned k;  // gate ports
    unsigned m;  // target inputs
    std::vector<unsigned> binding;
    std::vector<bool> used;
    std::optional<Realization> best;

    unsigned encode(const PortSource& s) const { return s.constant ? m + s.value : s.value; }

    std::vector<Column> gate_columns() const {
        const std::size_t rows = std::size_t{1} << m;
        std::vector<Column> cols(k, Column(rows));
        for (std::size_t row = 0; row < rows; ++row) {
            Code in = 0;
            for (unsigned p = 0; p < k; ++p) {
                const unsigned src = binding[p];
                const bool v = src < m ? ((row >> src) & 1u) != 0 : src == m + 1;
                in |= Code{v} << p;
            }
            const Code out = gate.perm()[in];
            for (unsigned p = 0; p < k; ++p) cols[p][row] = (out >> p) & 1u;
        }
        return cols;
    }

    Column target_column(unsigned o) const {
        Column col(target.table.size());
        for (std::size_t row = 0; row < col.size(); ++row) col[row] = (target.table[row] >> o) & 1u;
        return col;
    }

    // Minimal-NOT distinct tap assignment, lexicographic among equals.
    std::optional<std::vector<OutputTap>> choose_taps(const std::vector<Column>& cols) const {
        const unsigned outs = target.output_arity();
        std::vector<std::vector<OutputTap>> options(outs);
        for (unsigned o = 0; o < outs; ++o) {
            const Column want = target_column(o);
            for (unsigned p = 0; p < k; ++p) {
                Column inv = cols[p];
                inv.flip();
                if (cols[p] == want) options[o].push_back({p, false});
                if (inv == want) options[o].push_back({p, true});
            }
            if (options[o].empty()) return std::nullopt;
        }
        std::optional<std::vector<OutputTap>> best_taps;
        unsigned best_nots = 0;
        std::vector<OutputTap> current;
        std::vector<bool> taken(k, false);
        auto recurse = [&](auto&& self, unsigned o, unsigned nots) -> void {
            if (best_taps && nots > best_nots) return;
            if (o == outs) {
                if (!best_taps || nots < best_nots) {
                    best_taps = current;
                    best_nots = nots;
                }
                return;
            }
            for (const OutputTap& tap : options[o]) {
                if (taken[tap.port]) continue;
                taken[tap.port] = true;
                current.push_back(tap);
                self(self, o + 1, nots + (tap.inverted ? 1 : 0));
                current.pop_back();
                taken[tap.port] = false;
            }
        };
        recurse(recurse, 0, 0);
        return best_taps;
    }

    void consider() {
        const auto taps = choose_taps(gate_columns());
        if (!taps) return;
        Realization r{gate.name(), target.name, {}, *taps, k - m, 0};
        for (unsigned src : binding) {
            r.ports.push_back(src < m ? PortSource{false, src} : PortSource{true, src - m});
        }
        for (const auto& tap : *taps) r.not_count += tap.inverted ? 1 : 0;
        // Bindings arrive in lexicographic order, so only a strict improvement replaces.
        if (!best || std::tie(r.constant_count, r.not_count) <
                         std::tie(best->constant_count, best->not_count)) {
            best = std::move(r);
        }
    }

    void bind(unsigned port, unsigned placed) {
        if (best && best->not_count == 0) return;
        if (port == k) {
            if (placed == m) consider();
            return;
        }
        if (m - placed > k - port) return;
        for (unsigned src = 0; src < m + 2; ++src) {
            if (src < m && used[src]) continue;
            binding[port] = src;
            if (src < m) used[src] = true;
            bind(port + 1, placed + (src < m ? 1 : 0));
            if (src < m) used[src] = false;
        }
    }
};

}  // namespace

bool realizes(const ReversibleGate& gate, const TargetFunction& target, const Realization& r) {
    const unsigned m = target.arity();
    if (r.ports.size() != gate.width() || r.outputs.size() != target.output_arity()) return false;
    for (std::size_t row = 0; row < target.table.size(); ++row) {
        Code in = 0;
        for (unsigned p = 0; p < gate.width(); ++p) {
            const PortSource& s = r.ports[p];
            const bool v = s.constant ? s.value != 0 : (s.value < m && ((row >> s.value) & 1u));
            in |= Code{v} << p;
        }
        const Code out = gate.apply(in);
        for (std::size_t o = 0; o < r.outputs.size(); ++o) {
            const bool got = ((out >> r.outputs[o].port) & 1u) != r.outputs[o].inverted;
            const bool want = (target.table[row] >> o) & 1u;
            if (got != want) return false;
        }
    }
    return true;
}

std::optional<Realization> search_realization(const ReversibleGate& gate,
                                              const TargetFunction& target) {
    if (target.arity() > gate.width() || target.output_arity() > gate.width()) return std::nullopt;
    Search s{gate, target, gate.width(), target.arity(),
             std::vector<unsigned>(gate.width()), std::vector<bool>(target.arity()), std::nullopt};
    s.bind(0, 0);
    if (s.best && !realizes(gate, target, *s.best)) {
        throw Error(ErrorKind::Contract, "search produced a wiring that fails re-simulation");
    }
    return s.best;
}

std::vector<Capability> enumerate_utilities(const ReversibleGate& gate) {
    std::vector<Capability> rows;
    for (auto name : target_names()) {
        const TargetFunction target = target_function(name);
        rows.push_back({target.name, search_realization(gate, target)});
    }
    return rows;
}

std::string describe(const ReversibleGate& gate, const TargetFunction& target,
                     const Realization& r) {
    std::ostringstream out;
    out << "ports";
    for (std::size_t p = 0; p < r.ports.size(); ++p) {
        out << ' ' << gate.ports_in()[p] << "<-";
        if (r.ports[p].constant) {
            out << r.ports[p].value;
        } else {
            out << target.inputs[r.ports[p].value];
        }
    }
    out << "; outputs";
    for (std::size_t o = 0; o < r.outputs.size(); ++o) {
        out << ' ' << target.outputs[o] << '=' << (r.outputs[o].inverted ? "~" : "")
            << gate.ports_out()[r.outputs[o].port];
    }
    return out.str();
}

std::string render_capability_matrix(const ReversibleGate& gate,
                                     const std::vector<Capability>& rows) {
    std::ostringstream out;
    out << "gate " << gate.name() << '\n';
    for (const auto& row : rows) {
        out << "  " << row.target;
        for (std::size_t pad = row.target.size(); pad < 12; ++pad) out << ' ';
        if (!row.realization) {
            out << "N\n";
            continue;
        }
        const auto& r = *row.realization;
        out << "Y  constants " << r.constant_count << ", nots " << r.not_count << "  "
            << describe(gate, target_function(row.target), r) << '\n';
    }
    return out.str();
}

}  // namespace revcmp
