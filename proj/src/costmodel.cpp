#include "revcmp/costmodel.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "revcmp/error.hpp"

namespace revcmp {

namespace {

constexpr std::array kMethods{Method::Anticipated, Method::Thapliyal17, Method::Vudadha18,
                              Method::Rangaraju7,  Method::Babu4,       Method::Morrison20};

// Tabulated values without a published formula.
const std::map<unsigned, long> kMorrisonGarbage{{8, 39}, {16, 79}, {32, 159}};
// Fits 3n-1 at all three points; kept as data.
const std::map<unsigned, long> kRangarajuConstants{{8, 23}, {16, 47}, {32, 95}};

struct Printed {
    Method reference;
    Metric metric;
    unsigned n;
    double percent;
};

constexpr std::array<Printed, 15> kPrintedImprovements{{
    {Method::Rangaraju7, Metric::Garbage, 8, 19.44},
    {Method::Rangaraju7, Metric::Constants, 8, 26.08},
    {Method::Rangaraju7, Metric::Garbage, 16, 19.73},
    {Method::Rangaraju7, Metric::Constants, 16, 29.78},
    {Method::Rangaraju7, Metric::Garbage, 32, 19.87},
    {Method::Rangaraju7, Metric::Constants, 32, 31.57},
    {Method::Thapliyal17, Metric::Garbage, 8, 30.95},
    {Method::Thapliyal17, Metric::Garbage, 16, 32.22},
    {Method::Thapliyal17, Metric::Garbage, 32, 32.79},
    {Method::Vudadha18, Metric::Garbage, 8, 19.44},
    {Method::Vudadha18, Metric::Garbage, 16, 19.73},
    {Method::Vudadha18, Metric::Garbage, 32, 19.87},
    {Method::Morrison20, Metric::Garbage, 8, 25.64},
    {Method::Morrison20, Metric::Garbage, 16, 22.78},
    {Method::Morrison20, Metric::Garbage, 32, 21.13},
}};

void require_width(unsigned n, unsigned min) {
    if (n < min) {
        throw Error(ErrorKind::Range, "width " + std::to_string(n) + " below minimum " +
                                          std::to_string(min));
    }
}

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string_view metric_name(Metric metric) { return metric == Metric::Garbage ? "GO" : "CI"; }

std::string_view unit_name(DelayUnit unit) {
    return unit == DelayUnit::Nanoseconds ? "ns" : "relative";
}

class TableWriter {
public:
    TableWriter(std::ostringstream& out, TableFormat format) : out_(out), format_(format) {}

    void section(std::string_view title, const std::vector<std::string>& header) {
        if (sections_++ > 0) out_ << '\n';
        if (format_ == TableFormat::Csv) {
            out_ << "# " << title << '\n';
            row(header);
        } else {
            out_ << "### " << title << "\n\n";
            row(header);
            std::vector<std::string> rule(header.size(), "---");
            row(rule);
        }
    }

    void row(const std::vector<std::string>& cells) {
        if (format_ == TableFormat::Csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
            out_ << '\n';
        } else {
            out_ << '|';
            for (const auto& cell : cells) out_ << ' ' << (cell.empty() ? "--" : cell) << " |";
            out_ << '\n';
        }
    }

private:
    std::ostringstream& out_;
    TableFormat format_;
    int sections_ = 0;
};

template <typename T, typename F>
std::string opt(const std::optional<T>& value, F&& fmt) {
    return value ? fmt(*value) : std::string{};
}

}  // namespace

ComparatorCounts predicted_metrics(unsigned n) {
    require_width(n, 1);
    if (n == 1) return {3, 1, 2};
    const long w = n;
    return {6 + 4 * (w - 1), 1 + 4 * (w - 1), 2 * w + 1};
}

double predicted_power(unsigned n, FormulaMode mode) {
    require_width(n, 1);
    if (mode == FormulaMode::AsStated) return 85.81 * n - 78.98;
    const auto& k = kCellConstants;
    if (n == 1) return k.in_power_uw;
    return k.in_power_uw + (n - 1) * k.chain_power_uw + k.final_power_uw;
}

double predicted_delay(unsigned n, FormulaMode mode) {
    require_width(n, 1);
    if (mode == FormulaMode::AsStated) return 115.010 * n - 100.854;
    const auto& k = kCellConstants;
    if (n == 1) return k.in_delay_ns;
    return k.in_delay_ns + (n - 1) * k.chain_delay_ns + k.final_delay_ns;
}

DecoderCost decoder_cost(unsigned n, int approach) {
    require_width(n, 2);
    if (n > 62) throw Error(ErrorKind::Range, "decoder width too large");
    if (approach != 1 && approach != 2) {
        throw Error(ErrorKind::Range, "decoder approach must be 1 or 2");
    }
    const long lines = 1L << n;
    return {lines + (approach == 1 ? 2 : 1), static_cast<long>(n)};
}

std::span<const Method> all_methods() { return kMethods; }

std::string_view method_name(Method method) {
    switch (method) {
    case Method::Anticipated: return "Anticipated";
    case Method::Thapliyal17: return "Thapliyal17";
    case Method::Vudadha18: return "Vudadha18";
    case Method::Rangaraju7: return "Rangaraju7";
    case Method::Babu4: return "Babu4";
    case Method::Morrison20: return "Morrison20";
    }
    return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : kMethods) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

CostRow rival_row(Method method, unsigned n) {
    require_width(n, 2);
    const long w = n;
    const double x = n;
    CostRow row{method, n, {}, {}, {}, {}, {}, DelayUnit::Nanoseconds};
    switch (method) {
    case Method::Anticipated: {
        const ComparatorCounts c = predicted_metrics(n);
        row.gates = c.gates;
        row.garbage = c.garbage;
        row.constants = c.constants;
        row.power_uw = predicted_power(n, FormulaMode::AsStated);
        row.delay = predicted_delay(n, FormulaMode::AsStated);
        break;
    }
    case Method::Thapliyal17:
        row.gates = 9 * w;
        row.garbage = 6 * w - 6;
        row.power_uw = 268.23 * x - 239.2;
        row.delay = 0.23 * std::log2(x) + 0.1;
        row.delay_unit = DelayUnit::Relative;
        break;
    case Method::Vudadha18:
        row.gates = 4 * w - 2;
        row.garbage = 5 * w - 4;
        row.power_uw = 122.36 * x - 60.36;
        row.delay = 0.09 * std::log2(x) + 0.2;
        row.delay_unit = DelayUnit::Relative;
        break;
    case Method::Rangaraju7:
        row.gates = 7 * w - 4;
        row.garbage = 5 * w - 4;
        if (auto it = kRangarajuConstants.find(n); it != kRangarajuConstants.end()) {
            row.constants = it->second;
        }
        row.power_uw = 182.53 * x + 76.55;
        row.delay = 0.2 * x - 0.16;
        break;
    case Method::Babu4:
        row.gates = 3 * w;
        row.garbage = 4 * w - 3;
        row.constants = 3;
        row.power_uw = 117.76 * x - 32.94;
        row.delay = 0.15 * x - 0.03;
        break;
    case Method::Morrison20: {
        auto it = kMorrisonGarbage.find(n);
        if (it == kMorrisonGarbage.end()) {
            throw Error(ErrorKind::NoData, "Morrison20 has data only for n = 8, 16, 32");
        }
        row.garbage = it->second;
        row.delay.reset();
        break;
    }
    }
    return row;
}

double improvement(double theirs, double ours) {
    if (!(theirs > 0)) throw Error(ErrorKind::Range, "reference value must be positive");
    return 100.0 * (theirs - ours) / theirs;
}

double round2(double value) { return std::round(value * 100.0) / 100.0; }

bool ImprovementCell::flagged() const {
    return printed && std::fabs(percent - *printed) > 0.01 + 1e-9;
}

std::vector<ImprovementCell> improvement_cells(std::span<const unsigned> widths) {
    constexpr std::array<std::pair<Method, Metric>, 5> kComparisons{{
        {Method::Rangaraju7, Metric::Garbage},
        {Method::Rangaraju7, Metric::Constants},
        {Method::Thapliyal17, Metric::Garbage},
        {Method::Vudadha18, Metric::Garbage},
        {Method::Morrison20, Metric::Garbage},
    }};
    std::vector<ImprovementCell> cells;
    for (const auto& [reference, metric] : kComparisons) {
        for (unsigned n : widths) {
            if (reference == Method::Morrison20 && !kMorrisonGarbage.contains(n)) continue;
            const CostRow theirs_row = rival_row(reference, n);
            const CostRow ours_row = rival_row(Method::Anticipated, n);
            const auto& theirs = metric == Metric::Garbage ? theirs_row.garbage : theirs_row.constants;
            const auto& ours = metric == Metric::Garbage ? ours_row.garbage : ours_row.constants;
            if (!theirs || !ours) continue;
            ImprovementCell cell{reference, metric, n, *theirs, *ours,
                                 improvement(static_cast<double>(*theirs), static_cast<double>(*ours)),
                                 std::nullopt};
            for (const auto& p : kPrintedImprovements) {
                if (p.reference == reference && p.metric == metric && p.n == n) cell.printed = p.percent;
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

std::string render_tables(std::span<const unsigned> widths, TableFormat format) {
    if (widths.empty()) throw Error(ErrorKind::Range, "at least one width is required");
    std::ostringstream out;
    TableWriter table(out, format);
    auto count = [](long v) { return std::to_string(v); };
    auto three = [](double v) { return fixed(v, 3); };

    table.section("comparator cost by method",
                  {"method", "n", "NOG", "GO", "CI", "power_uW", "delay", "delay_unit"});
    for (Method method : kMethods) {
        for (unsigned n : widths) {
            if (method == Method::Morrison20 && !kMorrisonGarbage.contains(n)) continue;
            const CostRow row = rival_row(method, n);
            table.row({std::string(method_name(method)), std::to_string(n), opt(row.gates, count),
                       opt(row.garbage, count), opt(row.constants, count),
                       opt(row.power_uw, three), opt(row.delay, three),
                       row.delay ? std::string(unit_name(row.delay_unit)) : std::string{}});
        }
    }

    table.section("improvement of Anticipated over each method",
                  {"reference", "metric", "n", "theirs", "ours", "improvement_pct", "printed_pct",
                   "discrepancy"});
    for (const auto& cell : improvement_cells(widths)) {
        table.row({std::string(method_name(cell.reference)), std::string(metric_name(cell.metric)),
                   std::to_string(cell.n), std::to_string(cell.theirs), std::to_string(cell.ours),
                   fixed(round2(cell.percent), 2),
                   opt(cell.printed, [](double v) { return fixed(v, 2); }),
                   cell.flagged() ? "FLAG" : ""});
    }

    table.section("Anticipated power and delay, closed form vs cell sum",
                  {"n", "power_as_stated_uW", "power_recomputed_uW", "power_gap_uW",
                   "delay_as_stated_ns", "delay_recomputed_ns", "delay_gap_ns"});
    for (unsigned n : widths) {
        const double pa = predicted_power(n, FormulaMode::AsStated);
        const double pr = predicted_power(n, FormulaMode::Recomputed);
        const double da = predicted_delay(n, FormulaMode::AsStated);
        const double dr = predicted_delay(n, FormulaMode::Recomputed);
        table.row({std::to_string(n), three(pa), three(pr), three(pa - pr), three(da), three(dr),
                   three(da - dr)});
    }
    return out.str();
}

}  // namespace revcmp
