#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revcmp {

/// Measured per-cell power (uW) and delay (ns) of the comparator cells.
struct CellConstants {
    double in_power_uw = 3.358;
    double chain_power_uw = 85.816;
    double final_power_uw = 3.470;
    double in_delay_ns = 12.51;
    double chain_delay_ns = 115.010;
    double final_delay_ns = 1.608;
};

inline constexpr CellConstants kCellConstants{};

struct ComparatorCounts {
    long gates;
    long garbage;
    long constants;
    bool operator==(const ComparatorCounts&) const = default;
};

/// (6+4(n-1), 1+4(n-1), 2n+1) for n >= 2; (3, 1, 2) for n = 1.
ComparatorCounts predicted_metrics(unsigned n);

/// AsStated evaluates the closed form as printed (85.81n - 78.98 uW,
/// 115.010n - 100.854 ns). Recomputed sums the cell constants.
enum class FormulaMode { AsStated, Recomputed };

double predicted_power(unsigned n, FormulaMode mode);
double predicted_delay(unsigned n, FormulaMode mode);

struct DecoderCost {
    long gates;
    long garbage;
    bool operator==(const DecoderCost&) const = default;
};

/// approach 1: (2^n+2, n); approach 2: (2^n+1, n). n >= 2.
DecoderCost decoder_cost(unsigned n, int approach);

enum class Method { Anticipated, Thapliyal17, Vudadha18, Rangaraju7, Babu4, Morrison20 };

std::span<const Method> all_methods();
std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

enum class DelayUnit { Nanoseconds, Relative };

struct CostRow {
    Method method;
    unsigned n;
    std::optional<long> gates;
    std::optional<long> garbage;
    std::optional<long> constants;
    std::optional<double> power_uw;
    std::optional<double> delay;
    DelayUnit delay_unit = DelayUnit::Nanoseconds;
};

/// Formula evaluation for any method, Anticipated included (AsStated power
/// and delay). Morrison20 exists only as tabulated garbage counts for
/// n in {8, 16, 32}; NoData otherwise. Throws Range for n < 2.
CostRow rival_row(Method method, unsigned n);

/// 100 * (theirs - ours) / theirs, unrounded. Throws Range if theirs <= 0.
double improvement(double theirs, double ours);

/// Half-away-from-zero rounding to two decimals.
double round2(double value);

enum class Metric { Garbage, Constants };

struct ImprovementCell {
    Method reference;
    Metric metric;
    unsigned n;
    long theirs;
    long ours;
    double percent;                 // unrounded
    std::optional<double> printed;  // published percentage, when one exists
    /// Printed value differs from the computed one by more than 0.01.
    bool flagged() const;
};

/// The comparisons published for each width: garbage against Rangaraju7,
/// Thapliyal17, Vudadha18, Morrison20 and constants against Rangaraju7.
/// Morrison20 cells are skipped for widths without data.
std::vector<ImprovementCell> improvement_cells(std::span<const unsigned> widths);

enum class TableFormat { Csv, Markdown };

/// Three sections: per-method cost rows, improvement percentages with the
/// published value and a discrepancy flag, and both power/delay modes for
/// the proposed design with their gap. Throws Range for an empty width list.
std::string render_tables(std::span<const unsigned> widths, TableFormat format);

}  // namespace revcmp
