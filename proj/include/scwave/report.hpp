#pragma once

#include "scwave/comparison.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace scwave {

/// One table cell: display text produced by the rounding policy plus the
/// untouched full-precision value (NaN for purely textual cells).
struct RenderedCell {
    std::string text;
    double value = 0;

    friend bool operator==(const RenderedCell& a, const RenderedCell& b) {
        const bool values_match =
            a.value == b.value || (std::isnan(a.value) && std::isnan(b.value));
        return a.text == b.text && values_match;
    }
};

struct RenderedTable {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<RenderedCell>> rows;

    friend bool operator==(const RenderedTable& a, const RenderedTable& b) {
        return a.title == b.title && a.headers == b.headers && a.rows == b.rows;
    }
};

// ---------------------------------------------------------------------------
// Display rounding policy.
//
// Numeric cells are truncated toward zero at two decimals, after a one-part-
// per-billion relative nudge that absorbs binary representation error at
// integer boundaries (4480/1120 us must render "4", never "3.99"). Values
// that are integral after the nudge render without decimals. Model-driven
// SC rate/SE cells are recomputed from the *truncated* runtimes, matching
// how such summary tables are conventionally produced; the full-precision
// pipeline values stay available in every RenderedCell and in JSON/CSV.
// ---------------------------------------------------------------------------

/// Truncate toward zero at `decimals` with the representation-error guard.
double display_trunc(double v, int decimals);

/// Fixed-point text of display_trunc(v, decimals), trailing zeros kept
/// ("3.60"), integral values rendered without a decimal point ("72").
std::string format_display(double v, int decimals);

/// Shortest round-trip decimal form of v (locale-independent).
std::string format_full(double v);

/// Metrics-by-waveform table (rows = metrics, columns = waveforms) for a
/// model-driven report: complexities, required powers, runtimes, SC rate
/// and SC spectral efficiency. Throws ValidationError for measured reports.
RenderedTable render_model_table(const ComparisonReport& report);

/// Waveform-by-metrics table (rows = entries) for a measured-runtimes
/// report: processing delays, symbol time, rate and spectral efficiency.
RenderedTable render_measured_table(const ComparisonReport& report);

/// Dispatches on report.mode.
RenderedTable render_comparison(const ComparisonReport& report);

/// Bundled reference tables (see builtin_scenarios.hpp).
RenderedTable render_table_i();
RenderedTable render_table_iii();

/// Plain-text rendering with aligned columns, trailing newline, '\n' endings.
std::string to_text(const RenderedTable& table);

/// CSV for a comparison report: one row per entry, full-precision values,
/// empty cells for fields absent in the report's mode. Deterministic:
/// byte-identical output for identical reports. Trailing newline.
std::string comparison_csv(const ComparisonReport& report);

/// Plot-ready CSV for a sweep, header exactly
/// "n,waveform,variant,sc_rate_bus,sc_se_bshz", rows sorted by (n, waveform).
/// Rates in b/us, efficiencies in b/s/Hz, full precision. Trailing newline.
std::string sweep_csv(const SweepResult& result);

/// Writes content to path, creating parent directories. Throws IoError.
void write_file(const std::string& path, const std::string& content);

} // namespace scwave
