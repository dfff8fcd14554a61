#pragma once

#include "scwave/sc_metrics.hpp"
#include "scwave/waveform_spec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scwave {

/// How per-waveform processing times are obtained.
enum class ComparisonMode {
    model_driven,      ///< complexity model + pooled minimum required power
    measured_runtimes, ///< caller-supplied processing times fed in directly
};

/// Which scenario entries define the pooled processing power in
/// model-driven mode. The pool is always the per-endpoint maximum of the
/// selected entries' required powers; every entry is then evaluated against
/// that pool. Plain OFDM entries belong to every pool set.
enum class PoolSet {
    all,
    originals,
    optimized,
};

const char* to_string(ComparisonMode mode);
const char* to_string(PoolSet set);
ComparisonMode comparison_mode_from_string(const std::string& s);
PoolSet pool_set_from_string(const std::string& s);

/// Caller-measured per-symbol processing times [s].
struct MeasuredRuntimes {
    double t_comp_tx_s = 0;
    double t_comp_rx_s = 0;
};

struct ScenarioEntry {
    std::string label; ///< unique row name; defaults to kind[-variant]
    WaveformSpec spec;
    std::optional<MeasuredRuntimes> measured; ///< required in measured mode
};

/// A set of waveforms to compare under one symbol clock. All entries must
/// share delta_f, t_cp and t_sym; geometry and constellations may differ.
struct ComparisonScenario {
    ComparisonMode mode = ComparisonMode::model_driven;
    PoolSet pool_set = PoolSet::all;
    std::vector<ScenarioEntry> entries;
};

struct ComparisonRow {
    std::string label;
    WaveformKind kind = WaveformKind::ofdm;
    IxsVariant variant = IxsVariant::original;
    std::uint64_t bits = 0;
    double bandwidth_hz = 0;
    std::optional<std::uint64_t> tx_complexity; ///< model mode only
    std::optional<std::uint64_t> rx_complexity;
    std::optional<double> required_power_tx_ips; ///< inst/s, model mode only
    std::optional<double> required_power_rx_ips;
    ScMetrics metrics;
    bool real_time_ok = true; ///< t_comp <= t_sym + 1e-12 at both endpoints
};

struct ComparisonReport {
    ComparisonMode mode = ComparisonMode::model_driven;
    PoolSet pool_set = PoolSet::all;
    double t_sym_s = 0;
    std::optional<double> pool_tx_ips; ///< pooled power, model mode only
    std::optional<double> pool_rx_ips;
    std::vector<ComparisonRow> rows;   ///< scenario order preserved
};

/// Five-step comparison: fix the symbol clock, evaluate per-waveform
/// complexity, derive each entry's minimum required power, pool the selected
/// entries' requirements per endpoint (maximum), then score every entry
/// against the pool. In measured mode steps 2-4 are skipped and the supplied
/// runtimes are used directly (each must satisfy 0 <= t <= t_sym).
/// Throws ValidationError on malformed scenarios.
ComparisonReport run(const ComparisonScenario& scenario);

struct SweepPoint {
    std::uint32_t n = 0;
    std::string label;
    WaveformKind kind = WaveformKind::ofdm;
    IxsVariant variant = IxsVariant::original;
    double sc_rate_bps = 0;
    double sc_se_bpshz = 0;
};

/// Rows sorted by (n, label); label order is lexicographic.
struct SweepResult {
    std::vector<SweepPoint> points;
};

/// Evaluates the model-driven pipeline across transform sizes. Every sweep
/// point uses n_fft = n_data = N with the scenario's timing (delta_f, t_cp,
/// t_sym) kept fixed, and the pool is recomputed per N from the scenario's
/// pool set. Entries must be ideal-setup templates (g = 1, half the carriers
/// active, binary constellations); they are rescaled to each N. n_min and
/// n_max must be powers of two with 2 <= n_min <= n_max.
SweepResult sweep(const ComparisonScenario& scenario, std::uint32_t n_min, std::uint32_t n_max);

} // namespace scwave
