#include "scwave/comparison.hpp"

#include "scwave/cost_model.hpp"
#include "scwave/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace scwave {

namespace {

constexpr double kRealTimeSlack = 1e-12;

std::string default_label(const WaveformSpec& spec) {
    std::string label = to_string(spec.kind);
    if (spec.uses_index_modulation()) {
        label += "-";
        label += to_string(spec.variant);
    }
    return label;
}

bool in_pool_set(const ScenarioEntry& entry, PoolSet set) {
    if (set == PoolSet::all || !entry.spec.uses_index_modulation()) {
        return true; // plain OFDM belongs to every pool set
    }
    return (set == PoolSet::originals) == (entry.spec.variant == IxsVariant::original);
}

void validate_scenario(const ComparisonScenario& scenario,
                       const std::vector<std::string>& labels) {
    if (scenario.entries.empty()) {
        throw ValidationError("waveforms", "scenario must contain at least one entry");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < scenario.entries.size(); ++i) {
        const ScenarioEntry& entry = scenario.entries[i];
        entry.spec.validate();
        if (!seen.insert(labels[i]).second) {
            throw ValidationError("label", "duplicate entry label '" + labels[i] + "'");
        }
    }

    // One symbol clock for the whole comparison.
    const WaveformSpec& first = scenario.entries.front().spec;
    for (const ScenarioEntry& entry : scenario.entries) {
        const WaveformSpec& s = entry.spec;
        if (std::abs(s.delta_f - first.delta_f) > 1e-12 * first.delta_f) {
            throw ValidationError("delta_f", "all entries must share the subcarrier spacing");
        }
        if (std::abs(s.t_cp - first.t_cp) > 1e-12 * std::max(first.t_cp, 1e-30)) {
            throw ValidationError("t_cp", "all entries must share the cyclic prefix duration");
        }
        if (std::abs(s.t_sym - first.t_sym) > 1e-12 * first.t_sym) {
            throw ValidationError("t_sym", "all entries must share the symbol duration");
        }
    }

    if (scenario.mode == ComparisonMode::measured_runtimes) {
        for (std::size_t i = 0; i < scenario.entries.size(); ++i) {
            const auto& measured = scenario.entries[i].measured;
            if (!measured.has_value()) {
                throw ValidationError("measured", "entry '" + labels[i] +
                                      "' lacks measured runtimes");
            }
            for (double t : {measured->t_comp_tx_s, measured->t_comp_rx_s}) {
                if (!std::isfinite(t) || t < 0) {
                    throw ValidationError("measured", "runtimes must be finite and >= 0");
                }
                if (t > first.t_sym + kRealTimeSlack) {
                    throw ValidationError("measured",
                                          "runtime exceeds the symbol duration (entry '" +
                                          labels[i] + "')");
                }
            }
        }
    }
}

} // namespace

const char* to_string(ComparisonMode mode) {
    switch (mode) {
        case ComparisonMode::model_driven: return "model_driven";
        case ComparisonMode::measured_runtimes: return "measured_runtimes";
    }
    return "?";
}

const char* to_string(PoolSet set) {
    switch (set) {
        case PoolSet::all: return "all";
        case PoolSet::originals: return "originals";
        case PoolSet::optimized: return "optimized";
    }
    return "?";
}

ComparisonMode comparison_mode_from_string(const std::string& s) {
    if (s == "model_driven") return ComparisonMode::model_driven;
    if (s == "measured_runtimes") return ComparisonMode::measured_runtimes;
    throw ValidationError("mode", "unknown comparison mode '" + s + "'");
}

PoolSet pool_set_from_string(const std::string& s) {
    if (s == "all") return PoolSet::all;
    if (s == "originals") return PoolSet::originals;
    if (s == "optimized") return PoolSet::optimized;
    throw ValidationError("pool_set", "unknown pool set '" + s + "'");
}

ComparisonReport run(const ComparisonScenario& scenario) {
    std::vector<std::string> labels;
    labels.reserve(scenario.entries.size());
    for (const ScenarioEntry& entry : scenario.entries) {
        labels.push_back(entry.label.empty() ? default_label(entry.spec) : entry.label);
    }
    validate_scenario(scenario, labels);

    ComparisonReport report;
    report.mode = scenario.mode;
    report.pool_set = scenario.pool_set;
    report.t_sym_s = scenario.entries.front().spec.t_sym;

    std::vector<CostUnits> tx_work(scenario.entries.size());
    std::vector<CostUnits> rx_work(scenario.entries.size());

    if (scenario.mode == ComparisonMode::model_driven) {
        // Pool the minimum required powers of the selected entries,
        // independently per endpoint.
        double pool_tx = 0;
        double pool_rx = 0;
        bool any_pooled = false;
        for (std::size_t i = 0; i < scenario.entries.size(); ++i) {
            tx_work[i] = tx_complexity(scenario.entries[i].spec);
            rx_work[i] = rx_complexity(scenario.entries[i].spec);
            if (in_pool_set(scenario.entries[i], scenario.pool_set)) {
                any_pooled = true;
                pool_tx = std::max(pool_tx,
                                   required_power(tx_work[i], report.t_sym_s).inst_per_second());
                pool_rx = std::max(pool_rx,
                                   required_power(rx_work[i], report.t_sym_s).inst_per_second());
            }
        }
        if (!any_pooled) {
            throw ValidationError("pool_set", "no scenario entry matches the pool set");
        }
        report.pool_tx_ips = pool_tx;
        report.pool_rx_ips = pool_rx;
    }

    for (std::size_t i = 0; i < scenario.entries.size(); ++i) {
        const ScenarioEntry& entry = scenario.entries[i];
        ComparisonRow row;
        row.label = labels[i];
        row.kind = entry.spec.kind;
        row.variant = entry.spec.variant;
        row.bits = bits_per_symbol(entry.spec);
        row.bandwidth_hz = entry.spec.bandwidth_hz();

        double t_tx = 0;
        double t_rx = 0;
        if (scenario.mode == ComparisonMode::model_driven) {
            row.tx_complexity = tx_work[i].count;
            row.rx_complexity = rx_work[i].count;
            row.required_power_tx_ips =
                required_power(tx_work[i], report.t_sym_s).inst_per_second();
            row.required_power_rx_ips =
                required_power(rx_work[i], report.t_sym_s).inst_per_second();
            t_tx = comp_time(tx_work[i], ProcessingPower::from_inst_per_second(*report.pool_tx_ips));
            t_rx = comp_time(rx_work[i], ProcessingPower::from_inst_per_second(*report.pool_rx_ips));
        } else {
            t_tx = entry.measured->t_comp_tx_s;
            t_rx = entry.measured->t_comp_rx_s;
        }

        row.metrics = compute_metrics(row.bits, t_tx, report.t_sym_s, t_rx, row.bandwidth_hz);
        row.real_time_ok = t_tx <= report.t_sym_s + kRealTimeSlack &&
                           t_rx <= report.t_sym_s + kRealTimeSlack;
        report.rows.push_back(std::move(row));
    }
    return report;
}

SweepResult sweep(const ComparisonScenario& scenario, std::uint32_t n_min, std::uint32_t n_max) {
    auto power_of_two = [](std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; };
    if (!power_of_two(n_min) || n_min < 2) {
        throw ValidationError("n_min", "must be a power of two >= 2");
    }
    if (!power_of_two(n_max) || n_max < n_min) {
        throw ValidationError("n_max", "must be a power of two >= n_min");
    }
    if (scenario.mode != ComparisonMode::model_driven) {
        throw ValidationError("mode", "sweep requires a model-driven scenario");
    }
    if (scenario.entries.empty()) {
        throw ValidationError("waveforms", "scenario must contain at least one entry");
    }
    for (const ScenarioEntry& entry : scenario.entries) {
        entry.spec.validate();
        if (!entry.spec.ideal_setup()) {
            throw ValidationError("waveforms",
                                  "sweep entries must be ideal-setup templates "
                                  "(g=1, 2*k_active=n_sub, binary constellations)");
        }
    }

    SweepResult result;
    for (std::uint32_t n = n_min;; n <<= 1) {
        ComparisonScenario point = scenario;
        for (ScenarioEntry& entry : point.entries) {
            WaveformSpec& s = entry.spec;
            s.n_fft = n;
            s.n_data = n;
            s.g = 1;
            s.n_sub = n;
            s.k_active = s.uses_index_modulation() ? n / 2 : n;
        }
        const ComparisonReport report = run(point);
        for (const ComparisonRow& row : report.rows) {
            SweepPoint p;
            p.n = n;
            p.label = row.label;
            p.kind = row.kind;
            p.variant = row.variant;
            p.sc_rate_bps = row.metrics.sc_rate_bps;
            p.sc_se_bpshz = row.metrics.sc_se_bpshz;
            result.points.push_back(std::move(p));
        }
        if (n == n_max) {
            break; // n_min and n_max are powers of two, so n lands exactly
        }
    }
    std::sort(result.points.begin(), result.points.end(),
              [](const SweepPoint& a, const SweepPoint& b) {
                  if (a.n != b.n) return a.n < b.n;
                  return a.label < b.label;
              });
    return result;
}

} // namespace scwave
