#pragma once

#include "scwave/cost_model.hpp"

#include <cstdint>

namespace scwave {

/// Baseband processing power: instructions (cost units) per unit time.
/// Strictly positive and finite by construction.
class ProcessingPower {
public:
    static ProcessingPower from_inst_per_second(double ips);
    static ProcessingPower from_inst_per_us(double ipus);

    double inst_per_second() const noexcept { return inst_per_second_; }
    double inst_per_us() const noexcept { return inst_per_second_ * 1e-6; }

private:
    explicit ProcessingPower(double ips) : inst_per_second_(ips) {}
    double inst_per_second_;
};

/// Conventional bit rate bits / t_sym [b/s], which ignores processing time.
/// Throws DomainError unless t_sym_s > 0.
double classic_rate(std::uint64_t bits, double t_sym_s);

/// Time to execute `work` on a processor of the given power [s].
double comp_time(CostUnits work, ProcessingPower power);

/// Minimum processing power that finishes `work` within one symbol period,
/// i.e. work / t_sym. Throws DomainError for t_sym_s <= 0 or zero work.
ProcessingPower required_power(CostUnits work, double t_sym_s);

/// Computation-aware bit rate: bits over the full per-symbol latency
/// t_comp_tx + t_sym + t_comp_rx [b/s]. Processing times must be >= 0 and
/// t_sym_s > 0 (DomainError otherwise). With zero processing times this
/// degenerates to classic_rate.
double sc_rate(std::uint64_t bits, double t_comp_tx_s, double t_sym_s, double t_comp_rx_s);

/// Computation-aware spectral efficiency rate/bandwidth [b/s/Hz].
/// Throws DomainError unless bandwidth_hz > 0.
double sc_se(double sc_rate_bps, double bandwidth_hz);

/// Closed-form spectral efficiency for the regime where both endpoints run
/// at exactly the minimum required power (t_comp_tx = t_comp_rx = t_sym):
/// bits / (3 * (n_fft + n_cp)). Equals sc_se(sc_rate(bits, t, t, t), W)
/// whenever n_cp = n_fft * delta_f * t_cp, independent of delta_f.
double sc_se_simplified(std::uint64_t bits, std::uint32_t n_fft, std::uint32_t n_cp);

/// Bundle of per-waveform figures computed by the comparison pipeline.
/// Times in seconds, rates in b/s, efficiencies in b/s/Hz.
struct ScMetrics {
    double t_comp_tx_s = 0;
    double t_comp_rx_s = 0;
    double classic_rate_bps = 0;
    double classic_se_bpshz = 0;
    double sc_rate_bps = 0;
    double sc_se_bpshz = 0;
};

/// Evaluates the full metric set for one waveform. Preconditions as in the
/// individual functions; additionally bandwidth_hz > 0.
ScMetrics compute_metrics(std::uint64_t bits, double t_comp_tx_s, double t_sym_s,
                          double t_comp_rx_s, double bandwidth_hz);

} // namespace scwave
