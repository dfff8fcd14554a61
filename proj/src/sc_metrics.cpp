#include "scwave/sc_metrics.hpp"

#include "scwave/errors.hpp"

#include <cmath>

namespace scwave {

namespace {

void require_finite_nonneg(double v, const char* what) {
    if (!std::isfinite(v) || v < 0) {
        throw DomainError(std::string(what) + " must be finite and >= 0");
    }
}

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0) {
        throw DomainError(std::string(what) + " must be finite and > 0");
    }
}

} // namespace

ProcessingPower ProcessingPower::from_inst_per_second(double ips) {
    require_positive(ips, "processing power");
    return ProcessingPower(ips);
}

ProcessingPower ProcessingPower::from_inst_per_us(double ipus) {
    require_positive(ipus, "processing power");
    return ProcessingPower(ipus * 1e6);
}

double classic_rate(std::uint64_t bits, double t_sym_s) {
    require_positive(t_sym_s, "t_sym");
    return static_cast<double>(bits) / t_sym_s;
}

double comp_time(CostUnits work, ProcessingPower power) {
    return static_cast<double>(work.count) / power.inst_per_second();
}

ProcessingPower required_power(CostUnits work, double t_sym_s) {
    require_positive(t_sym_s, "t_sym");
    if (work.count == 0) {
        throw DomainError("required_power: zero work has no positive power requirement");
    }
    return ProcessingPower::from_inst_per_second(static_cast<double>(work.count) / t_sym_s);
}

double sc_rate(std::uint64_t bits, double t_comp_tx_s, double t_sym_s, double t_comp_rx_s) {
    require_finite_nonneg(t_comp_tx_s, "t_comp_tx");
    require_finite_nonneg(t_comp_rx_s, "t_comp_rx");
    require_positive(t_sym_s, "t_sym");
    return static_cast<double>(bits) / (t_comp_tx_s + t_sym_s + t_comp_rx_s);
}

double sc_se(double sc_rate_bps, double bandwidth_hz) {
    require_finite_nonneg(sc_rate_bps, "sc_rate");
    require_positive(bandwidth_hz, "bandwidth");
    return sc_rate_bps / bandwidth_hz;
}

double sc_se_simplified(std::uint64_t bits, std::uint32_t n_fft, std::uint32_t n_cp) {
    if (n_fft == 0) {
        throw DomainError("sc_se_simplified: n_fft must be > 0");
    }
    return static_cast<double>(bits) / (3.0 * (static_cast<double>(n_fft) + n_cp));
}

ScMetrics compute_metrics(std::uint64_t bits, double t_comp_tx_s, double t_sym_s,
                          double t_comp_rx_s, double bandwidth_hz_) {
    require_positive(bandwidth_hz_, "bandwidth");
    ScMetrics m;
    m.t_comp_tx_s = t_comp_tx_s;
    m.t_comp_rx_s = t_comp_rx_s;
    m.classic_rate_bps = classic_rate(bits, t_sym_s);
    m.classic_se_bpshz = m.classic_rate_bps / bandwidth_hz_;
    m.sc_rate_bps = sc_rate(bits, t_comp_tx_s, t_sym_s, t_comp_rx_s);
    m.sc_se_bpshz = sc_se(m.sc_rate_bps, bandwidth_hz_);
    return m;
}

} // namespace scwave
