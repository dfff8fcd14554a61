#pragma once

#include "scwave/waveform_spec.hpp"

#include <cstdint>

namespace scwave {

/// Abstract per-symbol computational work, measured in cost units
/// (one unit ~ one complex butterfly / lookup / metric evaluation).
/// Non-negative by construction and closed under addition.
struct CostUnits {
    std::uint64_t count = 0;

    constexpr CostUnits() = default;
    constexpr explicit CostUnits(std::uint64_t c) : count(c) {}

    friend constexpr CostUnits operator+(CostUnits a, CostUnits b) {
        return CostUnits{a.count + b.count};
    }
    CostUnits& operator+=(CostUnits other) {
        count += other.count;
        return *this;
    }
    friend constexpr bool operator==(CostUnits a, CostUnits b) { return a.count == b.count; }
    friend constexpr bool operator!=(CostUnits a, CostUnits b) { return a.count != b.count; }
    friend constexpr bool operator<(CostUnits a, CostUnits b) { return a.count < b.count; }
    friend constexpr bool operator<=(CostUnits a, CostUnits b) { return a.count <= b.count; }
};

/// Payload bits carried by one symbol of the given waveform.
///
/// ofdm:    n_data * log2(M)
/// ofdm_im: g * (k * log2(M) + floor(log2 C(n_sub, k)))
/// dm_ofdm: g * (k * log2(M_A) + (n_sub - k) * log2(M_B) + floor(log2 C(n_sub, k)))
///
/// The index term is floored per subblock; the binomial is evaluated with
/// exact big-integer arithmetic. Throws ValidationError on an invalid spec.
std::uint64_t bits_per_symbol(const WaveformSpec& spec);

/// Transmitter work per symbol, in cost units, evaluated at N = n_fft:
/// inverse transform N*log2(N) plus the index-selection mapping term
/// (zero for plain OFDM; see ixs_cost_units for the variants).
CostUnits tx_complexity(const WaveformSpec& spec);

/// Receiver work per symbol, in cost units, evaluated at N = n_fft:
/// forward transform N*log2(N) plus detection plus index de-mapping.
CostUnits rx_complexity(const WaveformSpec& spec);

/// Occupied bandwidth n_fft * delta_f [Hz].
double bandwidth_hz(const WaveformSpec& spec);

// ---------------------------------------------------------------------------
// Individual model terms. The executing baseband path charges exactly these,
// which is what keeps the abstract model and the stage ledgers in agreement.
// ---------------------------------------------------------------------------

/// Transform work N*log2(N); N must be a power of two >= 2.
std::uint64_t fft_cost_units(std::uint32_t n_fft);

/// Detection work. Ideal-setup specs use the closed forms pinned to the
/// transform length: n_fft (ofdm), 2*n_fft (ofdm_im), 4*n_fft (dm_ofdm).
/// Non-ideal index-modulated specs charge the per-carrier metric counts
/// g*n_sub*M and g*n_sub*(M_A + M_B); plain OFDM always charges n_fft.
std::uint64_t detection_cost_units(const WaveformSpec& spec);

/// Index-selection mapping work (zero for plain OFDM).
/// original:  n_fft^2 for ideal-setup specs, else g*n_sub*k_active.
/// optimized: n_fft   for ideal-setup specs, else g*n_sub (one scan per carrier).
std::uint64_t ixs_cost_units(const WaveformSpec& spec);

} // namespace scwave
