#include "scwave/cost_model.hpp"

#include "scwave/binomial.hpp"
#include "scwave/errors.hpp"

namespace scwave {

namespace {

std::uint32_t exact_log2(std::uint32_t power_of_two) {
    std::uint32_t bits = 0;
    while ((1u << bits) < power_of_two) {
        ++bits;
    }
    return bits;
}

} // namespace

std::uint64_t bits_per_symbol(const WaveformSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case WaveformKind::ofdm:
            return static_cast<std::uint64_t>(spec.n_data) * exact_log2(spec.m_order);
        case WaveformKind::ofdm_im: {
            const std::uint64_t per_block =
                static_cast<std::uint64_t>(spec.k_active) * exact_log2(spec.m_order) +
                floor_log2_binom(spec.n_sub, spec.k_active);
            return spec.g * per_block;
        }
        case WaveformKind::dm_ofdm: {
            const std::uint64_t per_block =
                static_cast<std::uint64_t>(spec.k_active) * exact_log2(spec.m_a) +
                static_cast<std::uint64_t>(spec.n_sub - spec.k_active) * exact_log2(spec.m_b) +
                floor_log2_binom(spec.n_sub, spec.k_active);
            return spec.g * per_block;
        }
    }
    throw DomainError("bits_per_symbol: unhandled waveform kind");
}

std::uint64_t fft_cost_units(std::uint32_t n_fft) {
    if (n_fft < 2 || (n_fft & (n_fft - 1)) != 0) {
        throw ValidationError("n_fft", "must be a power of two >= 2");
    }
    return static_cast<std::uint64_t>(n_fft) * exact_log2(n_fft);
}

std::uint64_t detection_cost_units(const WaveformSpec& spec) {
    const std::uint64_t n = spec.n_fft;
    switch (spec.kind) {
        case WaveformKind::ofdm:
            return n;
        case WaveformKind::ofdm_im:
            // Ideal setups use the closed form pinned to the transform length;
            // otherwise one metric per constellation point per carrier.
            if (spec.ideal_setup()) {
                return 2 * n;
            }
            return static_cast<std::uint64_t>(spec.g) * spec.n_sub * spec.m_order;
        case WaveformKind::dm_ofdm:
            if (spec.ideal_setup()) {
                return 4 * n;
            }
            return static_cast<std::uint64_t>(spec.g) * spec.n_sub * (spec.m_a + spec.m_b);
    }
    throw DomainError("detection_cost_units: unhandled waveform kind");
}

std::uint64_t ixs_cost_units(const WaveformSpec& spec) {
    if (!spec.uses_index_modulation()) {
        return 0;
    }
    const std::uint64_t n = spec.n_fft;
    if (spec.variant == IxsVariant::original) {
        // Quadratic combinadic term. Ideal setups charge n_fft^2 (the closed
        // form the summary tables use); general setups charge g*n_sub*k.
        if (spec.ideal_setup()) {
            return n * n;
        }
        return static_cast<std::uint64_t>(spec.g) * spec.n_sub * spec.k_active;
    }
    // Table-assisted mapper: one scan per carrier.
    if (spec.ideal_setup()) {
        return n;
    }
    return static_cast<std::uint64_t>(spec.g) * spec.n_sub;
}

CostUnits tx_complexity(const WaveformSpec& spec) {
    spec.validate();
    return CostUnits{fft_cost_units(spec.n_fft) + ixs_cost_units(spec)};
}

CostUnits rx_complexity(const WaveformSpec& spec) {
    spec.validate();
    return CostUnits{fft_cost_units(spec.n_fft) + detection_cost_units(spec) +
                     ixs_cost_units(spec)};
}

double bandwidth_hz(const WaveformSpec& spec) {
    spec.validate();
    return spec.bandwidth_hz();
}

} // namespace scwave
