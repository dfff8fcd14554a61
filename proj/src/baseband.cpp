#include "scwave/baseband.hpp"

#include "scwave/errors.hpp"
#include "scwave/ixs_mapper.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace scwave {

namespace {

std::uint32_t exact_log2(std::uint32_t power_of_two) {
    std::uint32_t bits = 0;
    while ((1u << bits) < power_of_two) {
        ++bits;
    }
    return bits;
}

std::uint32_t gray_encode(std::uint32_t b) {
    return b ^ (b >> 1);
}

std::uint32_t gray_decode(std::uint32_t g) {
    g ^= g >> 1;
    g ^= g >> 2;
    g ^= g >> 4;
    g ^= g >> 8;
    g ^= g >> 16;
    return g;
}

// Gray-coded rectangular QAM of order M, unit average energy. The I axis
// takes ceil(log2 M / 2) bits, the Q axis the rest; each axis is a Gray PAM
// with descending amplitudes so that the all-zero word maps to the most
// positive point (M = 2 gives BPSK with bit 0 -> +1).
struct QamGrid {
    std::uint32_t bits_i;
    std::uint32_t bits_q;
    std::uint32_t levels_i;
    std::uint32_t levels_q;
    double scale;

    explicit QamGrid(std::uint32_t m_order) {
        const std::uint32_t m = exact_log2(m_order);
        bits_i = (m + 1) / 2;
        bits_q = m - bits_i;
        levels_i = 1u << bits_i;
        levels_q = 1u << bits_q;
        const double ei = (static_cast<double>(levels_i) * levels_i - 1.0) / 3.0;
        const double eq = (static_cast<double>(levels_q) * levels_q - 1.0) / 3.0;
        scale = 1.0 / std::sqrt(ei + eq);
    }

    std::uint32_t bits_per_point() const { return bits_i + bits_q; }

    Cplx map(const BitVector& bits, std::size_t offset) const {
        std::uint32_t wi = 0;
        for (std::uint32_t b = 0; b < bits_i; ++b) {
            wi = (wi << 1) | bits[offset + b];
        }
        std::uint32_t wq = 0;
        for (std::uint32_t b = 0; b < bits_q; ++b) {
            wq = (wq << 1) | bits[offset + bits_i + b];
        }
        const double ai = static_cast<double>(levels_i - 1) - 2.0 * gray_decode(wi);
        const double aq = static_cast<double>(levels_q - 1) - 2.0 * gray_decode(wq);
        return Cplx(ai * scale, levels_q > 1 ? aq * scale : 0.0);
    }

    void demap(Cplx y, BitVector& out) const {
        append_axis(y.real(), levels_i, bits_i, out);
        if (bits_q > 0) {
            append_axis(y.imag(), levels_q, bits_q, out);
        }
    }

private:
    void append_axis(double value, std::uint32_t levels, std::uint32_t nbits,
                     BitVector& out) const {
        const double raw = (static_cast<double>(levels - 1) - value / scale) / 2.0;
        long level = std::lround(raw);
        level = std::clamp(level, 0l, static_cast<long>(levels - 1));
        const std::uint32_t word = gray_encode(static_cast<std::uint32_t>(level));
        for (std::uint32_t b = 0; b < nbits; ++b) {
            out.push_back(static_cast<std::uint8_t>((word >> (nbits - 1 - b)) & 1u));
        }
    }
};

BigUint read_rank(const BitVector& bits, std::size_t offset, std::uint32_t nbits) {
    BigUint rank = 0;
    for (std::uint32_t b = 0; b < nbits; ++b) {
        rank <<= 1;
        if (bits[offset + b]) {
            rank |= 1;
        }
    }
    return rank;
}

void append_rank_bits(const BigUint& rank, std::uint32_t nbits, BitVector& out) {
    for (std::uint32_t b = 0; b < nbits; ++b) {
        out.push_back(boost::multiprecision::bit_test(rank, nbits - 1 - b) ? 1 : 0);
    }
}

void validate_for_baseband(const WaveformSpec& spec) {
    spec.validate();
    if (spec.kind == WaveformKind::dm_ofdm) {
        // The dual-mode grid is defined for binary modes only: mode A on the
        // real axis, mode B on the imaginary axis.
        if (spec.m_a != 2) {
            throw ValidationError("m_a", "executing dual-mode path supports order 2 only");
        }
        if (spec.m_b != 2) {
            throw ValidationError("m_b", "executing dual-mode path supports order 2 only");
        }
    }
}

// Indices of the `take` frequency bins with the largest metric, ties broken
// toward the lower index; returned in ascending order.
std::vector<std::uint32_t> top_indices(const std::vector<double>& metric, std::uint32_t take) {
    std::vector<std::uint32_t> order(metric.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return metric[a] > metric[b]; });
    std::vector<std::uint32_t> chosen(order.begin(), order.begin() + take);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

TransmitResult transmit(const BitVector& bits, const WaveformSpec& spec) {
    validate_for_baseband(spec);
    const std::uint64_t expected = bits_per_symbol(spec);
    if (bits.size() != expected) {
        throw ValidationError("bits", "payload must contain exactly " +
                              std::to_string(expected) + " bits");
    }
    const std::uint32_t cp = spec.cp_len();

    TransmitResult result;
    std::vector<Cplx> freq(spec.n_fft, Cplx(0.0, 0.0));
    std::size_t cursor = 0;

    switch (spec.kind) {
        case WaveformKind::ofdm: {
            const QamGrid grid(spec.m_order);
            for (std::uint32_t j = 0; j < spec.n_data; ++j) {
                freq[j] = grid.map(bits, cursor);
                cursor += grid.bits_per_point();
            }
            break;
        }
        case WaveformKind::ofdm_im: {
            const QamGrid grid(spec.m_order);
            IxsMapper mapper(spec.n_sub, spec.k_active, spec.variant);
            for (std::uint32_t block = 0; block < spec.g; ++block) {
                const std::uint32_t base = block * spec.n_sub;
                const BigUint rank = read_rank(bits, cursor, mapper.index_bits());
                cursor += mapper.index_bits();
                const ActivationPattern pattern = mapper.unrank(rank);
                for (std::uint32_t idx : pattern.positions) {
                    freq[base + idx] = grid.map(bits, cursor);
                    cursor += grid.bits_per_point();
                }
            }
            result.ledger.ixs_units = mapper.steps();
            break;
        }
        case WaveformKind::dm_ofdm: {
            IxsMapper mapper(spec.n_sub, spec.k_active, spec.variant);
            for (std::uint32_t block = 0; block < spec.g; ++block) {
                const std::uint32_t base = block * spec.n_sub;
                const BigUint rank = read_rank(bits, cursor, mapper.index_bits());
                cursor += mapper.index_bits();
                const ActivationPattern pattern = mapper.unrank(rank);
                // Mode A (real axis) on the selected set...
                for (std::uint32_t idx : pattern.positions) {
                    freq[base + idx] = Cplx(bits[cursor++] ? -1.0 : 1.0, 0.0);
                }
                // ...mode B (imaginary axis) on the complement.
                std::size_t next_active = 0;
                for (std::uint32_t idx = 0; idx < spec.n_sub; ++idx) {
                    if (next_active < pattern.positions.size() &&
                        pattern.positions[next_active] == idx) {
                        ++next_active;
                        continue;
                    }
                    freq[base + idx] = Cplx(0.0, bits[cursor++] ? -1.0 : 1.0);
                }
            }
            result.ledger.ixs_units = mapper.steps();
            break;
        }
    }

    ifft_inplace(freq);
    result.ledger.ifft_units = fft_cost_units(spec.n_fft);

    result.frame.n_fft = spec.n_fft;
    result.frame.cp_len = cp;
    result.frame.samples.reserve(cp + spec.n_fft);
    result.frame.samples.insert(result.frame.samples.end(), freq.end() - cp, freq.end());
    result.frame.samples.insert(result.frame.samples.end(), freq.begin(), freq.end());
    return result;
}

ReceiveResult receive(const BasebandFrame& frame, const WaveformSpec& spec) {
    validate_for_baseband(spec);
    const std::uint32_t cp = spec.cp_len();
    if (frame.n_fft != spec.n_fft) {
        throw ValidationError("frame", "transform length does not match the waveform spec");
    }
    if (frame.cp_len != cp) {
        throw ValidationError("frame", "cyclic prefix length does not match the waveform spec");
    }
    if (frame.samples.size() != static_cast<std::size_t>(cp) + spec.n_fft) {
        throw ValidationError("frame", "sample count must be cp_len + n_fft");
    }

    std::vector<Cplx> freq(frame.samples.begin() + cp, frame.samples.end());
    fft_inplace(freq);

    ReceiveResult result;
    result.ledger.fft_units = fft_cost_units(spec.n_fft);
    result.ledger.detect_units = detection_cost_units(spec);
    result.bits.reserve(bits_per_symbol(spec));

    switch (spec.kind) {
        case WaveformKind::ofdm: {
            const QamGrid grid(spec.m_order);
            for (std::uint32_t j = 0; j < spec.n_data; ++j) {
                grid.demap(freq[j], result.bits);
            }
            break;
        }
        case WaveformKind::ofdm_im: {
            const QamGrid grid(spec.m_order);
            IxsMapper mapper(spec.n_sub, spec.k_active, spec.variant);
            for (std::uint32_t block = 0; block < spec.g; ++block) {
                const std::uint32_t base = block * spec.n_sub;
                std::vector<double> magnitude(spec.n_sub);
                for (std::uint32_t idx = 0; idx < spec.n_sub; ++idx) {
                    magnitude[idx] = std::abs(freq[base + idx]);
                }
                const auto active = top_indices(magnitude, spec.k_active);
                BigUint rank;
                try {
                    rank = mapper.rank(active);
                } catch (const DomainError&) {
                    throw DetectionError("subblock " + std::to_string(block) +
                                         ": unreachable activation pattern");
                }
                append_rank_bits(rank, mapper.index_bits(), result.bits);
                for (std::uint32_t idx : active) {
                    grid.demap(freq[base + idx], result.bits);
                }
            }
            result.ledger.ixs_units = mapper.steps();
            break;
        }
        case WaveformKind::dm_ofdm: {
            IxsMapper mapper(spec.n_sub, spec.k_active, spec.variant);
            for (std::uint32_t block = 0; block < spec.g; ++block) {
                const std::uint32_t base = block * spec.n_sub;
                // Mode split: real-axis energy dominates on mode-A carriers.
                std::vector<double> mode_a_score(spec.n_sub);
                for (std::uint32_t idx = 0; idx < spec.n_sub; ++idx) {
                    const Cplx v = freq[base + idx];
                    mode_a_score[idx] = std::abs(v.real()) - std::abs(v.imag());
                }
                const auto mode_a = top_indices(mode_a_score, spec.k_active);
                BigUint rank;
                try {
                    rank = mapper.rank(mode_a);
                } catch (const DomainError&) {
                    throw DetectionError("subblock " + std::to_string(block) +
                                         ": unreachable activation pattern");
                }
                append_rank_bits(rank, mapper.index_bits(), result.bits);
                for (std::uint32_t idx : mode_a) {
                    result.bits.push_back(freq[base + idx].real() >= 0 ? 0 : 1);
                }
                std::size_t next_a = 0;
                for (std::uint32_t idx = 0; idx < spec.n_sub; ++idx) {
                    if (next_a < mode_a.size() && mode_a[next_a] == idx) {
                        ++next_a;
                        continue;
                    }
                    result.bits.push_back(freq[base + idx].imag() >= 0 ? 0 : 1);
                }
            }
            result.ledger.ixs_units = mapper.steps();
            break;
        }
    }
    return result;
}

BasebandFrame awgn_channel(const BasebandFrame& in, double snr_db, std::uint64_t seed) {
    if (!std::isfinite(snr_db)) {
        throw DomainError("awgn_channel: snr_db must be finite");
    }
    double power = 0.0;
    for (const Cplx& s : in.samples) {
        power += std::norm(s);
    }
    if (in.samples.empty() || power == 0.0) {
        return in;
    }
    power /= static_cast<double>(in.samples.size());
    const double noise_var = power / std::pow(10.0, snr_db / 10.0);
    const double axis_sigma = std::sqrt(noise_var / 2.0);

    // Explicit Box-Muller on top of the engine's raw 64-bit output keeps the
    // sample stream identical across standard-library implementations.
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() {
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    };

    BasebandFrame out = in;
    for (Cplx& s : out.samples) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        s += Cplx(axis_sigma * radius * std::cos(angle),
                  axis_sigma * radius * std::sin(angle));
    }
    return out;
}

} // namespace scwave
