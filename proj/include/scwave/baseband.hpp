#pragma once

#include "scwave/cost_model.hpp"
#include "scwave/fft.hpp"
#include "scwave/waveform_spec.hpp"

#include <cstdint>
#include <vector>

namespace scwave {

/// Per-stage cost-unit charges accumulated by one transmit or receive call.
/// Transform and detection stages charge the closed-form model terms; the
/// index-selection stage charges the mapper's measured step count, which is
/// how the executing path validates the abstract model empirically.
struct StageCostLedger {
    std::uint64_t ifft_units = 0;
    std::uint64_t fft_units = 0;
    std::uint64_t ixs_units = 0;
    std::uint64_t detect_units = 0;

    std::uint64_t total() const noexcept {
        return ifft_units + fft_units + ixs_units + detect_units;
    }
};

/// One time-domain symbol: cyclic prefix followed by n_fft samples.
struct BasebandFrame {
    std::uint32_t n_fft = 0;
    std::uint32_t cp_len = 0;
    std::vector<Cplx> samples; ///< size cp_len + n_fft
};

/// Bit container; each element is 0 or 1.
using BitVector = std::vector<std::uint8_t>;

struct TransmitResult {
    BasebandFrame frame;
    StageCostLedger ledger;
};

struct ReceiveResult {
    BitVector bits;
    StageCostLedger ledger;
};

/// Maps a payload of exactly bits_per_symbol(spec) bits onto one frame:
/// constellation mapping (with index selection for the modulated kinds),
/// inverse transform, cyclic-prefix insertion.
///
/// Layout conventions (the receive path mirrors them exactly):
///  - data occupies bins [0, n_data); subblock b occupies bins
///    [b*n_sub, (b+1)*n_sub); remaining bins are zero.
///  - per subblock the index bits come first (big-endian pattern rank),
///    then the constellation bits of the active/mode-A carriers in
///    ascending position order, then (dm_ofdm) the mode-B carrier bits.
///  - ofdm/ofdm_im carriers use Gray-coded rectangular QAM of order M
///    (BPSK {+1,-1} at M = 2, bit 0 -> +1); dm_ofdm uses mode A = {+1,-1}
///    on the real axis and mode B = {+i,-i} on the imaginary axis, and is
///    supported for M_A = M_B = 2 only (ValidationError otherwise).
///
/// Throws ValidationError("bits") on a wrong-length payload.
TransmitResult transmit(const BitVector& bits, const WaveformSpec& spec);

/// Inverse of transmit for a noiseless channel: cyclic-prefix removal,
/// forward transform, detection (nearest constellation point; active set =
/// k largest magnitudes per subblock; dm_ofdm mode split by |Re| vs |Im|),
/// index de-mapping. Under noise a detected pattern can fall outside the
/// addressable rank range; that raises DetectionError.
ReceiveResult receive(const BasebandFrame& frame, const WaveformSpec& spec);

/// Adds circularly-symmetric complex Gaussian noise at the given per-sample
/// SNR (dB), measured against the frame's mean sample power. Deterministic
/// for a fixed seed. A zero-power frame is returned unchanged.
BasebandFrame awgn_channel(const BasebandFrame& in, double snr_db, std::uint64_t seed);

} // namespace scwave
