#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scwave/binomial.hpp"
#include "scwave/cost_model.hpp"
#include "scwave/errors.hpp"
#include "scwave/waveform_spec.hpp"

#include <string>

using namespace scwave;

namespace {

/// Ideal-setup spec at transform size n on a microsecond-scale grid whose
/// cyclic prefix is n/4 samples.
WaveformSpec ideal_spec(WaveformKind kind, IxsVariant variant, std::uint32_t n) {
    WaveformSpec spec;
    spec.kind = kind;
    spec.variant = variant;
    spec.n_fft = n;
    spec.n_data = n;
    spec.g = 1;
    spec.n_sub = n;
    spec.k_active = kind == WaveformKind::ofdm ? n : n / 2;
    spec.m_order = 2;
    spec.m_a = 2;
    spec.m_b = 2;
    spec.delta_f = 1e6;
    spec.t_cp = 2.5e-7;
    spec.t_sym = 1.25e-6;
    return spec;
}

std::string thrown_field(const WaveformSpec& spec) {
    try {
        spec.validate();
    } catch (const ValidationError& e) {
        return e.field();
    }
    return "";
}

} // namespace

TEST_CASE("802.11a presets have the published geometry") {
    for (WaveformKind kind :
         {WaveformKind::ofdm, WaveformKind::ofdm_im, WaveformKind::dm_ofdm}) {
        const WaveformSpec spec = ieee80211a_preset(kind);
        CHECK_NOTHROW(spec.validate());
        CHECK(spec.n_fft == 64);
        CHECK(spec.n_data == 48);
        CHECK(spec.bandwidth_hz() == doctest::Approx(20e6).epsilon(1e-12));
        CHECK(spec.cp_len() == 16);
        CHECK(spec.t_sym == doctest::Approx(4e-6).epsilon(1e-12));
        if (kind != WaveformKind::ofdm) {
            CHECK(spec.g == 1);
            CHECK(spec.n_sub == 48);
            CHECK(spec.k_active == 24);
        }
    }
}

TEST_CASE("validation names the violated field") {
    WaveformSpec bad = ieee80211a_preset(WaveformKind::ofdm_im);

    bad.n_fft = 48;
    CHECK(thrown_field(bad) == "n_fft");
    bad = ieee80211a_preset(WaveformKind::ofdm_im);

    bad.n_data = 0;
    CHECK(thrown_field(bad) == "n_data");
    bad = ieee80211a_preset(WaveformKind::ofdm_im);

    bad.n_data = 128; // exceeds n_fft
    CHECK(thrown_field(bad) == "n_data");
    bad = ieee80211a_preset(WaveformKind::ofdm_im);

    bad.n_sub = 24; // g * n_sub != n_data
    CHECK(thrown_field(bad) == "n_sub");
    bad = ieee80211a_preset(WaveformKind::ofdm_im);

    bad.k_active = 0;
    CHECK(thrown_field(bad) == "k_active");
    bad = ieee80211a_preset(WaveformKind::ofdm_im);

    bad.k_active = 49;
    CHECK(thrown_field(bad) == "k_active");
    bad = ieee80211a_preset(WaveformKind::ofdm_im);

    bad.m_order = 3;
    CHECK(thrown_field(bad) == "m_order");

    WaveformSpec dm = ieee80211a_preset(WaveformKind::dm_ofdm);
    dm.m_a = 1;
    CHECK(thrown_field(dm) == "m_a");
    dm = ieee80211a_preset(WaveformKind::dm_ofdm);
    dm.m_b = 6;
    CHECK(thrown_field(dm) == "m_b");

    WaveformSpec timing = ieee80211a_preset(WaveformKind::ofdm);
    timing.delta_f = 0;
    CHECK(thrown_field(timing) == "delta_f");
    timing = ieee80211a_preset(WaveformKind::ofdm);
    timing.t_sym = 5e-6; // != 1/delta_f + t_cp
    CHECK(thrown_field(timing) == "t_sym");
    timing = ieee80211a_preset(WaveformKind::ofdm);
    timing.t_cp = -1e-9;
    CHECK(thrown_field(timing) == "t_cp");
}

TEST_CASE("cyclic prefix length must be integral in samples") {
    WaveformSpec spec = ieee80211a_preset(WaveformKind::ofdm);
    CHECK(spec.cp_len() == 16);
    spec.t_cp = 0.33e-6; // 64 * 312500 * 0.33e-6 = 6.6 samples
    CHECK_THROWS_AS(spec.cp_len(), ValidationError);
}

TEST_CASE("ideal-setup predicate") {
    CHECK(ieee80211a_preset(WaveformKind::ofdm).ideal_setup());
    CHECK(ieee80211a_preset(WaveformKind::ofdm_im).ideal_setup());
    CHECK(ieee80211a_preset(WaveformKind::dm_ofdm).ideal_setup());

    WaveformSpec qam64 = ieee80211a_preset(WaveformKind::ofdm);
    qam64.m_order = 64;
    CHECK_FALSE(qam64.ideal_setup());

    WaveformSpec uneven = ieee80211a_preset(WaveformKind::ofdm_im);
    uneven.k_active = 23;
    CHECK_FALSE(uneven.ideal_setup());

    WaveformSpec grouped = ieee80211a_preset(WaveformKind::ofdm_im);
    grouped.g = 4;
    grouped.n_sub = 12;
    grouped.k_active = 6;
    CHECK_NOTHROW(grouped.validate());
    CHECK_FALSE(grouped.ideal_setup());

    WaveformSpec quad_b = ieee80211a_preset(WaveformKind::dm_ofdm);
    quad_b.m_b = 4;
    CHECK_FALSE(quad_b.ideal_setup());
}

TEST_CASE("bits per symbol: published 802.11a values") {
    WaveformSpec qam64 = ieee80211a_preset(WaveformKind::ofdm);
    qam64.m_order = 64;
    CHECK(bits_per_symbol(qam64) == 288); // 48 carriers * 6 bits

    CHECK(bits_per_symbol(ieee80211a_preset(WaveformKind::ofdm)) == 48);
    CHECK(bits_per_symbol(ieee80211a_preset(WaveformKind::ofdm_im)) == 68);  // 24 + 44
    CHECK(bits_per_symbol(ieee80211a_preset(WaveformKind::dm_ofdm)) == 92);  // 24 + 24 + 44
}

TEST_CASE("bits per symbol: composition identities") {
    // Binary dual-mode carries one bit on every data carrier plus the index
    // bits, i.e. exactly the binary-OFDM payload plus the pattern rank.
    const WaveformSpec ofdm = ieee80211a_preset(WaveformKind::ofdm);
    const WaveformSpec dm = ieee80211a_preset(WaveformKind::dm_ofdm);
    CHECK(bits_per_symbol(dm) ==
          bits_per_symbol(ofdm) + floor_log2_binom(dm.n_sub, dm.k_active));

    // Grouped index modulation floors the index bits per subblock.
    WaveformSpec grouped = ieee80211a_preset(WaveformKind::ofdm_im);
    grouped.g = 4;
    grouped.n_sub = 12;
    grouped.k_active = 3;
    grouped.m_order = 4;
    // 4 * (3 * 2 + floor(log2 C(12,3) = 220) = 7) = 52
    CHECK(bits_per_symbol(grouped) == 52);
}

TEST_CASE("complexity: published 802.11a values at N = 64") {
    CHECK(tx_complexity(ieee80211a_preset(WaveformKind::ofdm)).count == 384);
    CHECK(rx_complexity(ieee80211a_preset(WaveformKind::ofdm)).count == 448);

    const WaveformSpec im = ieee80211a_preset(WaveformKind::ofdm_im);
    CHECK(tx_complexity(im).count == 4480); // 384 + 64^2
    CHECK(rx_complexity(im).count == 4608); // 384 + 128 + 64^2

    const WaveformSpec dm = ieee80211a_preset(WaveformKind::dm_ofdm);
    CHECK(tx_complexity(dm).count == 4480);
    CHECK(rx_complexity(dm).count == 4736); // 384 + 256 + 64^2

    const WaveformSpec im_opt = ieee80211a_preset(WaveformKind::ofdm_im, IxsVariant::optimized);
    CHECK(tx_complexity(im_opt).count == 448); // 384 + 64
    CHECK(rx_complexity(im_opt).count == 576); // 384 + 128 + 64

    const WaveformSpec dm_opt = ieee80211a_preset(WaveformKind::dm_ofdm, IxsVariant::optimized);
    CHECK(tx_complexity(dm_opt).count == 448);
    CHECK(rx_complexity(dm_opt).count == 704); // 384 + 256 + 64
}

TEST_CASE("complexity: structural invariants") {
    for (std::uint32_t n : {8u, 16u, 64u, 256u, 1024u}) {
        const WaveformSpec ofdm = ideal_spec(WaveformKind::ofdm, IxsVariant::original, n);
        const WaveformSpec im = ideal_spec(WaveformKind::ofdm_im, IxsVariant::original, n);
        const WaveformSpec im_opt = ideal_spec(WaveformKind::ofdm_im, IxsVariant::optimized, n);
        const WaveformSpec dm = ideal_spec(WaveformKind::dm_ofdm, IxsVariant::original, n);
        const WaveformSpec dm_opt = ideal_spec(WaveformKind::dm_ofdm, IxsVariant::optimized, n);

        // The quadratic index-selection term is the whole tx gap to plain OFDM.
        CHECK(tx_complexity(im).count - tx_complexity(ofdm).count ==
              static_cast<std::uint64_t>(n) * n);
        CHECK(tx_complexity(dm).count == tx_complexity(im).count);

        // The table-assisted mapper is strictly cheaper.
        CHECK(tx_complexity(im_opt) < tx_complexity(im));
        CHECK(rx_complexity(im_opt) < rx_complexity(im));
        CHECK(rx_complexity(dm_opt) < rx_complexity(dm));

        // Detection adds on top of the transform at the receiver.
        CHECK(rx_complexity(ofdm).count ==
              fft_cost_units(n) + detection_cost_units(ofdm));
        CHECK(detection_cost_units(ofdm) == n);
        CHECK(detection_cost_units(im) == 2ull * n);
        CHECK(detection_cost_units(dm) == 4ull * n);
    }

    // Complexity grows monotonically in the transform size.
    for (std::uint32_t n : {8u, 16u, 32u, 64u, 128u, 256u, 512u}) {
        for (WaveformKind kind :
             {WaveformKind::ofdm, WaveformKind::ofdm_im, WaveformKind::dm_ofdm}) {
            const auto small = ideal_spec(kind, IxsVariant::original, n);
            const auto large = ideal_spec(kind, IxsVariant::original, 2 * n);
            CHECK(tx_complexity(small) < tx_complexity(large));
            CHECK(rx_complexity(small) < rx_complexity(large));
        }
    }
}

TEST_CASE("complexity: non-ideal setups charge per-subblock terms") {
    WaveformSpec grouped = ieee80211a_preset(WaveformKind::ofdm_im);
    grouped.g = 4;
    grouped.n_sub = 12;
    grouped.k_active = 3;
    grouped.m_order = 4;
    CHECK_FALSE(grouped.ideal_setup());
    CHECK(ixs_cost_units(grouped) == 4ull * 12 * 3);       // g * n_sub * k
    CHECK(detection_cost_units(grouped) == 4ull * 12 * 4); // g * n_sub * M
    CHECK(tx_complexity(grouped).count == 384 + 144);
    CHECK(rx_complexity(grouped).count == 384 + 192 + 144);

    grouped.variant = IxsVariant::optimized;
    CHECK(ixs_cost_units(grouped) == 4ull * 12); // one scan per carrier

    WaveformSpec dm_grouped = ieee80211a_preset(WaveformKind::dm_ofdm);
    dm_grouped.g = 2;
    dm_grouped.n_sub = 24;
    dm_grouped.k_active = 8;
    CHECK_FALSE(dm_grouped.ideal_setup());
    CHECK(detection_cost_units(dm_grouped) == 2ull * 24 * 4); // g * n_sub * (M_A + M_B)
    CHECK(ixs_cost_units(dm_grouped) == 2ull * 24 * 8);
}

TEST_CASE("plain OFDM charges no index-selection work") {
    for (IxsVariant variant : {IxsVariant::original, IxsVariant::optimized}) {
        CHECK(ixs_cost_units(ieee80211a_preset(WaveformKind::ofdm, variant)) == 0);
    }
}

TEST_CASE("transform cost term") {
    CHECK(fft_cost_units(2) == 2);
    CHECK(fft_cost_units(64) == 384);
    CHECK(fft_cost_units(1024) == 10240);
    CHECK_THROWS_AS(fft_cost_units(0), ValidationError);
    CHECK_THROWS_AS(fft_cost_units(1), ValidationError);
    CHECK_THROWS_AS(fft_cost_units(48), ValidationError);
}

TEST_CASE("kind and variant names round-trip") {
    for (WaveformKind kind :
         {WaveformKind::ofdm, WaveformKind::ofdm_im, WaveformKind::dm_ofdm}) {
        CHECK(waveform_kind_from_string(to_string(kind)) == kind);
    }
    CHECK(waveform_kind_from_string("ofdm_im") == WaveformKind::ofdm_im);
    CHECK(waveform_kind_from_string("dm_ofdm") == WaveformKind::dm_ofdm);
    CHECK_THROWS_AS(waveform_kind_from_string("qam"), ValidationError);
    for (IxsVariant variant : {IxsVariant::original, IxsVariant::optimized}) {
        CHECK(ixs_variant_from_string(to_string(variant)) == variant);
    }
    CHECK_THROWS_AS(ixs_variant_from_string("fast"), ValidationError);
}
