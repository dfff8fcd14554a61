#include "scwave/builtin_scenarios.hpp"

namespace scwave {

ComparisonScenario table_i_scenario() {
    WaveformSpec ofdm64 = ieee80211a_preset(WaveformKind::ofdm);
    ofdm64.m_order = 64; // 64-QAM: 6 bits on each of the 48 data carriers

    ComparisonScenario scenario;
    scenario.mode = ComparisonMode::measured_runtimes;
    scenario.entries = {
        {"processor-a", ofdm64, MeasuredRuntimes{0.55e-6, 3.95e-6}},
        {"processor-b", ofdm64, MeasuredRuntimes{0.55e-6, 3.29e-6}},
        {"zero-delay", ofdm64, MeasuredRuntimes{0.0, 0.0}},
    };
    return scenario;
}

ComparisonScenario table_iii_scenario() {
    ComparisonScenario scenario;
    scenario.mode = ComparisonMode::model_driven;
    scenario.entries = {
        {"", ieee80211a_preset(WaveformKind::ofdm), std::nullopt},
        {"", ieee80211a_preset(WaveformKind::ofdm_im, IxsVariant::original), std::nullopt},
        {"", ieee80211a_preset(WaveformKind::dm_ofdm, IxsVariant::original), std::nullopt},
    };
    return scenario;
}

ComparisonScenario figures_scenario() {
    ComparisonScenario scenario;
    scenario.mode = ComparisonMode::model_driven;
    scenario.entries = {
        {"", ieee80211a_preset(WaveformKind::ofdm), std::nullopt},
        {"", ieee80211a_preset(WaveformKind::ofdm_im, IxsVariant::original), std::nullopt},
        {"", ieee80211a_preset(WaveformKind::dm_ofdm, IxsVariant::original), std::nullopt},
        {"", ieee80211a_preset(WaveformKind::ofdm_im, IxsVariant::optimized), std::nullopt},
        {"", ieee80211a_preset(WaveformKind::dm_ofdm, IxsVariant::optimized), std::nullopt},
    };
    return scenario;
}

} // namespace scwave
