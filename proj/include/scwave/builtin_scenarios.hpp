#pragma once

#include "scwave/comparison.hpp"

namespace scwave {

/// Measured-runtimes benchmark: 802.11a OFDM (64-QAM, 48 data carriers,
/// 4 us symbol) against two published baseband processor timings and a
/// zero-delay bound. Processor A: 0.55 us tx / 3.95 us rx; processor B:
/// 0.55 us tx / 3.29 us rx. The 3.95 us figure is the one consistent with
/// processor A's 33.8 b/us throughput; a sometimes-quoted 3.59 us is not.
ComparisonScenario table_i_scenario();

/// Model-driven benchmark: OFDM, OFDM-IM and DM-OFDM (original index
/// mappers, ideal setup, binary constellations) on the 802.11a grid.
ComparisonScenario table_iii_scenario();

/// Model-driven five-way set used for rate/SE-versus-N studies: OFDM plus
/// both index-modulated kinds in both mapper variants, ideal setup.
ComparisonScenario figures_scenario();

} // namespace scwave
