#pragma once

namespace scwave {

inline constexpr const char* kVersion = "1.0.0";

/// Revision tag of the abstract cost model the analytics and the executing
/// path both charge. Bump whenever any model term changes.
inline constexpr const char* kCostModelRevision =
    "cost-model r1 (transform N*log2N; detect N/2N/4N; ixs original N^2, optimized N)";

} // namespace scwave
