#pragma once

#include "scwave/binomial.hpp"
#include "scwave/waveform_spec.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace scwave {

/// A k-of-n subcarrier activation pattern together with its lexicographic
/// rank. positions is strictly increasing, size k, values in [0, n).
struct ActivationPattern {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> positions;
    BigUint rank;
};

/// Bidirectional index <-> activation-pattern mapper (combinadic coding,
/// lexicographic order) with an instrumented step counter.
///
/// Only ranks below 2^index_bits() are addressable: a symbol carries
/// floor(log2 C(n,k)) index bits, so the top patterns of the lexicographic
/// order are never produced by a transmitter. unrank/rank reject ranks at or
/// beyond that bound with DomainError.
///
/// Step accounting (the empirical side of the cost model):
///  - original:  every inner multiply/divide iteration of the per-candidate
///    binomial evaluation charges one step -> Theta(n*k) per call.
///  - optimized: binomials come from a Pascal table precomputed at
///    construction; each candidate scan charges one step -> Theta(n) per call.
/// Table construction and the addressable-range validation are not charged.
/// The counter lives in this object only: one mapper per thread of execution.
class IxsMapper {
public:
    /// Requires 1 <= n, k <= n (ValidationError naming "n"/"k" otherwise).
    IxsMapper(std::uint32_t n, std::uint32_t k, IxsVariant variant);

    /// Rank -> pattern. Throws DomainError if rank >= 2^index_bits().
    ActivationPattern unrank(const BigUint& rank);

    /// Pattern -> rank (inverse of unrank). Throws ValidationError("positions")
    /// for malformed position sets and DomainError if the pattern's rank falls
    /// outside the addressable range.
    BigUint rank(const std::vector<std::uint32_t>& positions);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t k() const noexcept { return k_; }
    IxsVariant variant() const noexcept { return variant_; }

    /// Index bits carried per pattern: floor(log2 C(n,k)).
    std::uint32_t index_bits() const noexcept { return index_bits_; }

    /// Number of addressable ranks, 2^index_bits().
    const BigUint& addressable_ranks() const noexcept { return addressable_; }

    /// Steps charged since construction / the last reset.
    std::uint64_t steps() const noexcept { return steps_; }
    void reset_steps() noexcept { steps_ = 0; }

private:
    BigUint counted_binomial(std::uint32_t n, std::uint32_t k);

    std::uint32_t n_;
    std::uint32_t k_;
    IxsVariant variant_;
    std::uint32_t index_bits_ = 0;
    BigUint addressable_;
    std::uint64_t steps_ = 0;
    std::unique_ptr<BinomialTable> table_; // optimized variant only
};

} // namespace scwave
