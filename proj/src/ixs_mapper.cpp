#include "scwave/ixs_mapper.hpp"

#include "scwave/errors.hpp"

#include <algorithm>

namespace scwave {

IxsMapper::IxsMapper(std::uint32_t n, std::uint32_t k, IxsVariant variant)
    : n_(n), k_(k), variant_(variant) {
    if (n_ < 1) {
        throw ValidationError("n", "must be >= 1");
    }
    if (k_ > n_) {
        throw ValidationError("k", "cannot exceed n");
    }
    index_bits_ = floor_log2_binom(n_, k_);
    addressable_ = BigUint(1) << index_bits_;
    if (variant_ == IxsVariant::optimized) {
        table_ = std::make_unique<BinomialTable>(n_);
    }
}

// C(n, k) as seen by the mapping loops. The original variant evaluates it
// from scratch with the multiplicative form, charging one step per inner
// iteration; the optimized variant reads the precomputed table for one step.
BigUint IxsMapper::counted_binomial(std::uint32_t n, std::uint32_t k) {
    if (variant_ == IxsVariant::optimized) {
        steps_ += 1;
        return table_->at(n, k);
    }
    BigUint result = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
        steps_ += 1;
    }
    return result;
}

ActivationPattern IxsMapper::unrank(const BigUint& rank) {
    if (rank < 0 || rank >= addressable_) {
        throw DomainError("unrank: rank outside the addressable range");
    }
    ActivationPattern pattern;
    pattern.n = n_;
    pattern.k = k_;
    pattern.rank = rank;
    pattern.positions.reserve(k_);

    // Lexicographic combinadic decoding: for each slot, advance the candidate
    // position while the count of patterns headed by it fits below the rank.
    BigUint remaining = rank;
    std::uint32_t candidate = 0;
    for (std::uint32_t slot = 0; slot < k_; ++slot) {
        for (;;) {
            const BigUint headed = counted_binomial(n_ - 1 - candidate, k_ - 1 - slot);
            if (remaining < headed) {
                pattern.positions.push_back(candidate);
                ++candidate;
                break;
            }
            remaining -= headed;
            ++candidate;
        }
    }
    return pattern;
}

BigUint IxsMapper::rank(const std::vector<std::uint32_t>& positions) {
    if (positions.size() != k_) {
        throw ValidationError("positions", "pattern must contain exactly k positions");
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] >= n_) {
            throw ValidationError("positions", "position out of range");
        }
        if (i > 0 && positions[i] <= positions[i - 1]) {
            throw ValidationError("positions", "positions must be strictly increasing");
        }
    }

    // Inverse of the decoder: accumulate the pattern counts of every
    // candidate position that was skipped before each chosen one.
    BigUint rank = 0;
    std::uint32_t candidate = 0;
    for (std::uint32_t slot = 0; slot < k_; ++slot) {
        while (candidate < positions[slot]) {
            rank += counted_binomial(n_ - 1 - candidate, k_ - 1 - slot);
            ++candidate;
        }
        ++candidate; // the chosen position itself
    }
    if (rank >= addressable_) {
        throw DomainError("rank: pattern outside the addressable range");
    }
    return rank;
}

} // namespace scwave
