#include "scwave/binomial.hpp"

#include "scwave/errors.hpp"

namespace scwave {

BigUint binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) {
        throw DomainError("binomial: k exceeds n");
    }
    if (k > n - k) {
        k = n - k;
    }
    // Multiplicative form with exact stepwise division: after the i-th step
    // the accumulator holds C(n-k+i, i), which i divides exactly.
    BigUint result = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::uint32_t floor_log2(const BigUint& v) {
    if (v.is_zero()) {
        throw DomainError("floor_log2: zero has no logarithm");
    }
    return static_cast<std::uint32_t>(boost::multiprecision::msb(v));
}

std::uint32_t floor_log2_binom(std::uint32_t n, std::uint32_t k) {
    return floor_log2(binomial(n, k));
}

BinomialTable::BinomialTable(std::uint32_t n_max) {
    rows_.resize(n_max + 1);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        rows_[n].resize(n + 1);
        rows_[n][0] = 1;
        rows_[n][n] = 1;
        for (std::uint32_t k = 1; k < n; ++k) {
            rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
        }
    }
}

const BigUint& BinomialTable::at(std::uint32_t n, std::uint32_t k) const {
    if (n >= rows_.size() || k > n) {
        throw DomainError("BinomialTable: index out of range");
    }
    return rows_[n][k];
}

} // namespace scwave
