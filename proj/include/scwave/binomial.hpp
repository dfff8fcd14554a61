#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace scwave {

/// Arbitrary-precision unsigned integer used for pattern counts and ranks.
/// Subset counts grow past 1000 bits for the transform sizes we sweep
/// (C(1024,512) has 1019 bits), so fixed-width arithmetic is not an option.
using BigUint = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k). Throws DomainError if k > n.
BigUint binomial(std::uint32_t n, std::uint32_t k);

/// Position of the most significant set bit, i.e. floor(log2(v)).
/// Throws DomainError for v == 0.
std::uint32_t floor_log2(const BigUint& v);

/// floor(log2(C(n, k))) computed with exact integer arithmetic end to end.
/// This is the number of index bits a k-of-n activation pattern can carry.
/// Throws DomainError if k > n.
std::uint32_t floor_log2_binom(std::uint32_t n, std::uint32_t k);

/// Pascal-triangle table of exact binomial coefficients for all
/// 0 <= n <= n_max, 0 <= k <= n. Built once, read-only afterwards.
class BinomialTable {
public:
    explicit BinomialTable(std::uint32_t n_max);

    /// C(n, k); requires n <= n_max() and k <= n.
    const BigUint& at(std::uint32_t n, std::uint32_t k) const;

    std::uint32_t n_max() const noexcept { return static_cast<std::uint32_t>(rows_.size()) - 1; }

private:
    std::vector<std::vector<BigUint>> rows_;
};

} // namespace scwave
