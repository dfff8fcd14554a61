#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scwave/binomial.hpp"
#include "scwave/errors.hpp"

using namespace scwave;

TEST_CASE("binomial matches frozen exact values") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(1, 0) == 1);
    CHECK(binomial(1, 1) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(12, 3) == 220);
    CHECK(binomial(48, 24) == BigUint("32247603683100"));
}

TEST_CASE("binomial agrees with the Pascal-triangle construction") {
    const BinomialTable table(40);
    for (std::uint32_t n = 0; n <= 40; ++n) {
        for (std::uint32_t k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(binomial(n, k) == table.at(n, k));
        }
    }
}

TEST_CASE("binomial symmetry and boundary identities") {
    for (std::uint32_t n : {5u, 17u, 48u, 64u, 100u}) {
        for (std::uint32_t k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n, n - k));
        }
        CHECK(binomial(n, 0) == 1);
        CHECK(binomial(n, n) == 1);
        // Pascal recurrence on a diagonal sample.
        for (std::uint32_t k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("floor_log2 of small and large values") {
    CHECK(floor_log2(BigUint(1)) == 0);
    CHECK(floor_log2(BigUint(2)) == 1);
    CHECK(floor_log2(BigUint(3)) == 1);
    CHECK(floor_log2(BigUint(4)) == 2);
    CHECK(floor_log2(BigUint(1) << 200) == 200);
    CHECK(floor_log2((BigUint(1) << 200) - 1) == 199);
}

TEST_CASE("floor_log2_binom frozen values across the sweep range") {
    CHECK(floor_log2_binom(4, 2) == 2);
    CHECK(floor_log2_binom(8, 4) == 6);   // C(8,4) = 70
    CHECK(floor_log2_binom(12, 3) == 7);  // C(12,3) = 220
    CHECK(floor_log2_binom(48, 24) == 44);
    CHECK(floor_log2_binom(64, 32) == 60);
    CHECK(floor_log2_binom(128, 64) == 124);
    CHECK(floor_log2_binom(256, 128) == 251);
    CHECK(floor_log2_binom(512, 256) == 507);
    CHECK(floor_log2_binom(1024, 512) == 1018);
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(binomial(3, 4), DomainError);
    CHECK_THROWS_AS(floor_log2(BigUint(0)), DomainError);
    CHECK_THROWS_AS(floor_log2_binom(5, 6), DomainError);

    const BinomialTable table(10);
    CHECK(table.n_max() == 10);
    CHECK_THROWS_AS(table.at(11, 0), DomainError);
    CHECK_THROWS_AS(table.at(5, 6), DomainError);
}
