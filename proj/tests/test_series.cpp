#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "pedparts/series.hpp"

using namespace pedparts;

namespace {

std::vector<std::int64_t> coeffs_of(const Series& s) {
    return {s.coeffs().begin(), s.coeffs().end()};
}

Series from_coeffs(const std::vector<std::int64_t>& c) {
    Series s(static_cast<int>(c.size()) - 1);
    for (std::size_t k = 0; k < c.size(); ++k)
        s = s + Series::monomial(c[k], static_cast<int>(k), s.order());
    return s;
}

// Random series with constant term +1 or -1. Higher coefficients stay in
// {-1, 0, 1}: inverse coefficients can grow like c^k for larger entries and
// would overflow the checked arithmetic long before order 64.
Series random_unit_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> coeff(-1, 1);
    std::vector<std::int64_t> c(static_cast<std::size_t>(order) + 1);
    c[0] = rng() % 2 ? 1 : -1;
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = coeff(rng);
    return from_coeffs(c);
}

// Brute-force oracle: number of ways to write k as a*1 + b*3, a,b >= 0.
std::int64_t parts_1_3_count(int k) {
    std::int64_t count = 0;
    for (int b = 0; 3 * b <= k; ++b) ++count;  // a = k - 3b is determined
    return count;
}

}  // namespace

TEST_CASE("constant and monomial constructors") {
    CHECK(coeffs_of(Series::constant(1, 5)) == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});
    CHECK(coeffs_of(Series::monomial(1, 2, 5)) == std::vector<std::int64_t>{0, 0, 1, 0, 0, 0});
    CHECK(coeffs_of(Series::monomial(-1, 0, 3)) == std::vector<std::int64_t>{-1, 0, 0, 0});
    CHECK_THROWS_AS(Series::monomial(1, 6, 5), std::invalid_argument);
    CHECK_THROWS_AS(Series(-1), std::invalid_argument);
    CHECK_THROWS_AS(Series(3).coeff(4), std::out_of_range);
}

TEST_CASE("addition and multiplication") {
    const Series one_plus_q = from_coeffs({1, 1, 0, 0});
    const Series one_minus_q = from_coeffs({1, -1, 0, 0});
    CHECK(coeffs_of(one_plus_q * one_minus_q) == std::vector<std::int64_t>{1, 0, -1, 0});

    const Series s = from_coeffs({1, 1, 1});
    CHECK(coeffs_of(s * s) == std::vector<std::int64_t>{1, 2, 3});

    const Series a = from_coeffs({3, -2, 7, 0, 5});
    CHECK(a + (-a) == Series(4));

    CHECK_THROWS_AS(Series(3) + Series(4), std::invalid_argument);
    CHECK_THROWS_AS(Series(3) * Series(4), std::invalid_argument);
}

TEST_CASE("inverse") {
    SECTION("geometric series") {
        CHECK(coeffs_of(from_coeffs({1, -1, 0, 0, 0}).inverse()) ==
              std::vector<std::int64_t>{1, 1, 1, 1, 1});
    }

    SECTION("1/((1-q)(1-q^3)) counts partitions into parts 1 and 3") {
        const Series denom = pochhammer({+1, 1, 2, 2}, 5);  // (1-q)(1-q^3)
        const Series inv = denom.inverse();
        CHECK(coeffs_of(inv) == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2});
        for (int k = 0; k <= 5; ++k) CHECK(inv.coeff(k) == parts_1_3_count(k));
    }

    SECTION("two-sided inverse on random unit series") {
        std::mt19937 rng(20240811);
        const Series one = Series::constant(1, 64);
        for (int i = 0; i < 100; ++i) {
            const Series a = random_unit_series(rng, 64);
            CHECK(a * a.inverse() == one);
            CHECK(a.inverse() * a == one);
        }
    }

    SECTION("non-unit constant term rejected") {
        CHECK_THROWS_AS(from_coeffs({2, 1}).inverse(), std::domain_error);
        CHECK_THROWS_AS(Series(4).inverse(), std::domain_error);
    }
}

TEST_CASE("pochhammer products") {
    SECTION("(q;q)_inf has the pentagonal sign pattern") {
        CHECK(coeffs_of(pochhammer({+1, 1, 1, std::nullopt}, 10)) ==
              std::vector<std::int64_t>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0});

        const int order = 200;
        const Series euler = pochhammer({+1, 1, 1, std::nullopt}, order);
        std::vector<std::int64_t> expected(order + 1, 0);
        expected[0] = 1;
        for (std::int64_t k = 1; k * (3 * k - 1) / 2 <= order; ++k) {
            const std::int64_t sign = k % 2 ? -1 : 1;
            expected[k * (3 * k - 1) / 2] = sign;
            if (k * (3 * k + 1) / 2 <= order) expected[k * (3 * k + 1) / 2] = sign;
        }
        CHECK(coeffs_of(euler) == expected);
    }

    SECTION("single finite factors") {
        CHECK(coeffs_of(pochhammer({-1, 2, 2, 1}, 5)) ==
              std::vector<std::int64_t>{1, 0, 1, 0, 0, 0});
        CHECK(coeffs_of(pochhammer({+1, 1, 2, 2}, 4)) ==
              std::vector<std::int64_t>{1, -1, 0, -1, 1});
        CHECK(pochhammer({+1, 1, 1, 0}, 6) == Series::constant(1, 6));
    }

    SECTION("factors beyond the order are identity") {
        CHECK(pochhammer({+1, 7, 1, std::nullopt}, 6) == Series::constant(1, 6));
    }

    SECTION("validation") {
        CHECK_THROWS_AS(pochhammer({0, 1, 1, std::nullopt}, 5), std::invalid_argument);
        CHECK_THROWS_AS(pochhammer({+1, 0, 1, std::nullopt}, 5), std::invalid_argument);
        CHECK_THROWS_AS(pochhammer({+1, 1, 0, std::nullopt}, 5), std::invalid_argument);
        CHECK_THROWS_AS(pochhammer({+1, 1, 1, -2}, 5), std::invalid_argument);
    }

    SECTION("truncation consistency") {
        const Series big = pochhammer({-1, 2, 2, std::nullopt}, 60);
        const Series small = pochhammer({-1, 2, 2, std::nullopt}, 30);
        for (int k = 0; k <= 30; ++k) CHECK(big.coeff(k) == small.coeff(k));
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(421);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const int order = 32;
    const auto random_series = [&] {
        std::vector<std::int64_t> c(order + 1);
        for (auto& x : c) x = coeff(rng);
        return from_coeffs(c);
    };
    for (int i = 0; i < 60; ++i) {
        const Series a = random_series();
        const Series b = random_series();
        const Series c = random_series();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("overflow is a hard error") {
    const std::int64_t huge = std::int64_t{1} << 62;
    const Series big = Series::constant(huge, 2);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * Series::constant(4, 2), std::overflow_error);
    CHECK_THROWS_AS(from_coeffs({1, huge, huge}).inverse(), std::overflow_error);
}

TEST_CASE("with_coeff replaces exactly one coefficient") {
    const Series s = from_coeffs({1, 2, 3});
    const Series t = s.with_coeff(1, 7);
    CHECK(coeffs_of(t) == std::vector<std::int64_t>{1, 7, 3});
    CHECK(coeffs_of(s) == std::vector<std::int64_t>{1, 2, 3});
    CHECK_THROWS_AS(s.with_coeff(5, 0), std::out_of_range);
}
