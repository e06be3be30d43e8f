#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <vector>

#include "pedparts/partition.hpp"

using namespace pedparts;

namespace {

// Independent counting oracles. These use dynamic programming over part
// sizes, a different route from the library's explicit enumeration.

std::vector<std::int64_t> oracle_p(int max_n) {
    std::vector<std::int64_t> dp(static_cast<std::size_t>(max_n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= max_n; ++part)
        for (int n = part; n <= max_n; ++n) dp[n] += dp[n - part];
    return dp;
}

// Odd parts unbounded, even parts at most once.
std::vector<std::int64_t> oracle_ped(int max_n) {
    std::vector<std::int64_t> dp(static_cast<std::size_t>(max_n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= max_n; part += 2)
        for (int n = part; n <= max_n; ++n) dp[n] += dp[n - part];
    for (int part = 2; part <= max_n; part += 2)
        for (int n = max_n; n >= part; --n) dp[n] += dp[n - part];
    return dp;
}

std::vector<std::int64_t> oracle_4regular(int max_n) {
    std::vector<std::int64_t> dp(static_cast<std::size_t>(max_n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= max_n; ++part) {
        if (part % 4 == 0) continue;
        for (int n = part; n <= max_n; ++n) dp[n] += dp[n - part];
    }
    return dp;
}

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

}  // namespace

TEST_CASE("make_partition canonicalizes and validates") {
    const Partition a = P({1, 3, 2});
    CHECK(std::vector<int>(a.parts().begin(), a.parts().end()) == std::vector<int>{3, 2, 1});
    CHECK(a.weight() == 6);

    const Partition empty = P({});
    CHECK(empty.empty());
    CHECK(empty.weight() == 0);

    const Partition b = P({5, 5});
    CHECK(std::vector<int>(b.parts().begin(), b.parts().end()) == std::vector<int>{5, 5});
    CHECK(b.weight() == 10);
    CHECK(b.largest() == 5);
    CHECK(b.largest_multiplicity() == 2);

    CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
    CHECK_THROWS_AS(empty.largest(), std::domain_error);
}

TEST_CASE("enumerate_all yields every partition once, decreasing lex") {
    SECTION("n = 0 yields exactly the empty partition") {
        const auto all = enumerate_all(0);
        REQUIRE(all.size() == 1);
        CHECK(all[0].empty());
    }

    SECTION("n = 4, exact order") {
        const auto all = enumerate_all(4);
        const std::vector<Partition> expected = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                                 P({1, 1, 1, 1})};
        CHECK(all == expected);
    }

    SECTION("spot cardinalities") {
        CHECK(enumerate_all(10).size() == 42);
        CHECK(enumerate_all(20).size() == 627);
    }

    SECTION("cardinality matches the DP oracle, order strictly decreasing") {
        const auto dp = oracle_p(30);
        for (int n = 0; n <= 30; ++n) {
            const auto all = enumerate_all(n);
            CHECK(static_cast<std::int64_t>(all.size()) == dp[static_cast<std::size_t>(n)]);
            for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
        }
    }

    SECTION("negative n rejected") {
        CHECK_THROWS_AS(enumerate_all(-1), std::invalid_argument);
    }
}

TEST_CASE("is_member") {
    CHECK(is_member(P({3, 2, 1}), PartitionClass::DE1));
    CHECK_FALSE(is_member(P({2, 2, 1}), PartitionClass::PED));
    CHECK(is_member(P({3, 1, 1}), PartitionClass::DE3));
    CHECK_FALSE(is_member(P({1, 1, 1}), PartitionClass::DE3));
    CHECK(is_member(P({1, 1, 1}), PartitionClass::DE2));
    CHECK(is_member(P({4, 3}), PartitionClass::PED));
    CHECK_FALSE(is_member(P({4, 3}), PartitionClass::DE1));
    CHECK_FALSE(is_member(P({8, 1}), PartitionClass::FOUR_REGULAR));
    CHECK(is_member(P({6, 3, 2}), PartitionClass::PED_GT1));
    CHECK_FALSE(is_member(P({6, 3, 1}), PartitionClass::PED_GT1));

    SECTION("empty partition memberships") {
        const Partition empty;
        CHECK(is_member(empty, PartitionClass::PED));
        CHECK(is_member(empty, PartitionClass::FOUR_REGULAR));
        CHECK(is_member(empty, PartitionClass::PED_GT1));
        CHECK_FALSE(is_member(empty, PartitionClass::DE1));
        CHECK_FALSE(is_member(empty, PartitionClass::DE2));
        CHECK_FALSE(is_member(empty, PartitionClass::DE3));
    }
}

TEST_CASE("enumerate_class") {
    CHECK(enumerate_class(3, PartitionClass::DE1) ==
          std::vector<Partition>{P({3}), P({1, 1, 1})});
    CHECK(enumerate_class(5, PartitionClass::DE3) ==
          std::vector<Partition>{P({5}), P({3, 2}), P({3, 1, 1})});
    CHECK(enumerate_class(0, PartitionClass::DE2).empty());
    CHECK(enumerate_class(5, PartitionClass::PED) ==
          std::vector<Partition>{P({5}), P({4, 1}), P({3, 2}), P({3, 1, 1}), P({2, 1, 1, 1}),
                                 P({1, 1, 1, 1, 1})});

    SECTION("every element is a member with the right weight, pairwise distinct") {
        for (int n : {0, 1, 7, 12}) {
            for (PartitionClass c : kAllClasses) {
                const auto members = enumerate_class(n, c);
                std::set<Partition> seen;
                for (const auto& lambda : members) {
                    CHECK(is_member(lambda, c));
                    CHECK(lambda.weight() == n);
                    CHECK(seen.insert(lambda).second);
                }
                CHECK(members.size() == count_class(n, c));
            }
        }
    }
}

TEST_CASE("count_class matches hand values and DP oracles") {
    CHECK(count_class(5, PartitionClass::PED) == 6);
    CHECK(count_class(5, PartitionClass::FOUR_REGULAR) == 6);
    CHECK(count_class(6, PartitionClass::DE2) == 2);
    CHECK(enumerate_class(6, PartitionClass::DE2) ==
          std::vector<Partition>{P({3, 3}), P({1, 1, 1, 1, 1, 1})});

    const int max_n = 35;
    const auto ped = oracle_ped(max_n);
    const auto reg = oracle_4regular(max_n);
    for (int n = 0; n <= max_n; ++n) {
        CHECK(static_cast<std::int64_t>(count_class(n, PartitionClass::PED)) ==
              ped[static_cast<std::size_t>(n)]);
        CHECK(static_cast<std::int64_t>(count_class(n, PartitionClass::FOUR_REGULAR)) ==
              reg[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("count_all_classes agrees with count_class") {
    for (int n = 0; n <= 20; ++n) {
        const auto counts = count_all_classes(n);
        for (PartitionClass c : kAllClasses) CHECK(counts[class_index(c)] == count_class(n, c));
    }
}

TEST_CASE("class counting identities") {
    SECTION("ped(n) equals the 4-regular count") {
        for (int n = 0; n <= 35; ++n)
            CHECK(count_class(n, PartitionClass::PED) ==
                  count_class(n, PartitionClass::FOUR_REGULAR));
    }

    SECTION("largest-part multiplicity splits DE1 into DE2 and DE3") {
        for (int n = 1; n <= 35; ++n)
            CHECK(count_class(n, PartitionClass::DE1) ==
                  count_class(n, PartitionClass::DE2) + count_class(n, PartitionClass::DE3));
    }

    SECTION("removing a part 1 relates ped_gt1 to ped") {
        for (int n = 1; n <= 35; ++n)
            CHECK(static_cast<std::int64_t>(count_class(n, PartitionClass::PED_GT1)) ==
                  static_cast<std::int64_t>(count_class(n, PartitionClass::PED)) -
                      static_cast<std::int64_t>(count_class(n - 1, PartitionClass::PED)));
    }

    SECTION("DE class counts at n = 0 are 0") {
        CHECK(count_class(0, PartitionClass::DE1) == 0);
        CHECK(count_class(0, PartitionClass::DE2) == 0);
        CHECK(count_class(0, PartitionClass::DE3) == 0);
        CHECK(count_class(0, PartitionClass::PED) == 1);
        CHECK(count_class(0, PartitionClass::PED_GT1) == 1);
    }
}

TEST_CASE("partition ordering and textual form") {
    CHECK(P({5, 4, 1}).to_string() == "5+4+1");
    CHECK(Partition().to_string() == "0");
    CHECK(P({3, 1}) < P({3, 2}));
    CHECK(P({3}) < P({3, 1}));
    CHECK(P({2, 2}) < P({3}));
}
