#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shw/error.hpp"
#include "shw/partition.hpp"

using namespace shw;

namespace {

// independent partition-count recurrence: p(n,k) = #partitions of n with
// largest part exactly <= k
long partition_count_oracle(int n) {
    std::vector<std::vector<long>> p(n + 1, std::vector<long>(n + 1, 0));
    for (int k = 0; k <= n; ++k) p[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            p[m][k] = p[m][k - 1] + (m >= k ? p[m - k][k] : 0);
    return p[n][n];
}

std::vector<int> parts(const Partition& m) { return m.parts(); }

}  // namespace

TEST_CASE("enumeration is complete, canonical and descending-lex ordered") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(parts(partitions_of(1)[0]) == std::vector<int>{1});

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(parts(p4[0]) == std::vector<int>{4});
    CHECK(parts(p4[1]) == std::vector<int>{3, 1});
    CHECK(parts(p4[2]) == std::vector<int>{2, 2});
    CHECK(parts(p4[3]) == std::vector<int>{2, 1, 1});
    CHECK(parts(p4[4]) == std::vector<int>{1, 1, 1, 1});

    CHECK(partitions_of(5).size() == 7);
    for (int d = 1; d <= 12; ++d) {
        auto all = partitions_of(d);
        CHECK(static_cast<long>(all.size()) == partition_count_oracle(d));
        for (size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(Partition::desc_lex_less(all[i], all[i + 1]));
        for (const auto& m : all) CHECK(m.sum() == d);
    }
}

TEST_CASE("degree guard") {
    CHECK_THROWS_AS(partitions_of(0), Error);
    CHECK_THROWS_AS(partitions_of(21), Error);
    try {
        partitions_of(-3);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degree_out_of_range);
    }
}

TEST_CASE("odd partitions") {
    auto odd4 = odd_partitions_of(4);
    REQUIRE(odd4.size() == 2);
    CHECK(parts(odd4[0]) == std::vector<int>{3, 1});
    CHECK(parts(odd4[1]) == std::vector<int>{1, 1, 1, 1});

    auto odd3 = odd_partitions_of(3);
    REQUIRE(odd3.size() == 2);
    CHECK(parts(odd3[0]) == std::vector<int>{3});
    CHECK(parts(odd3[1]) == std::vector<int>{1, 1, 1});

    auto odd5 = odd_partitions_of(5);
    REQUIRE(odd5.size() == 3);
    CHECK(parts(odd5[0]) == std::vector<int>{5});
    CHECK(parts(odd5[1]) == std::vector<int>{3, 1, 1});
    CHECK(parts(odd5[2]) == std::vector<int>{1, 1, 1, 1, 1});

    for (int d = 1; d <= 10; ++d) {
        auto all = partitions_of(d);
        for (const auto& m : odd_partitions_of(d)) {
            CHECK(m.is_odd());
            CHECK(std::find(all.begin(), all.end(), m) != all.end());
        }
    }
}

TEST_CASE("scalar statistics") {
    CHECK(Partition({3, 1}).weight() == 3);
    CHECK(Partition({1, 1, 1, 1}).weight() == 1);
    CHECK(Partition({2, 2, 1}).weight() == 4);

    CHECK(Partition({1, 1, 1, 1}).aut_order() == 24);
    CHECK(Partition({3, 1}).aut_order() == 1);
    CHECK(Partition({2, 2, 1}).aut_order() == 2);

    CHECK(Partition({3, 1}).centralizer_order() == 3);
    CHECK(Partition({1, 1, 1, 1}).centralizer_order() == 24);
    CHECK(Partition({2, 2}).centralizer_order() == 8);

    CHECK(Partition({3, 1}).is_odd());
    CHECK_FALSE(Partition({2, 1, 1}).is_odd());
    CHECK(Partition({5}).is_odd());
}

TEST_CASE("centralizer order agrees with weight times aut order") {
    for (int d = 1; d <= 10; ++d)
        for (const auto& m : partitions_of(d)) {
            Integer via_weight = Integer(m.weight()) * m.aut_order();
            CHECK(m.centralizer_order() == via_weight);
        }
}

TEST_CASE("class equation") {
    for (int d = 1; d <= 10; ++d) {
        Rational sum = 0;
        for (const auto& m : partitions_of(d)) sum += Rational(1) / Rational(m.centralizer_order());
        CHECK(sum == 1);
    }
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(4, 1, {}) == 0);
    std::vector<Partition> three31(3, Partition({3, 1}));
    CHECK(euler_characteristic(4, 0, three31) == 2);
    std::vector<Partition> three3(3, Partition({3}));
    CHECK(euler_characteristic(3, 0, three3) == 0);

    std::vector<Partition> bad{Partition({2, 1})};
    CHECK_THROWS_AS(euler_characteristic(4, 0, bad), Error);
}

TEST_CASE("rational component count") {
    CHECK(rational_component_count(Partition({3, 1})) == 8);
    CHECK(rational_component_count(Partition({1, 1})) == 4);
    CHECK(rational_component_count(Partition({2})) == 1);
    for (int d = 1; d <= 10; ++d)
        for (const auto& m : partitions_of(d)) {
            Rational c = rational_component_count(m);
            CHECK(c.get_den() == 1);
            CHECK(c > 0);
        }
}

TEST_CASE("parsing is canonical") {
    CHECK(Partition::parse("3,1") == Partition({3, 1}));
    CHECK(Partition::parse("1,3") == Partition({3, 1}));
    CHECK(Partition::parse("3 1") == Partition({3, 1}));
    CHECK(Partition::parse("1^4") == Partition({1, 1, 1, 1}));
    CHECK(Partition::parse("3,1^2") == Partition({3, 1, 1}));
    CHECK(Partition::parse("2^2 1") == Partition({2, 2, 1}));
    CHECK_THROWS(Partition::parse(""));
    CHECK_THROWS(Partition::parse("0,1"));
    CHECK_THROWS(Partition::parse("x"));
    CHECK_THROWS(Partition::parse("3^"));
}

TEST_CASE("profile lists") {
    auto ps = parse_profiles("3,1;3,1");
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == Partition({3, 1}));
    CHECK(ps[1] == Partition({3, 1}));
    CHECK(parse_profiles("").empty());
    CHECK(format_profiles(ps) == "3,1;3,1");
    CHECK(parse_profiles("1^4; 3,1").size() == 2);
}
