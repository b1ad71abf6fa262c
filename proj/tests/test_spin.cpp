#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shw/error.hpp"
#include "shw/spin.hpp"

using namespace shw;

namespace {

const Partition p31({3, 1});
const Partition p3({3});

std::vector<Partition> stack31(int k) { return std::vector<Partition>(k, p31); }
std::vector<Partition> stack3(int k) { return std::vector<Partition>(k, p3); }

}  // namespace

TEST_CASE("parity algebra") {
    CHECK(parity_sign(Parity::even) == 1);
    CHECK(parity_sign(Parity::odd) == -1);
    CHECK(parity_compose(Parity::odd, Parity::odd) == Parity::even);
    CHECK(parity_compose(Parity::odd, Parity::even) == Parity::odd);
    CHECK(parse_parity("even") == Parity::even);
    CHECK(parse_parity("-") == Parity::odd);
    CHECK_FALSE(parse_parity("both").has_value());
}

TEST_CASE("query validation") {
    CHECK_THROWS_AS(SpinQuery::make(0, Parity::odd, 4, {}), Error);
    try {
        SpinQuery::make(0, Parity::odd, 4, {});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unrealizable_spin_structure);
    }
    CHECK_THROWS_AS(SpinQuery::make(1, Parity::odd, 4, {Partition({2, 2})}), Error);
    CHECK_THROWS_AS(SpinQuery::make(1, Parity::odd, 4, {Partition({3})}), Error);
    CHECK_THROWS_AS(SpinQuery::make(1, Parity::odd, 25, {}), Error);
}

TEST_CASE("normalization") {
    Partition trivial4({1, 1, 1, 1});
    SpinQuery q = SpinQuery::make(1, Parity::odd, 4, {trivial4, p31});
    SpinQuery n = normalize(q);
    CHECK(n.profiles == std::vector<Partition>{p31});

    SpinQuery fixed = SpinQuery::make(2, Parity::even, 4, {});
    CHECK(normalize(fixed) == fixed);

    Partition trivial3({1, 1, 1});
    SpinQuery q3 = SpinQuery::make(0, Parity::even, 3, {trivial3, trivial3});
    CHECK(normalize(q3).profiles.empty());
}

TEST_CASE("degree-4 anchor values") {
    SpinEngine engine;
    CHECK(engine.evaluate(SpinQuery::make(1, Parity::odd, 4, stack31(1))) == -6);
    CHECK(engine.evaluate(SpinQuery::make(1, Parity::odd, 4, {})) == 0);
    CHECK(engine.evaluate(SpinQuery::make(0, Parity::even, 4, stack31(3))) == Rational(2, 3));
    CHECK(engine.evaluate(SpinQuery::make(1, Parity::odd, 4, stack31(2))) == -12);
    CHECK(engine.evaluate(SpinQuery::make(2, Parity::even, 4, {})) == 108);
    CHECK(engine.evaluate(SpinQuery::make(0, Parity::even, 4, {})) == Rational(1, 24));

    for (int k = 0; k <= 8; ++k) {
        Rational odd_want = pow_int(-2, k) - pow_int(4, k);
        Rational even_want = pow_int(-2, k) + pow_int(4, k);
        CHECK(engine.evaluate(SpinQuery::make(1, Parity::odd, 4, stack31(k))) == odd_want);
        CHECK(engine.evaluate(SpinQuery::make(1, Parity::even, 4, stack31(k))) == even_want);
    }
}

TEST_CASE("closed forms for degree 3 and 4") {
    SpinEngine engine;
    for (int h = 0; h <= 4; ++h)
        for (int k = 0; k <= 5; ++k) {
            if (h > 0) {
                Rational want3 = pow_rational(3, 2 * h - 2) *
                                 (neg_one_pow(k) * pow_rational(2, k + h - 1) - 1);
                CHECK(engine.evaluate(SpinQuery::make(h, Parity::odd, 3, stack3(k))) == want3);
                Rational want4 = pow_rational(6, 2 * h - 2) * pow_int(2, k) *
                                 (-pow_rational(2, k + h - 1) + neg_one_pow(k));
                CHECK(engine.evaluate(SpinQuery::make(h, Parity::odd, 4, stack31(k))) == want4);
            }
            Rational want3e = pow_rational(3, 2 * h - 2) *
                              (neg_one_pow(k) * pow_rational(2, k + h - 1) + 1);
            CHECK(engine.evaluate(SpinQuery::make(h, Parity::even, 3, stack3(k))) == want3e);
            Rational want4e = pow_rational(6, 2 * h - 2) * pow_int(2, k) *
                              (pow_rational(2, k + h - 1) + neg_one_pow(k));
            CHECK(engine.evaluate(SpinQuery::make(h, Parity::even, 4, stack31(k))) == want4e);
        }
}

TEST_CASE("trivial insertions do not change values") {
    SpinEngine engine;
    Partition trivial4({1, 1, 1, 1});
    for (int k = 0; k <= 3; ++k) {
        auto base = stack31(k);
        auto padded = base;
        padded.push_back(trivial4);
        CHECK(engine.evaluate(SpinQuery::make(2, Parity::odd, 4, padded)) ==
              engine.evaluate(SpinQuery::make(2, Parity::odd, 4, base)));
    }
}

TEST_CASE("splitting evaluates to the direct value") {
    SpinEngine engine;
    SpinQuery q = SpinQuery::make(1, Parity::odd, 4, stack31(1));
    CHECK(split_spin_hurwitz(engine, q, 1, 0, Parity::odd, Parity::even, 1) == -6);

    SpinQuery q2 = SpinQuery::make(2, Parity::odd, 4, {});
    CHECK(split_spin_hurwitz(engine, q2, 1, 1, Parity::even, Parity::odd, 0) == -36);

    SpinQuery q3 = SpinQuery::make(1, Parity::even, 3, {});
    CHECK(split_spin_hurwitz(engine, q3, 1, 0, Parity::even, Parity::even, 0) ==
          engine.evaluate(q3));
}

TEST_CASE("invalid splits are rejected") {
    SpinEngine engine;
    SpinQuery q = SpinQuery::make(2, Parity::even, 4, stack31(1));
    auto code = [&](int h1, int h2, Parity p1, Parity p2, int k0) {
        try {
            split_spin_hurwitz(engine, q, h1, h2, p1, p2, k0);
            return std::string("no error");
        } catch (const Error& e) {
            return std::string(errc_name(e.code()));
        }
    };
    CHECK(code(1, 2, Parity::even, Parity::even, 0) == "InvalidSplit");   // genus sum
    CHECK(code(1, 1, Parity::even, Parity::odd, 0) == "InvalidSplit");    // parity sum
    CHECK(code(2, 0, Parity::odd, Parity::odd, 0) == "InvalidSplit");     // (0,odd) factor
    CHECK(code(1, 1, Parity::even, Parity::even, 2) == "InvalidSplit");   // k0 out of range
}

TEST_CASE("local GT invariants") {
    SpinEngine engine;
    CHECK(gt_local(engine, 2, Parity::even, 4) == 108);
    CHECK(gt_local(engine, 3, Parity::odd, 4) == -3888);
    CHECK(gt_local(engine, 3, Parity::even, 4) == 6480);
    for (int d : {3, 4})
        for (int h = 2; h <= 4; ++h)
            for (Parity p : {Parity::even, Parity::odd})
                CHECK(gt_local(engine, h, p, d) == engine.evaluate(SpinQuery::make(h, p, d, {})));
    CHECK_THROWS_AS(gt_local(engine, 1, Parity::even, 4), std::invalid_argument);
}

TEST_CASE("eop genus-1 helper") {
    CHECK(eop_genus1(0) == 0);
    CHECK(eop_genus1(1) == -6);
    CHECK(eop_genus1(2) == -12);
    SpinEngine engine;
    for (int k = 0; k <= 8; ++k)
        CHECK(eop_genus1(k) == engine.evaluate(SpinQuery::make(1, Parity::odd, 4, stack31(k))));
    CentralCharacterData data;
    CHECK(data.p1(p31) == Rational(4) - Rational(1, 24));
    CHECK(data.p3(p31) == Rational(28) - Rational(1, 240));
}

TEST_CASE("degree >= 5 needs a provider") {
    SpinEngine engine;
    try {
        engine.evaluate(SpinQuery::make(1, Parity::odd, 5, {}));
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == errc::base_case_unavailable);
    }
    CHECK_THROWS_AS(engine.evaluate(SpinQuery::make(3, Parity::even, 5, {})), Error);

    // a provider that answers every genus<=1 degree-5 query with 1 turns the
    // genus-2 evaluation into the sum of centralizer orders of odd partitions
    struct Ones : BaseProvider {
        std::optional<Rational> lookup(const SpinQuery& nq) const override {
            if (nq.d == 5 && nq.h <= 1) return Rational(1);
            return std::nullopt;
        }
    };
    engine.add_provider(std::make_shared<Ones>());
    Integer z_sum = 0;
    for (const auto& m : odd_partitions_of(5)) z_sum += m.centralizer_order();
    CHECK(z_sum == 131);
    CHECK(engine.evaluate(SpinQuery::make(2, Parity::even, 5, {})) == Rational(z_sum));
}

TEST_CASE("memoization transparency") {
    SpinEngine cold;
    cold.set_memo_enabled(false);
    SpinEngine warm;
    for (Parity p : {Parity::even, Parity::odd}) {
        SpinQuery q = SpinQuery::make(4, p, 4, stack31(2));
        CHECK(cold.evaluate(q) == warm.evaluate(q));
        CHECK(warm.evaluate(q) == warm.evaluate(q));
    }
}

TEST_CASE("derivation trace") {
    SpinEngine engine;
    DerivationNode trace;
    Rational v = engine.evaluate_traced(SpinQuery::make(1, Parity::even, 3, {}), trace);
    CHECK(v == 2);
    CHECK(trace.rule == "handle-removal");
    REQUIRE(trace.terms.size() == 2);
    CHECK(trace.terms[0].coefficient == 3);   // z of (3)
    CHECK(trace.terms[1].coefficient == 6);   // z of (1,1,1)
    CHECK(trace.terms[0].node->rule == "base-case");
    CHECK(trace.value == v);
}

TEST_CASE("degree 1 and 2 shipped values") {
    SpinEngine engine;
    for (int h = 0; h <= 5; ++h)
        for (Parity p : {Parity::even, Parity::odd}) {
            if (h == 0 && p == Parity::odd) continue;
            Rational d1 = engine.evaluate(SpinQuery::make(h, p, 1, {}));
            CHECK(d1 == parity_sign(p));
            Rational d2 = engine.evaluate(SpinQuery::make(h, p, 2, {}));
            CHECK(d2 == Rational(parity_sign(p)) * pow_rational(2, h - 1));
        }
}
