#include "oracle.hpp"

#include <latinset/greedy.hpp>
#include <latinset/solver.hpp>
#include <latinset/trades.hpp>
#include <latinset/two_group.hpp>

#include <doctest.h>

#include <random>

using namespace latinset;

namespace {

auto cyclic(int n) -> PartialLatinSquare
{
    std::vector<Triple> ts;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            ts.push_back({r, c, (r + c) % n});
    return PartialLatinSquare::from_triples(n, ts);
}

}

TEST_CASE("intercalate enumeration matches brute force")
{
    CHECK(enumerate_intercalates(build_L(2)).size() == 12);
    CHECK(enumerate_intercalates(cyclic(3)).empty());
    CHECK(enumerate_intercalates(cyclic(5)).empty());
    CHECK(enumerate_intercalates(cyclic(4)).size() == oracle::count_intercalates(cyclic(4)));

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto l = oracle::random_latin(2 + trial % 6, rng);
        auto found = enumerate_intercalates(l);
        CHECK(found.size() == oracle::count_intercalates(l));
        CHECK(std::is_sorted(found.begin(), found.end()));
        for (auto & i : found) {
            CHECK(i.least() == least_element(i.as_square(l.order())));
            CHECK(is_trade_pair(i.as_square(l.order()), i.mate(l.order())));
        }
    }
}

TEST_CASE("trade from two latin squares")
{
    auto l = build_L(3);
    auto lp = swapped_L(3, 0, 1);
    auto pair = trade_from_squares(l, lp);
    CHECK(is_trade_pair(pair.t, pair.mate));
    CHECK(pair.t.size() == 16);
    CHECK_THROWS_AS(trade_from_squares(l, l), IdenticalSquares);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + trial % 4;
        auto a = oracle::random_latin(n, rng), b = oracle::random_latin(n, rng);
        if (a == b)
            continue;
        auto p = trade_from_squares(a, b);
        CHECK(is_trade_pair(p.t, p.mate));
    }
}

TEST_CASE("critical sets meet every intercalate")
{
    for (int s = 1; s <= 3; ++s) {
        auto l = build_L(s);
        auto p = build_P(s);
        for (auto & i : enumerate_intercalates(l)) {
            int met = 0;
            for (auto & t : i.cells)
                met += p.contains(t);
            CHECK(met >= 1);
        }
    }
}

TEST_CASE("P_s is 2-critical and satisfies the gcs characterization")
{
    for (int s = 1; s <= 4; ++s) {
        auto l = build_L(s), p = build_P(s);
        CHECK(is_2_critical(p, l));
        auto ch = verify_gcs_characterization(p, l);
        CHECK(ch.holds);
        CHECK(ch.equals_gcs);
        CHECK(ch.unwitnessed.empty());
    }
    CHECK_THROWS_AS(is_2_critical(build_L(2), build_L(2)), NotCriticalSet);
}

TEST_CASE("characterization separates gcs from other critical sets")
{
    auto l = build_L(3);
    int different = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto c = ggcs(l, cell_order_random(8, seed));
        auto ch = verify_gcs_characterization(c, l);
        CHECK(ch.consistent());
        different += ! ch.equals_gcs;
    }
    CHECK(different > 0);
}

TEST_CASE("witness search")
{
    auto l = build_L(2), p = build_P(2);
    for (auto & x : p.entries()) {
        auto w = intercalate_witness(l, p, x, true);
        REQUIRE(w);
        CHECK(w->least() == x);
    }
    CHECK_FALSE(intercalate_witness(l, l, Triple{0, 0, 0}, false));
}
