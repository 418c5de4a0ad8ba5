#include "oracle.hpp"

#include <latinset/greedy.hpp>
#include <latinset/solver.hpp>
#include <latinset/two_group.hpp>

#include <doctest.h>

#include <random>

using namespace latinset;

namespace {

/// Algorithm A written out against the naive oracle.
auto naive_ggcs(const PartialLatinSquare & l, const CellOrder & f) -> PartialLatinSquare
{
    auto p = l;
    for (auto cell : f.order) {
        auto sym = p.at(cell.row, cell.col);
        if (! sym)
            continue;
        auto q = p.without({cell.row, cell.col, *sym});
        if (oracle::count_completions(q) == 1)
            p = q;
    }
    return p;
}

}

TEST_CASE("f0 scans bottom row first, right to left")
{
    auto f = cell_order_f0(4);
    CHECK(f.order.front() == Cell{3, 3});
    CHECK(f.order[1] == Cell{3, 2});
    CHECK(f.order[4] == Cell{2, 3});
    CHECK(f.order.back() == Cell{0, 0});
    for (int i = 0; i < 16; ++i)
        CHECK(f.rank(f.order[i].row, f.order[i].col) == i);

    auto printed = cell_order_f0_printed(4);
    CHECK(printed.order.front() == Cell{0, 3});
    CHECK(printed.order[3] == Cell{0, 0});
    CHECK(reversed(reversed(f)).order == f.order);
}

TEST_CASE("random orders are permutations and depend on the seed")
{
    auto a = cell_order_random(5, 1), b = cell_order_random(5, 1), c = cell_order_random(5, 2);
    CHECK(a.order == b.order);
    CHECK(a.order != c.order);
    auto sorted = a.order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 25; ++i)
        CHECK(sorted[i] == Cell{i / 5, i % 5});
}

TEST_CASE("gcs agrees with Algorithm A run on the naive oracle")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 4;
        auto l = oracle::random_latin(n, rng);
        auto f = trial % 2 ? cell_order_f0(n) : cell_order_random(n, rng());
        CHECK(ggcs(l, f) == naive_ggcs(l, f));
    }
}

TEST_CASE("gcs output is critical, idempotent and avoids the last row and column")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + trial % 5;
        auto l = oracle::random_latin(n, rng);
        auto c = gcs(l);
        CHECK(is_critical_set(c));
        CHECK(c.is_subset_of(l));
        CHECK(ggcs(c, cell_order_f0(n)) == c);
        for (auto & t : c.entries()) {
            CHECK(t.row != n - 1);
            CHECK(t.col != n - 1);
        }
    }
}

TEST_CASE("the printed formula does not reproduce P_3")
{
    auto l = build_L(3);
    auto literal = ggcs(l, cell_order_f0_printed(8));
    CHECK(is_critical_set(literal));
    CHECK(literal != build_P(3));
    CHECK(gcs(l) == build_P(3));
}

TEST_CASE("ggcs needs a uniquely completable input")
{
    CHECK_THROWS_AS(ggcs(PartialLatinSquare::empty(3), cell_order_f0(3)), NotUniquelyCompletable);
    CHECK_THROWS_AS(gcs(build_P(2)), Error);
}
