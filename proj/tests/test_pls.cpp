#include "oracle.hpp"

#include <latinset/pls.hpp>
#include <latinset/two_group.hpp>

#include <doctest.h>

#include <random>

using namespace latinset;

TEST_CASE("constructor rejects exactly the conflicting triple sets")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = size(rng);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::uniform_int_distribution<int> count(0, n * n);
        std::vector<Triple> ts(count(rng));
        for (auto & t : ts)
            t = {pick(rng), pick(rng), pick(rng)};

        bool latin = true;
        for (auto & a : ts)
            for (auto & b : ts) {
                if (a == b)
                    continue;
                if ((a.row == b.row && a.col == b.col) || (a.row == b.row && a.sym == b.sym)
                    || (a.col == b.col && a.sym == b.sym))
                    latin = false;
            }
        if (latin)
            CHECK_NOTHROW(PartialLatinSquare::from_triples(n, ts));
        else
            CHECK_THROWS_AS(PartialLatinSquare::from_triples(n, ts), ConflictError);
    }
}

TEST_CASE("out-of-range coordinates are rejected")
{
    std::vector<Triple> ts{{0, 2, 0}};
    CHECK_THROWS_AS(PartialLatinSquare::from_triples(2, ts), RangeError);
    ts = {{0, 0, -1}};
    CHECK_THROWS_AS(PartialLatinSquare::from_triples(2, ts), RangeError);
}

TEST_CASE("row-then-column order is total on distinct entries")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int i = 0; i < 5000; ++i) {
        Triple a{pick(rng), pick(rng), pick(rng)}, b{pick(rng), pick(rng), pick(rng)};
        int holds = (a < b) + (b < a);
        CHECK(holds == (a == b ? 0 : 1));
    }
}

TEST_CASE("least and greatest element")
{
    auto p = build_P(3);
    CHECK(least_element(p) == Triple{0, 0, 0});
    CHECK(greatest_element(p) == Triple{6, 6, 0});
    CHECK_THROWS_AS(least_element(PartialLatinSquare::empty(3)), EmptySquareError);
}

TEST_CASE("isotopisms preserve size and latinity and invert")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 5;
        auto p = oracle::random_partial(n, 0.5, rng);
        std::vector<int> r(n), c(n), v(n);
        for (int i = 0; i < n; ++i)
            r[i] = c[i] = v[i] = i;
        std::shuffle(r.begin(), r.end(), rng);
        std::shuffle(c.begin(), c.end(), rng);
        std::shuffle(v.begin(), v.end(), rng);
        Isotopism iso(r, c, v);
        auto q = apply_isotopism(p, iso);
        CHECK(q.size() == p.size());
        CHECK(apply_isotopism(q, iso.inverse()) == p);
        CHECK(iso.after(iso.inverse()) == Isotopism::identity(n));
    }
}

TEST_CASE("row swap isotopism matches a direct swap")
{
    auto l = build_L(3);
    auto swapped = apply_isotopism(l, row_swap_isotopism(8, 4, 6));
    for (int c = 0; c < 8; ++c) {
        CHECK(*swapped.at(4, c) == (6 ^ c));
        CHECK(*swapped.at(6, c) == (4 ^ c));
        CHECK(*swapped.at(5, c) == (5 ^ c));
    }
}

TEST_CASE("compose_blocks then extracting quadrants returns the inputs")
{
    auto l2 = build_L(2), p2 = build_P(2);
    auto shifted = shift_symbols(p2, 1);
    auto whole = compose_blocks(l2, shifted, shifted, p2);
    CHECK(whole.order() == 8);
    CHECK(rebase(whole, 0, 0, 4) == l2);
    CHECK(rebase(whole, 0, 4, 4, 4) == p2);
    CHECK(rebase(whole, 4, 0, 4, 4) == p2);
    CHECK(rebase(whole, 4, 4, 4) == p2);
    CHECK(whole == build_P(3));
    CHECK(subsquare(whole, 4, 4, 4).size() == p2.size());
}

TEST_CASE("compose_blocks rejects a non-latin union")
{
    auto l2 = build_L(2);
    CHECK_THROWS_AS(compose_blocks(l2, l2, l2, l2), ConflictError);
}

TEST_CASE("shift_symbols composes additively")
{
    auto p = build_P(2);
    CHECK(shift_symbols(shift_symbols(p, 1), 2) == shift_symbols(p, 3));
    CHECK(shift_symbols(p, 1).contains({0, 0, 4}));
}

TEST_CASE("similarity")
{
    auto p = build_P(3);
    auto self = is_similar(p, p);
    REQUIRE(self);
    for (auto [a, b] : self->rows)
        CHECK(a == b);
    for (auto [a, b] : self->syms)
        CHECK(a == b);

    CHECK(is_similar(rebase(p, 4, 4, 4), build_P(2)));
    CHECK(is_similar(subsquare(p, 4, 4, 4), build_P(2)));
    CHECK(is_similar(shift_symbols(p, 2), p));
    CHECK_FALSE(is_similar(build_P(2), build_L(2)));
    CHECK_FALSE(is_similar(build_P(2), build_H2()));
}

TEST_CASE("difference and with/without")
{
    auto p = build_P(2);
    auto least = least_element(p);
    auto q = p.without(least);
    CHECK(q.size() == p.size() - 1);
    CHECK(difference(p, q).size() == 1);
    CHECK(difference(p, q).contains(least));
    CHECK(q.with(least) == p);
    CHECK(q.is_subset_of(p));
    CHECK_FALSE(p.is_subset_of(q));
}
