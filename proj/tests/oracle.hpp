#pragma once

// Reference implementations kept deliberately naive: plain arrays, first
// empty cell, no propagation. They share no code with the library.

#include <latinset/pls.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using latinset::PartialLatinSquare;
using latinset::Triple;

struct Grid {
    int n = 0;
    std::vector<int> cell; // -1 empty

    explicit Grid(const PartialLatinSquare & p) : n(p.order()), cell(static_cast<std::size_t>(n) * n, -1)
    {
        for (auto & t : p.entries())
            cell[t.row * n + t.col] = t.sym;
    }

    auto ok(int r, int c, int v) const -> bool
    {
        for (int x = 0; x < n; ++x)
            if (cell[r * n + x] == v || cell[x * n + c] == v)
                return false;
        return true;
    }

    auto to_square() const -> PartialLatinSquare
    {
        std::vector<Triple> ts;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (cell[r * n + c] >= 0)
                    ts.push_back({r, c, cell[r * n + c]});
        return PartialLatinSquare::from_triples(n, ts);
    }
};

inline void count_rec(Grid & g, int from, std::size_t cap, std::size_t & found, std::vector<PartialLatinSquare> * keep)
{
    int n = g.n;
    while (from < n * n && g.cell[from] >= 0)
        ++from;
    if (from == n * n) {
        ++found;
        if (keep)
            keep->push_back(g.to_square());
        return;
    }
    for (int v = 0; v < n && found < cap; ++v)
        if (g.ok(from / n, from % n, v)) {
            g.cell[from] = v;
            count_rec(g, from + 1, cap, found, keep);
            g.cell[from] = -1;
        }
}

inline auto count_completions(const PartialLatinSquare & p, std::size_t cap = 2,
    std::vector<PartialLatinSquare> * keep = nullptr) -> std::size_t
{
    Grid g(p);
    std::size_t found = 0;
    count_rec(g, 0, cap, found, keep);
    return found;
}

inline auto xor_square(int s) -> PartialLatinSquare
{
    int n = 1 << s;
    std::vector<Triple> ts;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            ts.push_back({r, c, r ^ c});
    return PartialLatinSquare::from_triples(n, ts);
}

inline auto p_size(int s) -> std::size_t
{
    // |P_s| = 3|P_{s-1}| + 4^{s-1}: three shifted copies of P_{s-1} plus a full L_{s-1}.
    std::size_t size = 1, full = 1;
    for (int t = 2; t <= s; ++t) {
        size = 3 * size + full * 4;
        full *= 4;
    }
    return size;
}

/// Number of intercalates of a full square by checking all row and column pairs.
inline auto count_intercalates(const PartialLatinSquare & l) -> std::size_t
{
    int n = l.order();
    std::size_t count = 0;
    for (int r = 0; r < n; ++r)
        for (int rp = r + 1; rp < n; ++rp)
            for (int c = 0; c < n; ++c)
                for (int cp = c + 1; cp < n; ++cp)
                    if (*l.at(r, c) == *l.at(rp, cp) && *l.at(r, cp) == *l.at(rp, c))
                        ++count;
    return count;
}

inline auto random_fill(Grid & g, int from, std::mt19937_64 & rng) -> bool
{
    int n = g.n;
    if (from == n * n)
        return true;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int v : order)
        if (g.ok(from / n, from % n, v)) {
            g.cell[from] = v;
            if (random_fill(g, from + 1, rng))
                return true;
            g.cell[from] = -1;
        }
    return false;
}

/// Random latin square by randomized backtracking, cell by cell.
inline auto random_latin(int n, std::mt19937_64 & rng) -> PartialLatinSquare
{
    Grid g(PartialLatinSquare::empty(n));
    random_fill(g, 0, rng);
    return g.to_square();
}

/// Random latin square with cells dropped independently; keep is the
/// probability of retaining each entry.
inline auto random_partial(int n, double keep, std::mt19937_64 & rng) -> PartialLatinSquare
{
    auto full = random_latin(n, rng);
    std::bernoulli_distribution coin(keep);
    std::vector<Triple> ts;
    for (auto & t : full.entries())
        if (coin(rng))
            ts.push_back(t);
    return PartialLatinSquare::from_triples(n, ts);
}

/// Random non-conflicting triples, not necessarily completable.
inline auto random_scatter(int n, int tries, std::mt19937_64 & rng) -> PartialLatinSquare
{
    Grid g(PartialLatinSquare::empty(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < tries; ++i) {
        int r = pick(rng), c = pick(rng), v = pick(rng);
        if (g.cell[r * n + c] < 0 && g.ok(r, c, v))
            g.cell[r * n + c] = v;
    }
    return g.to_square();
}

}
