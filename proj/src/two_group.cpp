#include <latinset/two_group.hpp>

#include <algorithm>
#include <array>
#include <set>

using std::vector;

namespace latinset {

namespace {
    void require_s(int s, int least)
    {
        if (s < least || s > 6)
            throw RangeError("s must be in " + std::to_string(least) + "..6, got " + std::to_string(s));
    }

    auto l1() -> PartialLatinSquare
    {
        std::array<Triple, 4> es{{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
        return PartialLatinSquare::from_triples(2, es);
    }
}

auto double_square(const PartialLatinSquare & m) -> PartialLatinSquare
{
    if (! m.is_full())
        throw RangeError("doubling needs a full latin square");
    auto shifted = shift_symbols(m, 1);
    return compose_blocks(m, shifted, shifted, m);
}

auto build_L(int s) -> PartialLatinSquare
{
    require_s(s, 1);
    auto l = l1();
    for (int t = 2; t <= s; ++t)
        l = double_square(l);
    return l;
}

auto doubling_seed(const PartialLatinSquare & m, const PartialLatinSquare & c) -> PartialLatinSquare
{
    if (! m.is_full())
        throw RangeError("doubling seed needs a full latin square");
    if (c.order() != m.order())
        throw RangeError("critical set and square have different orders");
    for (auto & x : c.entries()) {
        auto v = m.at(x.row, x.col);
        if (*v != x.sym)
            throw ConflictError(ConflictError::Kind::cell, x, Triple{x.row, x.col, *v});
    }
    auto shifted = shift_symbols(c, 1);
    return compose_blocks(m, shifted, shifted, c);
}

auto build_P(int s) -> PartialLatinSquare
{
    require_s(s, 1);
    std::array<Triple, 1> origin{{{0, 0, 0}}};
    auto p = PartialLatinSquare::from_triples(2, origin);
    auto l = l1();
    for (int t = 2; t <= s; ++t) {
        p = doubling_seed(l, p);
        l = double_square(l);
    }
    return p;
}

auto build_H2_hat() -> PartialLatinSquare
{
    return swapped_L(2, 1, 2);
}

auto build_H2() -> PartialLatinSquare
{
    std::array<Triple, 7> es{{{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return PartialLatinSquare::from_triples(4, es);
}

auto swapped_L(int s, int k, int kp) -> PartialLatinSquare
{
    auto l = build_L(s);
    return apply_isotopism(l, row_swap_isotopism(l.order(), k, kp));
}

auto multiswap_L(int s, std::span<const int> blocks) -> PartialLatinSquare
{
    auto l = build_L(s);
    return apply_isotopism(l, multi_swap_isotopism(l.order(), blocks));
}

auto build_multiswap_G(int s, std::span<const int> blocks) -> PartialLatinSquare
{
    require_s(s, 2);
    int n = 1 << s, bands = n / 4;
    std::set<int> swapped;
    for (auto b : blocks) {
        if (b < 0 || b >= bands)
            throw RangeError("swap block " + std::to_string(b) + " outside 0.." + std::to_string(bands - 1));
        if (! swapped.insert(b).second)
            throw RangeError("swap block " + std::to_string(b) + " listed twice");
    }

    auto p = build_P(s);
    auto l = build_L(s);
    auto h2 = build_H2(), h2_hat = build_H2_hat();
    auto p2 = build_P(2), l2 = build_L(2);

    auto g = PartialLatinSquare::empty(n);
    for (int bi = 0; bi < bands; ++bi)
        for (int bj = 0; bj < bands; ++bj) {
            auto block = rebase(p, 4 * bi, 4 * bj, 4);
            if (! swapped.contains(bi)) {
                g = place_subsquare(g, 4 * bi, 4 * bj, block);
                continue;
            }
            auto full = block.is_full();
            if (! is_similar(full ? l2 : p2, block))
                throw Error("block (" + std::to_string(bi) + "," + std::to_string(bj) + ") of P_s is neither L_2- nor P_2-like");
            auto label = *l.at(4 * bi, 4 * bj) / 4;
            g = place_subsquare(g, 4 * bi, 4 * bj, shift_symbols(full ? h2_hat : h2, label));
        }
    return g.with_symbol_limit(n);
}

auto intercalates_cross_halves(int s) -> bool
{
    auto l = build_L(s);
    int n = l.order(), half = n / 2;
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j)
            for (int jp = half; jp < n; ++jp) {
                auto k = *l.at(i, j), kp = *l.at(i, jp);
                bool found = false;
                for (int ip = half; ip < n && ! found; ++ip)
                    found = *l.at(ip, j) == kp && *l.at(ip, jp) == k;
                if (! found)
                    return false;
            }
    return true;
}

}
