#include <latinset/greedy.hpp>
#include <latinset/solver.hpp>

#include "search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using std::vector;

namespace latinset {

auto CellOrder::from_order(int n, vector<Cell> order) -> CellOrder
{
    if (order.size() != static_cast<std::size_t>(n) * n)
        throw RangeError("cell order must list all " + std::to_string(n * n) + " cells");
    vector<int> ranking(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [r, c] = order[i];
        if (r < 0 || c < 0 || r >= n || c >= n)
            throw RangeError("cell " + to_string(order[i]) + " outside order " + std::to_string(n));
        auto & slot = ranking[r * n + c];
        if (slot >= 0)
            throw RangeError("cell " + to_string(order[i]) + " listed twice");
        slot = static_cast<int>(i);
    }
    return CellOrder{n, std::move(order), std::move(ranking)};
}

auto cell_order_f0(int n) -> CellOrder
{
    vector<Cell> order;
    for (int r = n - 1; r >= 0; --r)
        for (int c = n - 1; c >= 0; --c)
            order.push_back({r, c});
    return CellOrder::from_order(n, std::move(order));
}

auto cell_order_f0_printed(int n) -> CellOrder
{
    vector<Cell> order;
    for (int i = 1; i <= n * n; ++i)
        order.push_back({(i - 1) / n, ((n - i) % n + n) % n});
    return CellOrder::from_order(n, std::move(order));
}

auto cell_order_random(int n, std::uint64_t seed) -> CellOrder
{
    vector<Cell> order;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            order.push_back({r, c});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return CellOrder::from_order(n, std::move(order));
}

auto reversed(const CellOrder & f) -> CellOrder
{
    return CellOrder::from_order(f.n, vector<Cell>(f.order.rbegin(), f.order.rend()));
}

auto ggcs(const PartialLatinSquare & p, const CellOrder & f) -> PartialLatinSquare
{
    if (f.n != p.order())
        throw RangeError("cell order is for order " + std::to_string(f.n) + ", square has order " + std::to_string(p.order()));
    if (count_completions(p, 2) != 1)
        throw NotUniquelyCompletable();

    // Every intermediate square completes uniquely to the same L, so an
    // entry x may go exactly when no completion disagrees with L at x.
    detail::SearchState st(p);
    for (auto & cell : f.order) {
        auto sym = st.at(cell.row, cell.col);
        if (sym < 0)
            continue;
        st.clear(cell.row, cell.col);
        if (detail::completes_avoiding(st, cell.row, cell.col, sym))
            st.place(cell.row, cell.col, sym);
    }
    return st.to_square();
}

auto gcs(const PartialLatinSquare & l) -> PartialLatinSquare
{
    if (! l.is_full())
        throw RangeError("gcs needs a full latin square");
    return ggcs(l, cell_order_f0(l.order()));
}

}
