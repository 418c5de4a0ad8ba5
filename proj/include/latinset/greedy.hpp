#pragma once

#include <latinset/pls.hpp>

#include <cstdint>
#include <vector>

namespace latinset {

/// A ranking of cells: order[0] is scanned first. ranking[r*n + c] is the
/// position of (r, c) in order.
struct CellOrder {
    int n = 0;
    std::vector<Cell> order;
    std::vector<int> ranking;

    static auto from_order(int n, std::vector<Cell> order) -> CellOrder;
    auto rank(int r, int c) const -> int { return ranking[r * n + c]; }
};

/// Bottom row to top, right to left within a row; the first cell is
/// (n-1, n-1) and the last is (0, 0).
auto cell_order_f0(int n) -> CellOrder;

/// f(i) = (floor((i-1)/n), (n-i) mod n) for i = 1..n^2, taken literally.
/// Scans the top row first; kept only for comparison with cell_order_f0.
auto cell_order_f0_printed(int n) -> CellOrder;

auto cell_order_random(int n, std::uint64_t seed) -> CellOrder;
auto reversed(const CellOrder & f) -> CellOrder;

/// Algorithm A: walk the filled cells of p in f-order and drop each entry
/// whose removal keeps the completion unique. Throws NotUniquelyCompletable.
auto ggcs(const PartialLatinSquare & p, const CellOrder & f) -> PartialLatinSquare;

/// ggcs(l, f0) for a full square l.
auto gcs(const PartialLatinSquare & l) -> PartialLatinSquare;

}
