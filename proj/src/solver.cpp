#include <latinset/solver.hpp>

#include "search.hpp"

#include <algorithm>
#include <bit>

using std::optional;
using std::span;
using std::vector;

namespace latinset {

using detail::Mask;
using detail::SearchState;

AlternativesGrid::AlternativesGrid(int order, vector<Cell> region, vector<SymbolMask> masks) :
    order_(order),
    region_(std::move(region)),
    masks_(std::move(masks))
{
}

auto AlternativesGrid::contains(int r, int c) const -> bool
{
    return std::binary_search(region_.begin(), region_.end(), Cell{r, c});
}

auto AlternativesGrid::mask(int r, int c) const -> SymbolMask
{
    auto it = std::lower_bound(region_.begin(), region_.end(), Cell{r, c});
    if (it == region_.end() || *it != Cell{r, c})
        throw RangeError("cell " + to_string(Cell{r, c}) + " is not in the region");
    return masks_[it - region_.begin()];
}

auto AlternativesGrid::candidates(int r, int c) const -> vector<int>
{
    vector<int> out;
    for (auto m = mask(r, c); m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

auto all_cells(int n) -> vector<Cell>
{
    vector<Cell> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.push_back({r, c});
    return out;
}

auto cell_region(span<const int> rows, span<const int> cols) -> vector<Cell>
{
    vector<Cell> out;
    for (auto r : rows)
        for (auto c : cols)
            out.push_back({r, c});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto alternatives(const PartialLatinSquare & p, span<const Cell> region) -> AlternativesGrid
{
    SearchState st(p);
    vector<Cell> cells(region.begin(), region.end());
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    vector<SymbolMask> masks;
    masks.reserve(cells.size());
    for (auto & cell : cells) {
        if (cell.row < 0 || cell.col < 0 || cell.row >= p.order() || cell.col >= p.order())
            throw RangeError("cell " + to_string(cell) + " outside order " + std::to_string(p.order()));
        masks.push_back(st.at(cell.row, cell.col) >= 0 ? 0 : st.candidates(cell.row, cell.col));
    }
    return AlternativesGrid(p.order(), std::move(cells), std::move(masks));
}

auto alternatives(const PartialLatinSquare & p) -> AlternativesGrid
{
    auto cells = all_cells(p.order());
    return alternatives(p, cells);
}

NoCompletion::NoCompletion() :
    Error("partial latin square has no completion")
{
}

NotUnique::NotUnique(PartialLatinSquare first, PartialLatinSquare second) :
    Error("partial latin square has more than one completion"),
    first_(std::move(first)),
    second_(std::move(second))
{
}

Stuck::Stuck(CompletionTrace partial) :
    Error("no cell with a single candidate after " + std::to_string(partial.steps.size()) + " forced fills"),
    partial_(std::move(partial))
{
}

NotUniquelyCompletable::NotUniquelyCompletable() :
    Error("partial latin square is not uniquely completable")
{
}

auto count_completions(const PartialLatinSquare & p, std::size_t cap) -> std::size_t
{
    return detail::count_from(SearchState(p), cap);
}

auto find_completion(const PartialLatinSquare & p) -> optional<PartialLatinSquare>
{
    vector<SearchState> found;
    if (detail::count_from(SearchState(p), 1, &found, 1) == 0)
        return std::nullopt;
    return found.front().to_square();
}

auto complete_unique(const PartialLatinSquare & p) -> PartialLatinSquare
{
    vector<SearchState> found;
    auto count = detail::count_from(SearchState(p), 2, &found, 2);
    if (count == 0)
        throw NoCompletion();
    if (count > 1)
        throw NotUnique(found[0].to_square(), found[1].to_square());
    return found.front().to_square();
}

auto has_alternative_completion(const PartialLatinSquare & p, const Triple & excluded) -> bool
{
    SearchState st(p);
    if (excluded.row < 0 || excluded.col < 0 || excluded.row >= p.order() || excluded.col >= p.order())
        throw RangeError("cell outside the square");
    if (st.at(excluded.row, excluded.col) >= 0)
        throw RangeError("cell " + to_string(Cell{excluded.row, excluded.col}) + " is already filled");
    return detail::completes_avoiding(st, excluded.row, excluded.col, excluded.sym);
}

namespace {
    /// Naked-single propagation over `region` (row-major, least cell
    /// first). Returns true when every region cell ends up filled.
    auto propagate_naked(SearchState & st, span<const Cell> region, vector<Triple> & steps) -> bool
    {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto & cell : region) {
                if (st.at(cell.row, cell.col) >= 0)
                    continue;
                auto m = st.candidates(cell.row, cell.col);
                if (detail::single_bit(m)) {
                    auto sym = std::countr_zero(m);
                    st.place(cell.row, cell.col, sym);
                    steps.push_back({cell.row, cell.col, sym});
                    progress = true;
                    break;
                }
            }
        }
        return std::all_of(region.begin(), region.end(), [&](const Cell & c) { return st.at(c.row, c.col) >= 0; });
    }
}

auto strong_complete(const PartialLatinSquare & p) -> CompletionTrace
{
    auto n = p.order();
    vector<int> every(n);
    for (int i = 0; i < n; ++i)
        every[i] = i;
    return strong_complete_region(p, every, every);
}

auto strong_complete_region(const PartialLatinSquare & p, span<const int> rows, span<const int> cols) -> CompletionTrace
{
    for (auto v : rows)
        if (v < 0 || v >= p.order())
            throw RangeError("row " + std::to_string(v) + " outside order " + std::to_string(p.order()));
    for (auto v : cols)
        if (v < 0 || v >= p.order())
            throw RangeError("column " + std::to_string(v) + " outside order " + std::to_string(p.order()));

    SearchState st(p);
    auto region = cell_region(rows, cols);
    CompletionTrace trace{{}, p};
    bool done = propagate_naked(st, region, trace.steps);
    trace.result = st.to_square();
    if (! done)
        throw Stuck(std::move(trace));
    return trace;
}

auto completes_top_down(const PartialLatinSquare & p) -> TopDownReport
{
    if (count_completions(p, 2) != 1)
        throw NotUniquelyCompletable();

    auto n = p.order();
    SearchState st(p);
    TopDownReport report{true, CompletionTrace{{}, p}, std::nullopt};
    for (int r = 0; r < n; ++r) {
        vector<Cell> row;
        for (int c = 0; c < n; ++c)
            row.push_back({r, c});
        if (! propagate_naked(st, row, report.trace.steps)) {
            report.completes = false;
            report.stuck_row = r;
            break;
        }
    }
    report.trace.result = st.to_square();
    return report;
}

namespace {
    /// Fillings of the empty cells of row r, capped at `cap`.
    auto row_fillings(SearchState & st, int r, int c, std::size_t cap, std::size_t & count)
    {
        auto n = st.order();
        while (c < n && st.at(r, c) >= 0)
            ++c;
        if (c == n) {
            ++count;
            return;
        }
        for (auto m = st.candidates(r, c); m && count < cap; m &= m - 1) {
            st.place(r, c, std::countr_zero(m));
            row_fillings(st, r, c + 1, cap, count);
            st.clear(r, c);
        }
    }
}

auto completes_top_down_exhaustive(const PartialLatinSquare & p) -> bool
{
    auto full = complete_unique(p);
    SearchState st(p);
    auto n = p.order();
    for (int r = 0; r < n; ++r) {
        std::size_t count = 0;
        row_fillings(st, r, 0, 2, count);
        if (count != 1)
            return false;
        for (int c = 0; c < n; ++c)
            if (st.at(r, c) < 0)
                st.place(r, c, *full.at(r, c));
    }
    return true;
}

auto is_critical_set(const PartialLatinSquare & c) -> bool
{
    if (count_completions(c, 2) != 1)
        return false;
    // With c uniquely completable to L, a second completion of c - {x}
    // must disagree with L at x, so one restricted search per entry
    // decides count_completions(c - {x}, 2) >= 2.
    SearchState st(c);
    for (auto & x : c.entries()) {
        st.clear(x.row, x.col);
        bool alternative = detail::completes_avoiding(st, x.row, x.col, x.sym);
        st.place(x.row, x.col, x.sym);
        if (! alternative)
            return false;
    }
    return true;
}

}
