#pragma once

#include <latinset/pls.hpp>

#include <bit>
#include <cstdint>
#include <vector>

namespace latinset::detail {

using Mask = std::uint64_t;

inline auto full_mask(int n) -> Mask
{
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline auto single_bit(Mask m) -> bool
{
    return m && ! (m & (m - 1));
}

/// Dense working copy of a partial latin square with used-symbol masks per
/// row and column. Orders up to 64.
class SearchState {
public:
    explicit SearchState(const PartialLatinSquare & p);

    auto order() const noexcept -> int { return n_; }
    auto empty_cells() const noexcept -> int { return empty_; }
    auto at(int r, int c) const noexcept -> int { return grid_[r * n_ + c]; }
    auto candidates(int r, int c) const noexcept -> Mask
    {
        return full_ & ~(row_used_[r] | col_used_[c]);
    }

    /// False if the cell is filled or the symbol is already used in its
    /// row or column.
    auto place(int r, int c, int sym) -> bool;
    void clear(int r, int c);

    /// Naked and hidden singles to a fixpoint. False on contradiction.
    auto propagate() -> bool;

    auto to_square() const -> PartialLatinSquare;

private:
    int n_;
    Mask full_;
    int empty_;
    std::vector<std::int8_t> grid_;
    std::vector<Mask> row_used_, col_used_;
};

/// Counts completions of `start`, stopping at `cap`. The first `keep`
/// completions found are appended to `found` when it is non-null.
auto count_from(const SearchState & start, std::size_t cap, std::vector<SearchState> * found = nullptr,
    std::size_t keep = 0) -> std::size_t;

/// True iff `state` (whose cell (r, c) is empty) has a completion with
/// a symbol other than `sym` at (r, c).
auto completes_avoiding(const SearchState & state, int r, int c, int sym) -> bool;

}
