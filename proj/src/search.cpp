#include "search.hpp"

#include <string>

namespace latinset::detail {

SearchState::SearchState(const PartialLatinSquare & p) :
    n_(p.order()),
    full_(full_mask(p.order())),
    empty_(p.order() * p.order()),
    grid_(static_cast<std::size_t>(p.order()) * p.order(), -1),
    row_used_(p.order(), 0),
    col_used_(p.order(), 0)
{
    if (n_ > 64)
        throw RangeError("completion search supports orders up to 64, got " + std::to_string(n_));
    for (auto & t : p.entries()) {
        if (t.sym >= n_)
            throw RangeError("entry " + to_string(t) + " has a symbol outside 0.." + std::to_string(n_ - 1));
        place(t.row, t.col, t.sym);
    }
}

auto SearchState::place(int r, int c, int sym) -> bool
{
    auto bit = Mask{1} << sym;
    if (grid_[r * n_ + c] >= 0 || (row_used_[r] & bit) || (col_used_[c] & bit))
        return false;
    grid_[r * n_ + c] = static_cast<std::int8_t>(sym);
    row_used_[r] |= bit;
    col_used_[c] |= bit;
    --empty_;
    return true;
}

void SearchState::clear(int r, int c)
{
    auto sym = grid_[r * n_ + c];
    if (sym < 0)
        return;
    auto bit = Mask{1} << sym;
    row_used_[r] &= ~bit;
    col_used_[c] &= ~bit;
    grid_[r * n_ + c] = -1;
    ++empty_;
}

auto SearchState::propagate() -> bool
{
    bool changed = true;
    while (changed && empty_ > 0) {
        changed = false;

        for (int r = 0; r < n_; ++r) {
            if (row_used_[r] == full_)
                continue;
            for (int c = 0; c < n_; ++c) {
                if (grid_[r * n_ + c] >= 0)
                    continue;
                auto m = candidates(r, c);
                if (! m)
                    return false;
                if (single_bit(m)) {
                    place(r, c, std::countr_zero(m));
                    changed = true;
                }
            }
        }

        // hidden singles: a missing symbol with one possible cell in a row
        for (int r = 0; r < n_; ++r) {
            if (row_used_[r] == full_)
                continue;
            Mask once = 0, twice = 0;
            for (int c = 0; c < n_; ++c)
                if (grid_[r * n_ + c] < 0) {
                    auto m = candidates(r, c);
                    twice |= once & m;
                    once |= m;
                }
            auto missing = full_ & ~row_used_[r];
            if (missing & ~once)
                return false;
            for (auto lone = once & ~twice & missing; lone; lone &= lone - 1) {
                auto sym = std::countr_zero(lone);
                int at_col = -1;
                for (int c = 0; c < n_ && at_col < 0; ++c)
                    if (grid_[r * n_ + c] < 0 && (candidates(r, c) >> sym & 1))
                        at_col = c;
                if (at_col < 0 || ! place(r, at_col, sym))
                    return false;
                changed = true;
            }
        }

        for (int c = 0; c < n_; ++c) {
            if (col_used_[c] == full_)
                continue;
            Mask once = 0, twice = 0;
            for (int r = 0; r < n_; ++r)
                if (grid_[r * n_ + c] < 0) {
                    auto m = candidates(r, c);
                    twice |= once & m;
                    once |= m;
                }
            auto missing = full_ & ~col_used_[c];
            if (missing & ~once)
                return false;
            for (auto lone = once & ~twice & missing; lone; lone &= lone - 1) {
                auto sym = std::countr_zero(lone);
                int at_row = -1;
                for (int r = 0; r < n_ && at_row < 0; ++r)
                    if (grid_[r * n_ + c] < 0 && (candidates(r, c) >> sym & 1))
                        at_row = r;
                if (at_row < 0 || ! place(at_row, c, sym))
                    return false;
                changed = true;
            }
        }
    }
    return true;
}

auto SearchState::to_square() const -> PartialLatinSquare
{
    std::vector<Triple> es;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (grid_[r * n_ + c] >= 0)
                es.push_back({r, c, grid_[r * n_ + c]});
    return PartialLatinSquare::from_triples(n_, es);
}

namespace {
    struct Counter {
        std::size_t cap;
        std::size_t count = 0;
        std::vector<SearchState> * found;
        std::size_t keep;

        void run(SearchState st)
        {
            if (! st.propagate())
                return;
            if (st.empty_cells() == 0) {
                if (found && found->size() < keep)
                    found->push_back(st);
                ++count;
                return;
            }

            // fewest candidates first, ties to the earliest cell
            int n = st.order(), best_r = -1, best_c = -1, best = 65;
            for (int r = 0; r < n && best > 2; ++r)
                for (int c = 0; c < n; ++c)
                    if (st.at(r, c) < 0) {
                        auto k = std::popcount(st.candidates(r, c));
                        if (k < best) {
                            best = k;
                            best_r = r;
                            best_c = c;
                            if (k <= 2)
                                break;
                        }
                    }

            for (auto m = st.candidates(best_r, best_c); m && count < cap; m &= m - 1) {
                SearchState child(st);
                child.place(best_r, best_c, std::countr_zero(m));
                run(std::move(child));
            }
        }
    };
}

auto count_from(const SearchState & start, std::size_t cap, std::vector<SearchState> * found, std::size_t keep) -> std::size_t
{
    if (cap == 0)
        return 0;
    Counter counter{cap, 0, found, keep};
    counter.run(start);
    return counter.count;
}

auto completes_avoiding(const SearchState & state, int r, int c, int sym) -> bool
{
    auto m = state.candidates(r, c) & ~(Mask{1} << sym);
    for (; m; m &= m - 1) {
        SearchState child(state);
        child.place(r, c, std::countr_zero(m));
        if (count_from(child, 1) > 0)
            return true;
    }
    return false;
}

}
