#pragma once

#include <latinset/pls.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace latinset {

using SymbolMask = std::uint64_t;

/// Candidate symbols per cell of a region, from row and column elimination
/// only. Filled cells have no candidates.
class AlternativesGrid {
public:
    AlternativesGrid(int order, std::vector<Cell> region, std::vector<SymbolMask> masks);

    auto order() const noexcept -> int { return order_; }
    auto region() const noexcept -> std::span<const Cell> { return region_; }
    auto contains(int r, int c) const -> bool;

    /// Bit e set iff symbol e is a candidate. Throws RangeError outside the region.
    auto mask(int r, int c) const -> SymbolMask;
    auto candidates(int r, int c) const -> std::vector<int>;

    friend auto operator==(const AlternativesGrid &, const AlternativesGrid &) -> bool = default;

private:
    int order_;
    std::vector<Cell> region_;
    std::vector<SymbolMask> masks_;
};

auto all_cells(int n) -> std::vector<Cell>;
auto cell_region(std::span<const int> rows, std::span<const int> cols) -> std::vector<Cell>;

auto alternatives(const PartialLatinSquare & p, std::span<const Cell> region) -> AlternativesGrid;
auto alternatives(const PartialLatinSquare & p) -> AlternativesGrid;

/// Fill order of a propagation run and the square it reached.
struct CompletionTrace {
    std::vector<Triple> steps;
    PartialLatinSquare result;
};

class NoCompletion : public Error {
public:
    NoCompletion();
};

class NotUnique : public Error {
public:
    NotUnique(PartialLatinSquare first, PartialLatinSquare second);

    auto first() const noexcept -> const PartialLatinSquare & { return first_; }
    auto second() const noexcept -> const PartialLatinSquare & { return second_; }

private:
    PartialLatinSquare first_, second_;
};

/// Propagation ran out of singleton cells before filling its target.
class Stuck : public Error {
public:
    explicit Stuck(CompletionTrace partial);

    auto partial() const noexcept -> const CompletionTrace & { return partial_; }

private:
    CompletionTrace partial_;
};

class NotUniquelyCompletable : public Error {
public:
    NotUniquelyCompletable();
};

/// Number of latin squares containing p, saturating at cap. Orders up to 64.
auto count_completions(const PartialLatinSquare & p, std::size_t cap = 2) -> std::size_t;

auto find_completion(const PartialLatinSquare & p) -> std::optional<PartialLatinSquare>;

/// Throws NoCompletion, or NotUnique carrying two distinct completions.
auto complete_unique(const PartialLatinSquare & p) -> PartialLatinSquare;

/// Whether p has a completion whose symbol at excluded's cell differs from
/// excluded.sym. The cell must be empty in p.
auto has_alternative_completion(const PartialLatinSquare & p, const Triple & excluded) -> bool;

/// Repeatedly fills a cell whose candidate set is a singleton (least such
/// cell first) until the square is full. Throws Stuck otherwise.
auto strong_complete(const PartialLatinSquare & p) -> CompletionTrace;

/// As strong_complete, but only cells of rows x cols are filled; candidates
/// still see the whole square.
auto strong_complete_region(const PartialLatinSquare & p, std::span<const int> rows, std::span<const int> cols) -> CompletionTrace;

struct TopDownReport {
    bool completes = false;
    CompletionTrace trace;
    std::optional<int> stuck_row;
};

/// Rows in increasing order; each row must fill by singleton propagation
/// confined to that row, seeing everything filled so far. Throws
/// NotUniquelyCompletable when p does not have a unique completion.
auto completes_top_down(const PartialLatinSquare & p) -> TopDownReport;

/// Row-wise variant with full search: row i+1, given rows 0..i and the
/// rest of p, must admit exactly one filling consistent with its columns.
auto completes_top_down_exhaustive(const PartialLatinSquare & p) -> bool;

/// Unique completion and every single-entry removal gives a second one.
auto is_critical_set(const PartialLatinSquare & c) -> bool;

}
