#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latinset {

/// One filled cell: symbol `sym` at (row, col).
///
/// The defaulted ordering is row-major on (row, col) and then by symbol.
/// Inside a partial latin square no two entries share a cell, so on the
/// entries of one square it coincides with the "row first, then column"
/// total order used throughout the library.
struct Triple {
    int row = 0;
    int col = 0;
    int sym = 0;

    friend auto operator<=>(const Triple &, const Triple &) = default;
};

struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell &, const Cell &) = default;
};

auto to_string(const Triple & t) -> std::string;
auto to_string(const Cell & c) -> std::string;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class EmptySquareError : public Error {
public:
    EmptySquareError();
};

class ConflictError : public Error {
public:
    enum class Kind { cell, row, column };

    ConflictError(Kind kind, Triple first, Triple second);

    auto kind() const noexcept -> Kind { return kind_; }
    auto first() const noexcept -> const Triple & { return first_; }
    auto second() const noexcept -> const Triple & { return second_; }

private:
    Kind kind_;
    Triple first_;
    Triple second_;
};

/// A partial latin square of order n.
///
/// Rows and columns are 0..n-1. Symbols are 0..symbol_limit()-1; the limit
/// equals the order except for symbol-shifted blocks that are about to be
/// placed into a larger square. Entries are kept sorted, so equality is
/// structural and the least/greatest entries are the ends of entries().
class PartialLatinSquare {
public:
    PartialLatinSquare() = default;

    /// Validates the three latin constraints; exact duplicates are merged.
    /// Throws RangeError for out-of-range coordinates and ConflictError
    /// naming the first clashing pair.
    static auto from_triples(int order, std::span<const Triple> triples) -> PartialLatinSquare;
    static auto from_triples(int order, int symbol_limit, std::span<const Triple> triples) -> PartialLatinSquare;
    static auto empty(int order) -> PartialLatinSquare;

    auto order() const noexcept -> int { return order_; }
    auto symbol_limit() const noexcept -> int { return symbol_limit_; }
    auto size() const noexcept -> std::size_t { return entries_.size(); }
    auto is_empty() const noexcept -> bool { return entries_.empty(); }
    auto is_full() const noexcept -> bool { return entries_.size() == static_cast<std::size_t>(order_) * order_; }
    auto entries() const noexcept -> std::span<const Triple> { return entries_; }

    auto at(int row, int col) const -> std::optional<int>;
    auto filled(int row, int col) const -> bool { return at(row, col).has_value(); }
    auto contains(const Triple & t) const -> bool;
    auto is_subset_of(const PartialLatinSquare & other) const -> bool;

    auto row_symbols(int row) const -> std::vector<int>;
    auto col_symbols(int col) const -> std::vector<int>;
    auto shape() const -> std::vector<Cell>;

    auto without(const Triple & t) const -> PartialLatinSquare;
    auto with(const Triple & t) const -> PartialLatinSquare;
    auto with_symbol_limit(int limit) const -> PartialLatinSquare;

    friend auto operator==(const PartialLatinSquare & a, const PartialLatinSquare & b) -> bool
    {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }

private:
    PartialLatinSquare(int order, int symbol_limit, std::vector<Triple> sorted_entries);

    int order_ = 0;
    int symbol_limit_ = 0;
    std::vector<Triple> entries_;
    std::vector<int> cells_;
};

using PLS = PartialLatinSquare;

auto least_element(const PartialLatinSquare & p) -> Triple;
auto greatest_element(const PartialLatinSquare & p) -> Triple;

/// (i, j; k) -> (i, j; k + n*r) where n is the order of p.
auto shift_symbols(const PartialLatinSquare & p, int r) -> PartialLatinSquare;

/// The order-2n square with a top-left, b top-right, c bottom-left and d
/// bottom-right. Throws ConflictError if the union is not latin.
auto compose_blocks(const PartialLatinSquare & a, const PartialLatinSquare & b,
    const PartialLatinSquare & c, const PartialLatinSquare & d) -> PartialLatinSquare;

/// Entries with i <= row < i+k and j <= col < j+k, coordinates unchanged.
auto subsquare(const PartialLatinSquare & p, int i, int j, int k) -> PartialLatinSquare;

/// The k x k window at (i, j) as an order-k square; symbol_offset is
/// subtracted from every symbol.
auto rebase(const PartialLatinSquare & p, int i, int j, int k, int symbol_offset = 0) -> PartialLatinSquare;

/// Puts q (order k) into p with its top-left corner at (i, j). The target
/// window must be empty.
auto place_subsquare(const PartialLatinSquare & p, int i, int j, const PartialLatinSquare & q) -> PartialLatinSquare;

/// Entries of a that are not in b.
auto difference(const PartialLatinSquare & a, const PartialLatinSquare & b) -> PartialLatinSquare;

class Isotopism {
public:
    Isotopism(std::vector<int> rows, std::vector<int> cols, std::vector<int> syms);

    static auto identity(int degree) -> Isotopism;
    static auto rows_only(std::vector<int> rows) -> Isotopism;

    auto degree() const noexcept -> int { return static_cast<int>(rows_.size()); }
    auto row_map() const noexcept -> std::span<const int> { return rows_; }
    auto col_map() const noexcept -> std::span<const int> { return cols_; }
    auto sym_map() const noexcept -> std::span<const int> { return syms_; }

    auto inverse() const -> Isotopism;
    /// (*this) after other.
    auto after(const Isotopism & other) const -> Isotopism;

    friend auto operator==(const Isotopism &, const Isotopism &) -> bool = default;

private:
    std::vector<int> rows_, cols_, syms_;
};

auto apply_isotopism(const PartialLatinSquare & p, const Isotopism & iso) -> PartialLatinSquare;

/// Transposition of rows k and k'.
auto row_swap_isotopism(int n, int k, int kp) -> Isotopism;

/// Swaps rows 4b+1 and 4b+2 for every block index b in blocks.
auto multi_swap_isotopism(int n, std::span<const int> blocks) -> Isotopism;

/// Label maps taking q onto p: p = (rows, cols, syms) q.
struct SimilarityWitness {
    std::vector<std::pair<int, int>> rows;
    std::vector<std::pair<int, int>> cols;
    std::vector<std::pair<int, int>> syms;
};

/// Row and column maps are the order-preserving matchings of the occupied
/// labels; only the symbol bijection is free, and it is forced cell by cell.
auto is_similar(const PartialLatinSquare & p, const PartialLatinSquare & q) -> std::optional<SimilarityWitness>;

}
