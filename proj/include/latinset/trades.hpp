#pragma once

#include <latinset/pls.hpp>

#include <array>
#include <optional>
#include <vector>

namespace latinset {

struct TradePair {
    PartialLatinSquare t;
    PartialLatinSquare mate;
};

class IdenticalSquares : public Error {
public:
    IdenticalSquares();
};

class NotCriticalSet : public Error {
public:
    NotCriticalSet();
};

/// Same order, same shape, symbols differ cellwise, rows and columns
/// balanced, both nonempty.
auto is_trade_pair(const PartialLatinSquare & t, const PartialLatinSquare & mate) -> bool;

/// (L \ L', L' \ L) for distinct full squares of one order.
auto trade_from_squares(const PartialLatinSquare & l, const PartialLatinSquare & lp) -> TradePair;

/// {(i,j;k), (i,j';k'), (i',j;k'), (i',j';k)} with i < i' and j < j'.
/// cells[0] is the least element.
struct Intercalate {
    std::array<Triple, 4> cells;

    auto least() const -> const Triple & { return cells[0]; }
    auto as_square(int order) const -> PartialLatinSquare;
    auto mate(int order) const -> PartialLatinSquare;

    friend auto operator<=>(const Intercalate &, const Intercalate &) = default;
};

/// All intercalates of a full square, sorted by least element then by the
/// remaining cells.
auto enumerate_intercalates(const PartialLatinSquare & l) -> std::vector<Intercalate>;

/// First intercalate I of l (in enumeration order) with I ∩ c = {x}; with
/// require_least, x must also be the least element of I.
auto intercalate_witness(const PartialLatinSquare & l, const PartialLatinSquare & c, const Triple & x,
    bool require_least) -> std::optional<Intercalate>;

/// Every entry of the critical set c has an intercalate witness in l.
/// Throws NotCriticalSet.
auto is_2_critical(const PartialLatinSquare & c, const PartialLatinSquare & l) -> bool;

struct GcsCharacterization {
    /// Every entry is the least element of an intercalate meeting c once.
    bool holds = false;
    /// c equals gcs(l) recomputed directly.
    bool equals_gcs = false;
    std::vector<Triple> unwitnessed;

    auto consistent() const -> bool { return holds == equals_gcs; }
};

/// Throws NotCriticalSet.
auto verify_gcs_characterization(const PartialLatinSquare & c, const PartialLatinSquare & l) -> GcsCharacterization;

}
