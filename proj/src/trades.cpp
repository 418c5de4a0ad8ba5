#include <latinset/greedy.hpp>
#include <latinset/solver.hpp>
#include <latinset/trades.hpp>

#include <algorithm>

using std::vector;

namespace latinset {

IdenticalSquares::IdenticalSquares() :
    Error("the two squares are identical, so they define no trade")
{
}

NotCriticalSet::NotCriticalSet() :
    Error("partial latin square is not a critical set of the given square")
{
}

auto is_trade_pair(const PartialLatinSquare & t, const PartialLatinSquare & mate) -> bool
{
    if (t.order() != mate.order() || t.is_empty() || t.size() != mate.size())
        return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        auto & a = t.entries()[i];
        auto & b = mate.entries()[i];
        if (a.row != b.row || a.col != b.col || a.sym == b.sym)
            return false;
    }
    for (int i = 0; i < t.order(); ++i) {
        auto rt = t.row_symbols(i), rm = mate.row_symbols(i);
        auto ct = t.col_symbols(i), cm = mate.col_symbols(i);
        std::sort(rt.begin(), rt.end());
        std::sort(rm.begin(), rm.end());
        std::sort(ct.begin(), ct.end());
        std::sort(cm.begin(), cm.end());
        if (rt != rm || ct != cm)
            return false;
    }
    return true;
}

auto trade_from_squares(const PartialLatinSquare & l, const PartialLatinSquare & lp) -> TradePair
{
    if (! l.is_full() || ! lp.is_full() || l.order() != lp.order())
        throw RangeError("trade_from_squares needs two full squares of one order");
    if (l == lp)
        throw IdenticalSquares();
    TradePair pair{difference(l, lp), difference(lp, l)};
    if (! is_trade_pair(pair.t, pair.mate))
        throw Error("set difference of two latin squares failed the trade conditions");
    return pair;
}

auto Intercalate::as_square(int order) const -> PartialLatinSquare
{
    return PartialLatinSquare::from_triples(order, cells);
}

auto Intercalate::mate(int order) const -> PartialLatinSquare
{
    auto [a, b, c, d] = cells;
    std::array<Triple, 4> swapped{{{a.row, a.col, b.sym}, {b.row, b.col, a.sym}, {c.row, c.col, d.sym}, {d.row, d.col, c.sym}}};
    return PartialLatinSquare::from_triples(order, swapped);
}

auto enumerate_intercalates(const PartialLatinSquare & l) -> vector<Intercalate>
{
    if (! l.is_full())
        throw RangeError("enumerate_intercalates needs a full square");
    int n = l.order();
    vector<Intercalate> out;
    // For rows i < i' and column j, the partner column j' is where row i
    // holds the symbol that row i' has at j.
    vector<int> col_of(static_cast<std::size_t>(n) * l.symbol_limit());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            col_of[r * l.symbol_limit() + *l.at(r, c)] = c;
    for (int i = 0; i < n; ++i)
        for (int ip = i + 1; ip < n; ++ip)
            for (int j = 0; j < n; ++j) {
                auto k = *l.at(i, j), kp = *l.at(ip, j);
                auto jp = col_of[i * l.symbol_limit() + kp];
                if (jp <= j || *l.at(ip, jp) != k)
                    continue;
                out.push_back(Intercalate{{{{i, j, k}, {i, jp, kp}, {ip, j, kp}, {ip, jp, k}}}});
            }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
    auto witness_in(const vector<Intercalate> & all, const PartialLatinSquare & c, const Triple & x, bool require_least)
        -> std::optional<Intercalate>
    {
        for (auto & ic : all) {
            if (require_least && ic.least() != x)
                continue;
            int hits = 0;
            bool has_x = false;
            for (auto & t : ic.cells) {
                if (c.contains(t))
                    ++hits;
                has_x = has_x || t == x;
            }
            if (has_x && hits == 1)
                return ic;
        }
        return std::nullopt;
    }

    void require_critical(const PartialLatinSquare & c, const PartialLatinSquare & l)
    {
        if (! l.is_full() || c.order() != l.order() || ! c.is_subset_of(l) || ! is_critical_set(c))
            throw NotCriticalSet();
    }
}

auto intercalate_witness(const PartialLatinSquare & l, const PartialLatinSquare & c, const Triple & x,
    bool require_least) -> std::optional<Intercalate>
{
    if (! c.contains(x) || ! c.is_subset_of(l))
        throw RangeError("witness search needs x in C and C inside L");
    return witness_in(enumerate_intercalates(l), c, x, require_least);
}

auto is_2_critical(const PartialLatinSquare & c, const PartialLatinSquare & l) -> bool
{
    require_critical(c, l);
    auto all = enumerate_intercalates(l);
    return std::all_of(c.entries().begin(), c.entries().end(),
        [&](const Triple & x) { return witness_in(all, c, x, false).has_value(); });
}

auto verify_gcs_characterization(const PartialLatinSquare & c, const PartialLatinSquare & l) -> GcsCharacterization
{
    require_critical(c, l);
    auto all = enumerate_intercalates(l);
    GcsCharacterization out;
    for (auto & x : c.entries())
        if (! witness_in(all, c, x, true))
            out.unwitnessed.push_back(x);
    out.holds = out.unwitnessed.empty();
    out.equals_gcs = gcs(l) == c;
    return out;
}

}
