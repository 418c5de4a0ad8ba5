#include <latinset/pls.hpp>

#include <algorithm>
#include <map>
#include <numeric>

using std::optional;
using std::span;
using std::string;
using std::vector;

namespace latinset {

auto to_string(const Triple & t) -> string
{
    return "(" + std::to_string(t.row) + "," + std::to_string(t.col) + ";" + std::to_string(t.sym) + ")";
}

auto to_string(const Cell & c) -> string
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

EmptySquareError::EmptySquareError() :
    Error("partial latin square is empty")
{
}

namespace {
    auto kind_name(ConflictError::Kind k) -> const char *
    {
        switch (k) {
        case ConflictError::Kind::cell: return "cell";
        case ConflictError::Kind::row: return "row";
        case ConflictError::Kind::column: return "column";
        }
        return "?";
    }
}

ConflictError::ConflictError(Kind kind, Triple first, Triple second) :
    Error(string(kind_name(kind)) + " clash between " + to_string(first) + " and " + to_string(second)),
    kind_(kind),
    first_(first),
    second_(second)
{
}

PartialLatinSquare::PartialLatinSquare(int order, int symbol_limit, vector<Triple> sorted_entries) :
    order_(order),
    symbol_limit_(symbol_limit),
    entries_(std::move(sorted_entries)),
    cells_(static_cast<std::size_t>(order) * order, -1)
{
    for (auto & t : entries_)
        cells_[t.row * order_ + t.col] = t.sym;
}

auto PartialLatinSquare::from_triples(int order, span<const Triple> triples) -> PartialLatinSquare
{
    return from_triples(order, order, triples);
}

auto PartialLatinSquare::from_triples(int order, int symbol_limit, span<const Triple> triples) -> PartialLatinSquare
{
    if (order < 1)
        throw RangeError("order must be at least 1, got " + std::to_string(order));
    if (symbol_limit < order)
        throw RangeError("symbol limit " + std::to_string(symbol_limit) + " below order " + std::to_string(order));

    vector<Triple> es(triples.begin(), triples.end());
    for (auto & t : es)
        if (t.row < 0 || t.row >= order || t.col < 0 || t.col >= order || t.sym < 0 || t.sym >= symbol_limit)
            throw RangeError("entry " + to_string(t) + " outside order " + std::to_string(order)
                + " with symbols below " + std::to_string(symbol_limit));

    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());

    for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i - 1].row == es[i].row && es[i - 1].col == es[i].col)
            throw ConflictError(ConflictError::Kind::cell, es[i - 1], es[i]);

    auto check = [&](auto key, ConflictError::Kind kind) {
        vector<Triple> by(es);
        std::sort(by.begin(), by.end(), [&](const Triple & a, const Triple & b) { return key(a) < key(b); });
        for (std::size_t i = 1; i < by.size(); ++i)
            if (key(by[i - 1]).first == key(by[i]).first && key(by[i - 1]).second == key(by[i]).second) {
                auto [a, b] = std::minmax(by[i - 1], by[i]);
                throw ConflictError(kind, a, b);
            }
    };
    check([](const Triple & t) { return std::pair{t.row, t.sym}; }, ConflictError::Kind::row);
    check([](const Triple & t) { return std::pair{t.col, t.sym}; }, ConflictError::Kind::column);

    return PartialLatinSquare(order, symbol_limit, std::move(es));
}

auto PartialLatinSquare::empty(int order) -> PartialLatinSquare
{
    return from_triples(order, span<const Triple>{});
}

auto PartialLatinSquare::at(int row, int col) const -> optional<int>
{
    if (row < 0 || row >= order_ || col < 0 || col >= order_)
        throw RangeError("cell " + to_string(Cell{row, col}) + " outside order " + std::to_string(order_));
    auto v = cells_[row * order_ + col];
    if (v < 0)
        return std::nullopt;
    return v;
}

auto PartialLatinSquare::contains(const Triple & t) const -> bool
{
    if (t.row < 0 || t.row >= order_ || t.col < 0 || t.col >= order_)
        return false;
    return cells_[t.row * order_ + t.col] == t.sym;
}

auto PartialLatinSquare::is_subset_of(const PartialLatinSquare & other) const -> bool
{
    return order_ == other.order_ && std::all_of(entries_.begin(), entries_.end(), [&](const Triple & t) { return other.contains(t); });
}

auto PartialLatinSquare::row_symbols(int row) const -> vector<int>
{
    vector<int> out;
    for (int c = 0; c < order_; ++c)
        if (auto v = at(row, c))
            out.push_back(*v);
    std::sort(out.begin(), out.end());
    return out;
}

auto PartialLatinSquare::col_symbols(int col) const -> vector<int>
{
    vector<int> out;
    for (int r = 0; r < order_; ++r)
        if (auto v = at(r, col))
            out.push_back(*v);
    std::sort(out.begin(), out.end());
    return out;
}

auto PartialLatinSquare::shape() const -> vector<Cell>
{
    vector<Cell> out;
    out.reserve(entries_.size());
    for (auto & t : entries_)
        out.push_back({t.row, t.col});
    return out;
}

auto PartialLatinSquare::without(const Triple & t) const -> PartialLatinSquare
{
    vector<Triple> es;
    es.reserve(entries_.size());
    std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(es), [&](const Triple & e) { return e != t; });
    return PartialLatinSquare(order_, symbol_limit_, std::move(es));
}

auto PartialLatinSquare::with(const Triple & t) const -> PartialLatinSquare
{
    vector<Triple> es(entries_);
    es.push_back(t);
    return from_triples(order_, symbol_limit_, es);
}

auto PartialLatinSquare::with_symbol_limit(int limit) const -> PartialLatinSquare
{
    return from_triples(order_, limit, entries_);
}

auto least_element(const PartialLatinSquare & p) -> Triple
{
    if (p.is_empty())
        throw EmptySquareError();
    return p.entries().front();
}

auto greatest_element(const PartialLatinSquare & p) -> Triple
{
    if (p.is_empty())
        throw EmptySquareError();
    return p.entries().back();
}

auto shift_symbols(const PartialLatinSquare & p, int r) -> PartialLatinSquare
{
    if (r < 0)
        throw RangeError("negative symbol shift");
    if (r == 0)
        return p;
    auto n = p.order();
    vector<Triple> es;
    es.reserve(p.size());
    for (auto & t : p.entries())
        es.push_back({t.row, t.col, t.sym + n * r});
    return PartialLatinSquare::from_triples(n, p.symbol_limit() + n * r, es);
}

auto compose_blocks(const PartialLatinSquare & a, const PartialLatinSquare & b,
    const PartialLatinSquare & c, const PartialLatinSquare & d) -> PartialLatinSquare
{
    auto n = a.order();
    if (b.order() != n || c.order() != n || d.order() != n)
        throw RangeError("compose_blocks needs four blocks of equal order");
    vector<Triple> es;
    es.reserve(a.size() + b.size() + c.size() + d.size());
    for (auto & t : a.entries())
        es.push_back(t);
    for (auto & t : b.entries())
        es.push_back({t.row, t.col + n, t.sym});
    for (auto & t : c.entries())
        es.push_back({t.row + n, t.col, t.sym});
    for (auto & t : d.entries())
        es.push_back({t.row + n, t.col + n, t.sym});
    auto limit = std::max({2 * n, a.symbol_limit(), b.symbol_limit(), c.symbol_limit(), d.symbol_limit()});
    return PartialLatinSquare::from_triples(2 * n, limit, es);
}

namespace {
    void check_window(const PartialLatinSquare & p, int i, int j, int k)
    {
        if (i < 0 || j < 0 || k < 0 || i + k > p.order() || j + k > p.order())
            throw RangeError("window of size " + std::to_string(k) + " at " + to_string(Cell{i, j})
                + " does not fit order " + std::to_string(p.order()));
    }
}

auto subsquare(const PartialLatinSquare & p, int i, int j, int k) -> PartialLatinSquare
{
    check_window(p, i, j, k);
    vector<Triple> es;
    for (auto & t : p.entries())
        if (t.row >= i && t.row < i + k && t.col >= j && t.col < j + k)
            es.push_back(t);
    return PartialLatinSquare::from_triples(p.order(), p.symbol_limit(), es);
}

auto rebase(const PartialLatinSquare & p, int i, int j, int k, int symbol_offset) -> PartialLatinSquare
{
    check_window(p, i, j, k);
    if (k < 1)
        throw RangeError("rebase needs a nonempty window");
    vector<Triple> es;
    int top = 0;
    for (auto & t : p.entries())
        if (t.row >= i && t.row < i + k && t.col >= j && t.col < j + k) {
            auto sym = t.sym - symbol_offset;
            if (sym < 0)
                throw RangeError("symbol offset " + std::to_string(symbol_offset) + " exceeds entry " + to_string(t));
            es.push_back({t.row - i, t.col - j, sym});
            top = std::max(top, sym + 1);
        }
    return PartialLatinSquare::from_triples(k, std::max(k, top), es);
}

auto place_subsquare(const PartialLatinSquare & p, int i, int j, const PartialLatinSquare & q) -> PartialLatinSquare
{
    auto k = q.order();
    check_window(p, i, j, k);
    vector<Triple> es(p.entries().begin(), p.entries().end());
    for (auto & t : q.entries()) {
        Triple moved{t.row + i, t.col + j, t.sym};
        if (auto v = p.at(moved.row, moved.col))
            throw ConflictError(ConflictError::Kind::cell, Triple{moved.row, moved.col, *v}, moved);
        es.push_back(moved);
    }
    return PartialLatinSquare::from_triples(p.order(), std::max(p.symbol_limit(), q.symbol_limit()), es);
}

auto difference(const PartialLatinSquare & a, const PartialLatinSquare & b) -> PartialLatinSquare
{
    vector<Triple> es;
    for (auto & t : a.entries())
        if (! b.contains(t))
            es.push_back(t);
    return PartialLatinSquare::from_triples(a.order(), a.symbol_limit(), es);
}

namespace {
    void check_permutation(const vector<int> & perm, const char * what)
    {
        vector<char> seen(perm.size(), 0);
        for (auto v : perm) {
            if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v])
                throw RangeError(string(what) + " map is not a bijection on 0.." + std::to_string(perm.size() - 1));
            seen[v] = 1;
        }
    }

    auto identity_perm(int n) -> vector<int>
    {
        vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    auto invert(const vector<int> & perm) -> vector<int>
    {
        vector<int> inv(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            inv[perm[i]] = static_cast<int>(i);
        return inv;
    }
}

Isotopism::Isotopism(vector<int> rows, vector<int> cols, vector<int> syms) :
    rows_(std::move(rows)),
    cols_(std::move(cols)),
    syms_(std::move(syms))
{
    if (rows_.size() != cols_.size() || rows_.size() != syms_.size())
        throw RangeError("isotopism components have different degrees");
    check_permutation(rows_, "row");
    check_permutation(cols_, "column");
    check_permutation(syms_, "symbol");
}

auto Isotopism::identity(int degree) -> Isotopism
{
    return Isotopism(identity_perm(degree), identity_perm(degree), identity_perm(degree));
}

auto Isotopism::rows_only(vector<int> rows) -> Isotopism
{
    auto n = static_cast<int>(rows.size());
    return Isotopism(std::move(rows), identity_perm(n), identity_perm(n));
}

auto Isotopism::inverse() const -> Isotopism
{
    return Isotopism(invert(rows_), invert(cols_), invert(syms_));
}

auto Isotopism::after(const Isotopism & other) const -> Isotopism
{
    if (other.degree() != degree())
        throw RangeError("isotopism degrees differ");
    auto compose = [](const vector<int> & f, const vector<int> & g) {
        vector<int> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            out[i] = f[g[i]];
        return out;
    };
    return Isotopism(compose(rows_, other.rows_), compose(cols_, other.cols_), compose(syms_, other.syms_));
}

auto apply_isotopism(const PartialLatinSquare & p, const Isotopism & iso) -> PartialLatinSquare
{
    if (iso.degree() != p.order())
        throw RangeError("isotopism degree " + std::to_string(iso.degree()) + " does not match order " + std::to_string(p.order()));
    if (p.symbol_limit() != p.order())
        throw RangeError("isotopisms act on squares with symbols 0..n-1");
    vector<Triple> es;
    es.reserve(p.size());
    for (auto & t : p.entries())
        es.push_back({iso.row_map()[t.row], iso.col_map()[t.col], iso.sym_map()[t.sym]});
    return PartialLatinSquare::from_triples(p.order(), es);
}

auto row_swap_isotopism(int n, int k, int kp) -> Isotopism
{
    if (k < 0 || kp < 0 || k >= n || kp >= n || k == kp)
        throw RangeError("row swap (" + std::to_string(k) + "," + std::to_string(kp) + ") invalid for order " + std::to_string(n));
    auto rows = identity_perm(n);
    std::swap(rows[k], rows[kp]);
    return Isotopism::rows_only(std::move(rows));
}

auto multi_swap_isotopism(int n, span<const int> blocks) -> Isotopism
{
    auto rows = identity_perm(n);
    vector<int> seen;
    for (auto b : blocks) {
        if (b < 0 || 4 * b + 3 >= n)
            throw RangeError("swap block " + std::to_string(b) + " outside order " + std::to_string(n));
        if (std::find(seen.begin(), seen.end(), b) != seen.end())
            throw RangeError("swap block " + std::to_string(b) + " listed twice");
        seen.push_back(b);
        std::swap(rows[4 * b + 1], rows[4 * b + 2]);
    }
    return Isotopism::rows_only(std::move(rows));
}

auto is_similar(const PartialLatinSquare & p, const PartialLatinSquare & q) -> optional<SimilarityWitness>
{
    if (p.size() != q.size())
        return std::nullopt;

    auto occupied = [](const PartialLatinSquare & s, bool rows) {
        vector<int> labels;
        for (auto & t : s.entries())
            labels.push_back(rows ? t.row : t.col);
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        return labels;
    };

    auto pr = occupied(p, true), qr = occupied(q, true);
    auto pc = occupied(p, false), qc = occupied(q, false);
    if (pr.size() != qr.size() || pc.size() != qc.size())
        return std::nullopt;

    std::map<int, int> row_of, col_of;
    SimilarityWitness w;
    for (std::size_t i = 0; i < qr.size(); ++i) {
        row_of[qr[i]] = pr[i];
        w.rows.emplace_back(qr[i], pr[i]);
    }
    for (std::size_t i = 0; i < qc.size(); ++i) {
        col_of[qc[i]] = pc[i];
        w.cols.emplace_back(qc[i], pc[i]);
    }

    std::map<int, int> sym_of, sym_from;
    for (auto & t : q.entries()) {
        auto target = p.at(row_of[t.row], col_of[t.col]);
        if (! target)
            return std::nullopt;
        auto [it, fresh] = sym_of.emplace(t.sym, *target);
        if (! fresh && it->second != *target)
            return std::nullopt;
        auto [jt, fresh_back] = sym_from.emplace(*target, t.sym);
        if (! fresh_back && jt->second != t.sym)
            return std::nullopt;
    }
    w.syms.assign(sym_of.begin(), sym_of.end());
    return w;
}

}
