#include <latinset/families.hpp>
#include <latinset/grid_format.hpp>
#include <latinset/solver.hpp>
#include <latinset/two_group.hpp>

#include "base_tables.hpp"

#include <algorithm>
#include <map>
#include <tuple>

using std::pair;
using std::string;
using std::vector;

namespace latinset {

auto gamma_pairs() -> vector<pair<int, int>>
{
    return {{4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
}

auto lambda_pairs() -> vector<pair<int, int>>
{
    return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

auto in_gamma(int k, int kp) -> bool
{
    auto all = gamma_pairs();
    return std::find(all.begin(), all.end(), pair{k, kp}) != all.end();
}

auto in_lambda(int k, int kp) -> bool
{
    auto all = lambda_pairs();
    return std::find(all.begin(), all.end(), pair{k, kp}) != all.end();
}

auto satisfies_weak_swap_guard(int k, int kp, int s) -> bool
{
    return s >= 1 && s <= 30 && 0 <= k && k < kp && kp < (1 << s) && kp - k < 3;
}

auto satisfies_swap_guard(int k, int kp, int s) -> bool
{
    return satisfies_weak_swap_guard(k, kp, s) && k / 4 == kp / 4;
}

namespace {
    auto pair_name(int k, int kp) -> string
    {
        return "(" + std::to_string(k) + "," + std::to_string(kp) + ")";
    }

    struct ParsedTable {
        string text;
        PartialLatinSquare critical;
    };

    auto parsed_tables() -> const std::map<std::tuple<int, int, int>, ParsedTable> &
    {
        static const auto tables = [] {
            std::map<std::tuple<int, int, int>, ParsedTable> out;
            for (auto & t : detail::base_tables()) {
                auto text = t.text.substr(t.text.find_first_not_of('\n'));
                auto doc = parse_grid(text);
                out.emplace(std::tuple{t.s, t.k, t.kp}, ParsedTable{text, doc.marked.value()});
            }
            return out;
        }();
        return tables;
    }

    auto lookup(int s, int k, int kp) -> const ParsedTable &
    {
        auto & tables = parsed_tables();
        auto it = tables.find({s, k, kp});
        if (it == tables.end())
            throw KeyError("no base table for the swap " + pair_name(k, kp) + " in L_" + std::to_string(s));
        return it->second;
    }
}

auto base_gcs_L2(int k, int kp) -> PartialLatinSquare
{
    return lookup(2, k, kp).critical;
}

auto base_gcs_L3(int k, int kp) -> PartialLatinSquare
{
    return lookup(3, k, kp).critical;
}

auto base_table_text(int s, int k, int kp) -> string
{
    return lookup(s, k, kp).text;
}

auto base_E2(int k, int kp) -> PartialLatinSquare
{
    if (! in_gamma(k, kp))
        throw KeyError("E(k,k')_2 needs (k,k') in Gamma, got " + pair_name(k, kp));
    return rebase(base_gcs_L3(k, kp), 0, 0, 4);
}

auto base_A2(int k, int kp) -> PartialLatinSquare
{
    if (! in_lambda(k, kp))
        throw KeyError("A(k,k')_2 needs (k,k') in Lambda, got " + pair_name(k, kp));
    return rebase(base_gcs_L3(k, kp), 0, 0, 4);
}

namespace {
    auto p_of(int m) -> PartialLatinSquare { return build_P(m); }
    auto l_of(int m) -> PartialLatinSquare { return build_L(m); }

    auto shifted(const PartialLatinSquare & p) -> PartialLatinSquare { return shift_symbols(p, 1); }

    /// Which case of the E or A recursion applies at level m, as the
    /// offset to subtract from k and k' (or -1 if neither case applies).
    auto e_case(int k, int kp, int m) -> int
    {
        int d = 1 << (m - 1);
        if (k >= 2 * d && kp < 3 * d)
            return d;
        if (k >= 3 * d && kp < 4 * d)
            return 2 * d;
        return -1;
    }

    auto a_case(int k, int kp, int m) -> int
    {
        int d = 1 << (m - 1);
        if (k >= 0 && kp < d)
            return 0;
        if (k >= d && kp < 2 * d)
            return d;
        return -1;
    }

    void require_level(int m, const char * what)
    {
        if (m < 2 || m > 10)
            throw KeyError(string(what) + " is defined for levels 2..10, got " + std::to_string(m));
    }

    void require_pair(int k, int kp)
    {
        if (k < 0 || k >= kp)
            throw KeyError("swap rows must satisfy 0 <= k < k', got " + pair_name(k, kp));
    }
}

auto build_E(int k, int kp, int m) -> PartialLatinSquare
{
    require_level(m, "E");
    require_pair(k, kp);
    if (m == 2)
        return base_E2(k, kp);
    auto off = e_case(k, kp, m);
    if (off < 0)
        throw KeyError("E" + pair_name(k, kp) + "_" + std::to_string(m) + ": rows must both lie in ["
            + std::to_string(1 << m) + "," + std::to_string(3 << (m - 1)) + ") or in [" + std::to_string(3 << (m - 1))
            + "," + std::to_string(2 << m) + ")");
    auto inner = build_E(k - off, kp - off, m - 1);
    auto l = l_of(m - 1);
    if (off == 1 << (m - 1))
        return compose_blocks(l, shifted(inner), shifted(l), l);
    return compose_blocks(inner, shifted(l), shifted(inner), inner);
}

auto build_A(int k, int kp, int m) -> PartialLatinSquare
{
    require_level(m, "A");
    require_pair(k, kp);
    if (m == 2)
        return base_A2(k, kp);
    auto off = a_case(k, kp, m);
    if (off < 0)
        throw KeyError("A" + pair_name(k, kp) + "_" + std::to_string(m) + ": rows must both lie in [0,"
            + std::to_string(1 << (m - 1)) + ") or in [" + std::to_string(1 << (m - 1)) + "," + std::to_string(1 << m) + ")");
    auto inner = build_A(k - off, kp - off, m - 1);
    auto l = l_of(m - 1);
    if (off == 0) {
        // When the swap reaches the last row of the block of four directly
        // above the midline, the block beside the inner A is kept whole.
        auto whole = kp % 4 == 3 && k >= (1 << (m - 1)) - 4;
        auto beside = whole ? swapped_L(m - 1, k, kp) : inner;
        return compose_blocks(inner, shifted(beside), shifted(l), l);
    }
    return compose_blocks(l, shifted(l), shifted(inner), inner);
}

namespace {
    auto build_G_unchecked(int k, int kp, int s) -> PartialLatinSquare
    {
        if (s == 2)
            return base_gcs_L2(k, kp);
        if (s == 3)
            return base_gcs_L3(k, kp);
        int half = 1 << (s - 1);
        auto p = p_of(s - 1);
        if (kp < half)
            return compose_blocks(build_A(k, kp, s - 1), shifted(build_G_unchecked(k, kp, s - 1)), shifted(p), p);
        auto lower = build_G_unchecked(k - half, kp - half, s - 1);
        return compose_blocks(build_E(k, kp, s - 1), shifted(p), shifted(lower), lower);
    }

    void require_swap_guard(int k, int kp, int s)
    {
        if (s < 2 || s > 10)
            throw KeyError("G is defined for s in 2..10, got " + std::to_string(s));
        if (! satisfies_swap_guard(k, kp, s))
            throw KeyError("swap " + pair_name(k, kp) + " violates the guard k < k' < 2^s, k' - k < 3, "
                "both rows in one aligned block of four");
    }
}

auto build_G(int k, int kp, int s) -> PartialLatinSquare
{
    require_swap_guard(k, kp, s);
    return build_G_unchecked(k, kp, s).with_symbol_limit(1 << s);
}

auto build_U(int k, int kp) -> PartialLatinSquare
{
    auto e = base_E2(k, kp);
    auto p2 = p_of(2);
    return compose_blocks(e, shifted(p2), shifted(e), p2);
}

auto build_V(int k, int kp) -> PartialLatinSquare
{
    auto e = base_E2(k, kp);
    auto p2 = shifted(p_of(2));
    return compose_blocks(e, p2, p2, e);
}

namespace {
    auto quadrant_avoids(const PartialLatinSquare & sq, int row0, int col0, SymbolMask forbidden) -> bool
    {
        vector<int> rows{row0, row0 + 1, row0 + 2, row0 + 3};
        vector<int> cols{col0, col0 + 1, col0 + 2, col0 + 3};
        auto region = cell_region(rows, cols);
        auto grid = alternatives(sq, region);
        return std::all_of(region.begin(), region.end(),
            [&](const Cell & c) { return (grid.mask(c.row, c.col) & forbidden) == 0; });
    }
}

auto check_blocking_U(int k, int kp) -> bool
{
    return quadrant_avoids(build_U(k, kp), 0, 0, 0xF0);
}

auto check_blocking_V(int k, int kp) -> bool
{
    return quadrant_avoids(build_V(k, kp), 0, 4, 0x0F);
}

auto e_blocks_structured(int k, int kp, int m) -> bool
{
    auto e = build_E(k, kp, m);
    auto l2 = l_of(2);
    vector<PartialLatinSquare> bases;
    for (auto [a, b] : gamma_pairs())
        bases.push_back(base_E2(a, b));
    int blocks = 1 << (m - 2);
    for (int bi = 0; bi < blocks; ++bi)
        for (int bj = 0; bj < blocks; ++bj) {
            auto w = rebase(e, 4 * bi, 4 * bj, 4);
            bool ok = is_similar(w, l2).has_value()
                || std::any_of(bases.begin(), bases.end(), [&](const PartialLatinSquare & b) { return is_similar(w, b).has_value(); });
            if (! ok)
                return false;
        }
    return true;
}

auto ExpansionNode::name() const -> string
{
    auto sub = "_" + std::to_string(level);
    switch (kind) {
    case Kind::G:
        return "G(" + std::to_string(k) + "," + std::to_string(kp) + "," + std::to_string(level) + ")";
    case Kind::E:
        return "E" + pair_name(k, kp) + sub;
    case Kind::A:
        return "A" + pair_name(k, kp) + sub;
    case Kind::P:
        return "P" + sub;
    case Kind::L:
        return "L" + sub;
    case Kind::swapped_L:
        return "aL" + pair_name(k, kp) + sub;
    }
    return {};
}

namespace {
    using Kind = ExpansionNode::Kind;

    auto leaf(Kind kind, int level, int shift) -> ExpansionNode
    {
        return ExpansionNode{kind, 0, 0, level, shift, {}};
    }

    auto expand_E(int k, int kp, int m, int shift) -> ExpansionNode
    {
        ExpansionNode node{Kind::E, k, kp, m, shift, {}};
        if (m == 2) {
            if (! in_gamma(k, kp))
                throw KeyError("E(k,k')_2 needs (k,k') in Gamma, got " + pair_name(k, kp));
            return node;
        }
        auto off = e_case(k, kp, m);
        if (off < 0)
            throw KeyError("E" + pair_name(k, kp) + "_" + std::to_string(m) + " has no defining case");
        auto inner = [&](int r) { return expand_E(k - off, kp - off, m - 1, r); };
        if (off == 1 << (m - 1))
            node.children = {leaf(Kind::L, m - 1, 0), inner(1), leaf(Kind::L, m - 1, 1), leaf(Kind::L, m - 1, 0)};
        else
            node.children = {inner(0), leaf(Kind::L, m - 1, 1), inner(1), inner(0)};
        return node;
    }

    auto expand_A(int k, int kp, int m, int shift) -> ExpansionNode
    {
        ExpansionNode node{Kind::A, k, kp, m, shift, {}};
        if (m == 2) {
            if (! in_lambda(k, kp))
                throw KeyError("A(k,k')_2 needs (k,k') in Lambda, got " + pair_name(k, kp));
            return node;
        }
        auto off = a_case(k, kp, m);
        if (off < 0)
            throw KeyError("A" + pair_name(k, kp) + "_" + std::to_string(m) + " has no defining case");
        auto inner = [&](int r) { return expand_A(k - off, kp - off, m - 1, r); };
        if (off == 0) {
            auto whole = kp % 4 == 3 && k >= (1 << (m - 1)) - 4;
            auto beside = whole ? ExpansionNode{Kind::swapped_L, k, kp, m - 1, 1, {}} : inner(1);
            node.children = {inner(0), beside, leaf(Kind::L, m - 1, 1), leaf(Kind::L, m - 1, 0)};
        }
        else
            node.children = {leaf(Kind::L, m - 1, 0), leaf(Kind::L, m - 1, 1), inner(1), inner(0)};
        return node;
    }

    auto expand_G(int k, int kp, int s, int shift) -> ExpansionNode
    {
        ExpansionNode node{Kind::G, k, kp, s, shift, {}};
        if (s <= 3)
            return node;
        int half = 1 << (s - 1);
        if (kp < half)
            node.children = {expand_A(k, kp, s - 1, 0), expand_G(k, kp, s - 1, 1), leaf(Kind::P, s - 1, 1), leaf(Kind::P, s - 1, 0)};
        else
            node.children = {expand_E(k, kp, s - 1, 0), leaf(Kind::P, s - 1, 1), expand_G(k - half, kp - half, s - 1, 1),
                expand_G(k - half, kp - half, s - 1, 0)};
        return node;
    }

    auto with_shift(const ExpansionNode & n) -> string
    {
        auto base = n.name();
        if (n.kind == Kind::G)
            return base + "^" + std::to_string(n.shift);
        auto cut = base.rfind('_');
        return base.substr(0, cut) + "^" + std::to_string(n.shift) + base.substr(cut);
    }

    void collect(const ExpansionNode & n, vector<const ExpansionNode *> & defs, vector<string> & leaves)
    {
        auto name = n.name();
        if (n.is_leaf()) {
            if (std::find(leaves.begin(), leaves.end(), name) == leaves.end())
                leaves.push_back(name);
            return;
        }
        if (std::none_of(defs.begin(), defs.end(), [&](const ExpansionNode * d) { return d->name() == name; }))
            defs.push_back(&n);
        for (auto & c : n.children)
            collect(c, defs, leaves);
    }
}

auto expansion_trace(int k, int kp, int s) -> ExpansionNode
{
    require_swap_guard(k, kp, s);
    return expand_G(k, kp, s, 0);
}

auto render_trace(const ExpansionNode & root) -> string
{
    vector<const ExpansionNode *> defs;
    vector<string> leaves;
    collect(root, defs, leaves);
    std::stable_sort(defs.begin(), defs.end(), [](const ExpansionNode * a, const ExpansionNode * b) {
        auto ga = a->kind == Kind::G, gb = b->kind == Kind::G;
        if (ga != gb)
            return ga;
        return a->level > b->level;
    });

    string out;
    for (auto * d : defs) {
        auto & c = d->children;
        out += d->name() + " = [" + with_shift(c[0]) + ", " + with_shift(c[1]) + "; " + with_shift(c[2]) + ", "
            + with_shift(c[3]) + "]\n";
    }
    out += "base:";
    for (std::size_t i = 0; i < leaves.size(); ++i)
        out += (i ? ", " : " ") + leaves[i];
    out += '\n';
    return out;
}

}
