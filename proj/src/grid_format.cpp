#include <latinset/grid_format.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

using nlohmann::json;
using std::string;
using std::string_view;
using std::vector;

namespace latinset {

namespace {
    auto parse_symbol(string_view tok, int line) -> int
    {
        int v = -1;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
            throw ParseError("line " + std::to_string(line) + ": bad token '" + string(tok) + "'");
        return v;
    }

    auto split_ws(string_view line) -> vector<string_view>
    {
        vector<string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            auto start = i;
            while (i < line.size() && ! std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i > start)
                out.push_back(line.substr(start, i - start));
        }
        return out;
    }
}

auto parse_grid(string_view text) -> GridDocument
{
    vector<vector<string_view>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == string_view::npos)
            end = text.size();
        ++line_no;
        auto toks = split_ws(text.substr(pos, end - pos));
        if (! toks.empty())
            rows.push_back(std::move(toks));
        pos = end + 1;
    }
    if (rows.empty())
        throw ParseError("grid has no rows");

    auto n = static_cast<int>(rows.size());
    vector<Triple> all, marked;
    bool any_marked = false;
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n)
            throw ParseError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size())
                + " tokens, expected " + std::to_string(n));
        for (int c = 0; c < n; ++c) {
            auto tok = rows[r][c];
            if (tok == "-")
                continue;
            bool mark = tok.size() >= 3 && tok.front() == '(' && tok.back() == ')';
            auto v = parse_symbol(mark ? tok.substr(1, tok.size() - 2) : tok, r + 1);
            all.push_back({r, c, v});
            if (mark) {
                marked.push_back({r, c, v});
                any_marked = true;
            }
        }
    }

    GridDocument doc{PartialLatinSquare::from_triples(n, all), std::nullopt};
    if (any_marked)
        doc.marked = PartialLatinSquare::from_triples(n, marked);
    return doc;
}

namespace {
    auto render_with(const PartialLatinSquare & p, auto token_for) -> string
    {
        auto n = p.order();
        vector<string> toks(static_cast<std::size_t>(n) * n);
        std::size_t width = 1;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                toks[r * n + c] = token_for(r, c);
                width = std::max(width, toks[r * n + c].size());
            }
        string out;
        for (int r = 0; r < n; ++r) {
            string line;
            for (int c = 0; c < n; ++c) {
                auto & t = toks[r * n + c];
                if (c > 0)
                    line += ' ';
                line.append(width - t.size(), ' ');
                line += t;
            }
            while (! line.empty() && line.back() == ' ')
                line.pop_back();
            out += line;
            out += '\n';
        }
        return out;
    }
}

auto render_grid(const PartialLatinSquare & p) -> string
{
    return render_with(p, [&](int r, int c) {
        auto v = p.at(r, c);
        return v ? std::to_string(*v) : string("-");
    });
}

auto render_marked(const PartialLatinSquare & ambient, const PartialLatinSquare & marked) -> string
{
    if (! marked.is_subset_of(ambient))
        throw RangeError("marked entries are not contained in the ambient square");
    return render_with(ambient, [&](int r, int c) {
        auto v = ambient.at(r, c);
        if (! v)
            return string("-");
        if (marked.filled(r, c))
            return "(" + std::to_string(*v) + ")";
        return std::to_string(*v);
    });
}

auto to_json(const PartialLatinSquare & p) -> json
{
    json entries = json::array();
    for (auto & t : p.entries())
        entries.push_back({t.row, t.col, t.sym});
    return json{{"order", p.order()}, {"entries", entries}};
}

auto square_from_json(const json & j) -> PartialLatinSquare
{
    if (! j.is_object() || ! j.contains("order") || ! j.contains("entries"))
        throw ParseError("square JSON needs \"order\" and \"entries\"");
    if (! j["order"].is_number_integer() || ! j["entries"].is_array())
        throw ParseError("square JSON has wrongly typed fields");
    auto n = j["order"].get<int>();
    vector<Triple> es;
    for (auto & e : j["entries"]) {
        if (! e.is_array() || e.size() != 3 || ! e[0].is_number_integer() || ! e[1].is_number_integer() || ! e[2].is_number_integer())
            throw ParseError("each entry must be [row, col, symbol]");
        es.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return PartialLatinSquare::from_triples(n, es);
}

auto read_text_file(const std::filesystem::path & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto load_square_file(const std::filesystem::path & path) -> GridDocument
{
    auto text = read_text_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (path.extension() == ".json" || (first != string::npos && text[first] == '{')) {
        json j;
        try {
            j = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw ParseError(path.string() + ": " + e.what());
        }
        return GridDocument{square_from_json(j), std::nullopt};
    }
    return parse_grid(text);
}

}
