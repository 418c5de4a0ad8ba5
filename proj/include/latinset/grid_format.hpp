#pragma once

#include <latinset/pls.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace latinset {

class ParseError : public Error {
public:
    using Error::Error;
};

/// A parsed text grid. When any token is parenthesized, `marked` holds the
/// parenthesized entries and `square` holds every entry.
struct GridDocument {
    PartialLatinSquare square;
    std::optional<PartialLatinSquare> marked;
};

/// One line per row, whitespace separated tokens: `-` for an empty cell,
/// a decimal symbol, or `(k)` for a symbol in the distinguished subset.
auto parse_grid(std::string_view text) -> GridDocument;

auto render_grid(const PartialLatinSquare & p) -> std::string;

/// Renders `ambient` with the entries of `marked` parenthesized. Empty cells
/// of `ambient` print as `-`.
auto render_marked(const PartialLatinSquare & ambient, const PartialLatinSquare & marked) -> std::string;

auto to_json(const PartialLatinSquare & p) -> nlohmann::json;
auto square_from_json(const nlohmann::json & j) -> PartialLatinSquare;

auto read_text_file(const std::filesystem::path & path) -> std::string;

/// Grid or JSON, chosen by extension (`.json`) or by a leading `{`.
auto load_square_file(const std::filesystem::path & path) -> GridDocument;

}
