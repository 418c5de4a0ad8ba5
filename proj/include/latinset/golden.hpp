#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace latinset {

auto fnv1a64(std::string_view bytes) -> std::uint64_t;

/// $LATINSET_FIXTURES if set, else the fixture directory of the source tree.
auto default_fixture_dir() -> std::filesystem::path;

struct GoldenResult {
    std::string file;
    std::string what;
    bool passed = false;
    std::string detail;
};

/// Checks every table listed in manifest.json against the constructions
/// and against Algorithm A run from scratch. Throws ParseError when the
/// manifest itself is unreadable.
auto run_golden(const std::filesystem::path & dir) -> std::vector<GoldenResult>;

}
