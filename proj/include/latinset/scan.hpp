#pragma once

#include <latinset/pls.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latinset {

enum class ScanMode { theorem, conjecture };

auto parse_scan_mode(const std::string & text) -> ScanMode;
auto to_string(ScanMode mode) -> std::string;

/// Swap pairs of L_s covered by a mode: the block-aligned pairs with
/// k' - k < 3 for theorem, every pair with k' - k < 3 for conjecture.
auto swap_pairs(int s, ScanMode mode) -> std::vector<std::pair<int, int>>;

struct SwapCheck {
    int s = 0, k = 0, kp = 0;
    bool skipped = false;
    std::size_t gcs_size = 0;
    bool critical = false;
    bool two_critical = false;
    bool strong = false;
    bool top_down = false;
    /// Theorem mode only: gcs equals build_G.
    std::optional<bool> matches_G;
    double seconds = 0;
    std::optional<PartialLatinSquare> gcs;
    std::string error;

    auto passed() const -> bool;
};

/// gcs of L_s with rows k and kp swapped, and its properties.
auto check_swap(int s, int k, int kp, ScanMode mode) -> SwapCheck;

struct ScanOptions {
    int s_min = 2, s_max = 4;
    ScanMode mode = ScanMode::conjecture;
    unsigned threads = 0;
    std::optional<std::chrono::seconds> budget;
};

struct ScanReport {
    ScanOptions options;
    /// Sorted by (s, k, k') whatever the thread count.
    std::vector<SwapCheck> checks;
    bool budget_exceeded = false;
    double seconds = 0;

    auto passed() const -> bool;
    auto first_failure() const -> const SwapCheck *;
};

auto run_scan(const ScanOptions & options) -> ScanReport;

}
