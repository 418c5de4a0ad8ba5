#include <latinset/families.hpp>
#include <latinset/greedy.hpp>
#include <latinset/scan.hpp>
#include <latinset/solver.hpp>
#include <latinset/trades.hpp>
#include <latinset/two_group.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

using std::vector;

namespace latinset {

auto parse_scan_mode(const std::string & text) -> ScanMode
{
    if (text == "theorem")
        return ScanMode::theorem;
    if (text == "conjecture")
        return ScanMode::conjecture;
    throw RangeError("scan mode must be theorem or conjecture, got '" + text + "'");
}

auto to_string(ScanMode mode) -> std::string
{
    return mode == ScanMode::theorem ? "theorem" : "conjecture";
}

auto swap_pairs(int s, ScanMode mode) -> vector<std::pair<int, int>>
{
    vector<std::pair<int, int>> out;
    int n = 1 << s;
    for (int k = 0; k < n; ++k)
        for (int kp = k + 1; kp < n && kp - k < 3; ++kp) {
            bool ok = mode == ScanMode::theorem ? satisfies_swap_guard(k, kp, s) : satisfies_weak_swap_guard(k, kp, s);
            if (ok)
                out.emplace_back(k, kp);
        }
    return out;
}

auto SwapCheck::passed() const -> bool
{
    return ! skipped && error.empty() && critical && two_critical && strong && top_down && matches_G.value_or(true);
}

auto check_swap(int s, int k, int kp, ScanMode mode) -> SwapCheck
{
    auto start = std::chrono::steady_clock::now();
    SwapCheck out;
    out.s = s;
    out.k = k;
    out.kp = kp;
    try {
        auto l = swapped_L(s, k, kp);
        auto c = gcs(l);
        out.gcs_size = c.size();
        out.critical = is_critical_set(c);
        out.two_critical = out.critical && is_2_critical(c, l);
        try {
            strong_complete(c);
            out.strong = true;
        }
        catch (const Stuck &) {
            out.strong = false;
        }
        out.top_down = out.critical && completes_top_down(c).completes;
        if (mode == ScanMode::theorem)
            out.matches_G = build_G(k, kp, s) == c;
        out.gcs = std::move(c);
    }
    catch (const Error & e) {
        out.error = e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

auto ScanReport::passed() const -> bool
{
    return ! budget_exceeded && std::all_of(checks.begin(), checks.end(), [](const SwapCheck & c) { return c.passed(); });
}

auto ScanReport::first_failure() const -> const SwapCheck *
{
    for (auto & c : checks)
        if (! c.passed())
            return &c;
    return nullptr;
}

auto run_scan(const ScanOptions & options) -> ScanReport
{
    if (options.s_min < 2 || options.s_max > 6 || options.s_min > options.s_max)
        throw RangeError("scan range must lie within 2..6");

    vector<std::tuple<int, int, int>> tasks;
    for (int s = options.s_min; s <= options.s_max; ++s)
        for (auto [k, kp] : swap_pairs(s, options.mode))
            tasks.emplace_back(s, k, kp);

    auto start = std::chrono::steady_clock::now();
    auto deadline = options.budget ? std::optional(start + *options.budget) : std::nullopt;

    ScanReport report{options, vector<SwapCheck>(tasks.size())};
    std::atomic<std::size_t> next{0};
    std::atomic<bool> over{false};
    auto worker = [&] {
        for (auto i = next++; i < tasks.size(); i = next++) {
            auto [s, k, kp] = tasks[i];
            if (deadline && std::chrono::steady_clock::now() > *deadline) {
                over = true;
                auto & skip = report.checks[i];
                skip.s = s;
                skip.k = k;
                skip.kp = kp;
                skip.skipped = true;
                continue;
            }
            report.checks[i] = check_swap(s, k, kp, options.mode);
        }
    };

    auto threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, tasks.size()));
    {
        vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.budget_exceeded = over || (deadline && std::chrono::steady_clock::now() > *deadline);
    return report;
}

}
