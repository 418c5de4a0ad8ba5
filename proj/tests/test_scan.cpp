#include <latinset/golden.hpp>
#include <latinset/scan.hpp>

#include <doctest.h>

#include <cstdlib>

using namespace latinset;

TEST_CASE("scan results are sorted and independent of thread count")
{
    ScanOptions one;
    one.s_min = 2;
    one.s_max = 3;
    one.mode = ScanMode::conjecture;
    one.threads = 1;
    auto many = one;
    many.threads = 4;
    auto a = run_scan(one), b = run_scan(many);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].s == b.checks[i].s);
        CHECK(a.checks[i].k == b.checks[i].k);
        CHECK(a.checks[i].kp == b.checks[i].kp);
        CHECK(a.checks[i].gcs == b.checks[i].gcs);
    }
    CHECK(a.passed());
    CHECK(a.first_failure() == nullptr);
}

TEST_CASE("theorem mode compares with build_G")
{
    auto c = check_swap(4, 12, 14, ScanMode::theorem);
    REQUIRE(c.matches_G);
    CHECK(*c.matches_G);
    CHECK(c.passed());
    CHECK_FALSE(check_swap(4, 3, 5, ScanMode::conjecture).matches_G);
}

TEST_CASE("conjecture pairs include cross-block swaps")
{
    auto pairs = swap_pairs(3, ScanMode::conjecture);
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{3, 5}) != pairs.end());
    CHECK(pairs.size() == 13);
    CHECK(swap_pairs(3, ScanMode::theorem).size() == 10);
}

TEST_CASE("an exhausted budget skips work and fails the scan")
{
    ScanOptions opt;
    opt.s_min = 5;
    opt.s_max = 5;
    opt.threads = 1;
    opt.budget = std::chrono::seconds(0);
    auto r = run_scan(opt);
    CHECK(r.budget_exceeded);
    CHECK_FALSE(r.passed());
}

TEST_CASE("scan range checks")
{
    ScanOptions opt;
    opt.s_min = 1;
    CHECK_THROWS_AS(run_scan(opt), RangeError);
    CHECK_THROWS_AS(parse_scan_mode("both"), RangeError);
}

TEST_CASE("golden fixtures")
{
    auto results = run_golden(default_fixture_dir());
    CHECK(results.size() == 31);
    for (auto & r : results) {
        CAPTURE(r.file);
        CAPTURE(r.detail);
        CHECK(r.passed);
    }
}

TEST_CASE("fnv1a64 reference values")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}
