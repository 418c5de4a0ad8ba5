#include <latinset/families.hpp>
#include <latinset/golden.hpp>
#include <latinset/greedy.hpp>
#include <latinset/grid_format.hpp>
#include <latinset/two_group.hpp>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>

#ifndef LATINSET_FIXTURE_DIR
#define LATINSET_FIXTURE_DIR "fixtures"
#endif

using nlohmann::json;
using std::string;
using std::vector;

namespace latinset {

auto fnv1a64(std::string_view bytes) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

auto default_fixture_dir() -> std::filesystem::path
{
    if (auto * env = std::getenv("LATINSET_FIXTURES"); env && *env)
        return env;
    return LATINSET_FIXTURE_DIR;
}

namespace {
    auto hex(std::uint64_t v) -> string
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
        return buf;
    }

    struct Checker {
        GoldenResult & out;

        void expect(bool ok, const string & what)
        {
            if (ok)
                return;
            out.passed = false;
            if (! out.detail.empty())
                out.detail += "; ";
            out.detail += what;
        }
    };

    void check_table(const json & entry, const string & text, GoldenResult & result)
    {
        Checker check{result};
        auto kind = entry.at("kind").get<string>();
        auto doc = parse_grid(text);
        auto & ambient = doc.square;
        // A plain grid of a gcs table lists only the critical set itself.
        auto marked = doc.marked.value_or(ambient);

        if (kind == "L" || kind == "P") {
            auto s = entry.at("s").get<int>();
            result.what = kind + "_" + std::to_string(s);
            if (kind == "L") {
                check.expect(ambient == build_L(s), "differs from the doubling construction");
            }
            else {
                check.expect(ambient == build_P(s), "differs from the doubling construction");
                check.expect(gcs(build_L(s)) == ambient, "differs from gcs(L_s)");
            }
            return;
        }

        if (kind == "H2") {
            result.what = "H_2 inside its completion";
            check.expect(ambient == build_H2_hat(), "completion differs from L_2 with rows 1,2 swapped");
            check.expect(marked == build_H2(), "marked entries differ from build_H2");
            check.expect(gcs(ambient) == marked, "marked entries differ from gcs");
            return;
        }

        for (auto & pair : entry.at("pairs")) {
            auto k = pair.at(0).get<int>(), kp = pair.at(1).get<int>();
            auto tag = "(" + std::to_string(k) + "," + std::to_string(kp) + ")";
            if (kind == "gcs") {
                auto s = entry.at("s").get<int>();
                result.what = "gcs of L_" + std::to_string(s) + " with rows " + tag + " swapped";
                auto swapped = swapped_L(s, k, kp);
                if (doc.marked)
                    check.expect(ambient == swapped, "ambient square is not the row-swapped L");
                else
                    check.expect(marked.is_subset_of(swapped), "table is not inside the row-swapped L");
                check.expect(gcs(swapped) == marked, "Algorithm A output differs from the table");
                if (s == 2)
                    check.expect(base_gcs_L2(k, kp) == marked, "embedded base table differs");
                if (s == 3)
                    check.expect(base_gcs_L3(k, kp) == marked, "embedded base table differs");
                if (s >= 2 && satisfies_swap_guard(k, kp, s))
                    check.expect(build_G(k, kp, s) == marked, "build_G differs from the table");
            }
            else if (kind == "U" || kind == "V") {
                result.what += (result.what.empty() ? kind : string(",")) + tag;
                check.expect(ambient == build_L(3), "ambient square is not L_3");
                check.expect((kind == "U" ? build_U(k, kp) : build_V(k, kp)) == marked, kind + tag + " differs from the table");
            }
            else {
                throw ParseError("unknown fixture kind '" + kind + "'");
            }
        }
    }
}

auto run_golden(const std::filesystem::path & dir) -> vector<GoldenResult>
{
    json manifest;
    try {
        manifest = json::parse(read_text_file(dir / "manifest.json"));
    }
    catch (const json::exception & e) {
        throw ParseError("manifest.json: " + string(e.what()));
    }

    vector<GoldenResult> results;
    for (auto & entry : manifest.at("tables")) {
        GoldenResult r;
        r.file = entry.at("file").get<string>();
        r.passed = true;
        try {
            auto text = read_text_file(dir / r.file);
            auto sum = hex(fnv1a64(text));
            if (sum != entry.at("fnv1a64").get<string>()) {
                r.passed = false;
                r.detail = "checksum " + sum + " does not match the manifest";
            }
            check_table(entry, text, r);
        }
        catch (const std::exception & e) {
            r.passed = false;
            r.detail += (r.detail.empty() ? "" : "; ") + string(e.what());
        }
        results.push_back(std::move(r));
    }
    return results;
}

}
