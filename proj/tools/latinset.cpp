#include <latinset/families.hpp>
#include <latinset/golden.hpp>
#include <latinset/greedy.hpp>
#include <latinset/grid_format.hpp>
#include <latinset/scan.hpp>
#include <latinset/solver.hpp>
#include <latinset/trades.hpp>
#include <latinset/two_group.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;
using namespace latinset;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, precondition = 3 };

class UsageError : public Error {
public:
    using Error::Error;
};

auto emit(const PartialLatinSquare & sq, const string & format, const PartialLatinSquare * ambient) -> void
{
    if (format == "json") {
        std::cout << to_json(sq).dump() << "\n";
        return;
    }
    if (format == "marked") {
        auto whole = ambient ? *ambient : complete_unique(sq);
        std::cout << render_marked(whole, sq);
        return;
    }
    std::cout << render_grid(sq);
}

auto parse_range(const string & text) -> std::pair<int, int>
{
    auto dots = text.find("..");
    try {
        if (dots == string::npos) {
            auto v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    }
    catch (const std::exception &) {
        throw UsageError("bad range '" + text + "', expected N or A..B");
    }
}

auto parse_budget(const string & text) -> std::chrono::seconds
{
    auto digits = text;
    if (! digits.empty() && digits.back() == 's')
        digits.pop_back();
    try {
        std::size_t used = 0;
        auto v = std::stol(digits, &used);
        if (used != digits.size() || v <= 0)
            throw std::invalid_argument("budget");
        return std::chrono::seconds(v);
    }
    catch (const std::exception &) {
        throw UsageError("bad budget '" + text + "', expected seconds such as 3600 or 3600s");
    }
}

auto split_checks(const string & text) -> vector<string>
{
    static const vector<string> known{"unique", "critical", "2critical", "strong", "topdown", "gcschar"};
    if (text.empty() || text == "all")
        return known;
    vector<string> out;
    std::stringstream ss(text);
    for (string item; std::getline(ss, item, ',');) {
        if (std::find(known.begin(), known.end(), item) == known.end())
            throw UsageError("unknown check '" + item + "'");
        out.push_back(item);
    }
    return out;
}

struct BuildArgs {
    string kind, format = "grid";
    int s = 3, k = -1, kp = -1;
    vector<int> ks;
};

auto run_build(const BuildArgs & a) -> int
{
    auto need_pair = [&] {
        if (a.k < 0 || a.kp < 0)
            throw UsageError("--k and --kp are required for kind " + a.kind);
    };
    PartialLatinSquare sq;
    std::optional<PartialLatinSquare> ambient;
    if (a.kind == "L")
        sq = build_L(a.s);
    else if (a.kind == "P") {
        sq = build_P(a.s);
        ambient = build_L(a.s);
    }
    else if (a.kind == "G") {
        need_pair();
        sq = build_G(a.k, a.kp, a.s);
        ambient = swapped_L(a.s, a.k, a.kp);
    }
    else if (a.kind == "E") {
        need_pair();
        sq = build_E(a.k, a.kp, a.s);
    }
    else if (a.kind == "A") {
        need_pair();
        sq = build_A(a.k, a.kp, a.s);
    }
    else if (a.kind == "U" || a.kind == "V") {
        need_pair();
        sq = a.kind == "U" ? build_U(a.k, a.kp) : build_V(a.k, a.kp);
        ambient = build_L(3);
    }
    else if (a.kind == "H2") {
        sq = build_H2();
        ambient = build_H2_hat();
    }
    else if (a.kind == "H2hat")
        sq = build_H2_hat();
    else if (a.kind == "multiswapG") {
        sq = build_multiswap_G(a.s, a.ks);
        ambient = multiswap_L(a.s, a.ks);
    }
    else
        throw UsageError("unknown kind '" + a.kind + "'");
    emit(sq, a.format, ambient ? &*ambient : nullptr);
    return ok;
}

struct GcsArgs {
    string input, builtin, f = "normative", format = "grid";
    bool partial = false;
    int k = -1, kp = -1;
    std::uint64_t seed = 0;
};

auto builtin_square(const string & name, int k, int kp) -> PartialLatinSquare
{
    auto level = [&](std::size_t prefix) {
        try {
            return std::stoi(name.substr(prefix));
        }
        catch (const std::exception &) {
            throw UsageError("bad builtin '" + name + "', expected L<s> or aL<s>");
        }
    };
    if (name.rfind("aL", 0) == 0) {
        if (k < 0 || kp < 0)
            throw UsageError("--k and --kp are required for builtin " + name);
        return swapped_L(level(2), k, kp);
    }
    if (name.rfind("L", 0) == 0)
        return build_L(level(1));
    throw UsageError("bad builtin '" + name + "', expected L<s> or aL<s>");
}

auto run_gcs(const GcsArgs & a) -> int
{
    if (a.input.empty() == a.builtin.empty())
        throw UsageError("give exactly one of --input and --builtin");
    auto p = a.builtin.empty() ? load_square_file(a.input).square : builtin_square(a.builtin, a.k, a.kp);
    if (! p.is_full() && ! a.partial)
        throw UsageError("input square is not full; pass --partial for a uniquely completable partial square");

    CellOrder f;
    if (a.f == "normative")
        f = cell_order_f0(p.order());
    else if (a.f == "literal-formula")
        f = cell_order_f0_printed(p.order());
    else if (a.f == "random")
        f = cell_order_random(p.order(), a.seed);
    else
        throw UsageError("--f must be normative, literal-formula or random");

    PartialLatinSquare c;
    try {
        c = ggcs(p, f);
    }
    catch (const NotUniquelyCompletable & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return precondition;
    }
    if (! is_critical_set(c)) {
        std::cerr << "latinset: greedy output is not a critical set\n";
        return failed;
    }
    auto ambient = complete_unique(p);
    emit(c, a.format, &ambient);
    return ok;
}

struct VerifyArgs {
    string input, ambient, checks;
    bool json_out = false;
};

auto run_verify(const VerifyArgs & a) -> int
{
    auto checks = split_checks(a.checks);
    PartialLatinSquare c, l;
    try {
        c = load_square_file(a.input).square;
        if (! a.ambient.empty())
            l = load_square_file(a.ambient).square;
    }
    catch (const Error & e) {
        throw UsageError(e.what());
    }
    if (! a.ambient.empty() && (! l.is_full() || l.order() != c.order()))
        throw UsageError("ambient square must be full and of the same order as the input");

    auto completions = count_completions(c, 2);
    if (a.ambient.empty() && completions == 1)
        l = complete_unique(c);
    bool have_ambient = ! l.entries().empty();
    bool inside = have_ambient && c.is_subset_of(l);
    bool critical = completions == 1 && inside && is_critical_set(c);

    json report{{"order", c.order()}, {"size", c.size()}, {"checks", json::array()}};
    bool all = true;
    for (auto & name : checks) {
        bool pass = false;
        string note;
        if (name == "unique") {
            pass = completions == 1 && (! have_ambient || inside);
            if (! pass)
                note = completions == 0 ? "no completion" : completions > 1 ? "more than one completion" : "not inside the ambient square";
        }
        else if (name == "critical") {
            pass = critical;
        }
        else if (name == "2critical") {
            pass = critical && is_2_critical(c, l);
            if (! critical)
                note = "not a critical set";
        }
        else if (name == "strong") {
            try {
                pass = strong_complete(c).result == l;
            }
            catch (const Stuck & e) {
                note = e.what();
            }
        }
        else if (name == "topdown") {
            try {
                auto td = completes_top_down(c);
                pass = td.completes;
                if (td.stuck_row)
                    note = "row " + std::to_string(*td.stuck_row) + " is not forced";
            }
            catch (const NotUniquelyCompletable & e) {
                note = e.what();
            }
        }
        else if (name == "gcschar") {
            if (critical) {
                auto ch = verify_gcs_characterization(c, l);
                pass = ch.holds && ch.equals_gcs;
                if (! ch.consistent())
                    note = "intercalate witnesses and direct gcs disagree";
                else if (! pass)
                    note = std::to_string(ch.unwitnessed.size()) + " entries lack a least-element witness";
            }
            else
                note = "not a critical set";
        }
        all = all && pass;
        json item{{"name", name}, {"passed", pass}};
        if (! note.empty())
            item["note"] = note;
        report["checks"].push_back(item);
        if (! a.json_out)
            std::cout << (pass ? "PASS " : "FAIL ") << name << (note.empty() ? "" : " (" + note + ")") << "\n";
    }
    report["passed"] = all;
    if (a.json_out)
        std::cout << report.dump(2) << "\n";
    return all ? ok : failed;
}

struct ScanArgs {
    string s_range = "2..4", mode = "conjecture", budget;
    unsigned threads = 0;
    bool json_out = false;
};

auto run_scan_cmd(const ScanArgs & a) -> int
{
    ScanOptions opt;
    std::tie(opt.s_min, opt.s_max) = parse_range(a.s_range);
    try {
        opt.mode = parse_scan_mode(a.mode);
    }
    catch (const RangeError & e) {
        throw UsageError(e.what());
    }
    opt.threads = a.threads;
    if (! a.budget.empty())
        opt.budget = parse_budget(a.budget);
    if (opt.s_min < 2 || opt.s_max > 6 || opt.s_min > opt.s_max)
        throw UsageError("--s must lie within 2..6");

    auto report = run_scan(opt);
    if (a.json_out) {
        json rows = json::array();
        for (auto & c : report.checks) {
            json row{{"s", c.s}, {"k", c.k}, {"kp", c.kp}, {"skipped", c.skipped}, {"gcs_size", c.gcs_size},
                {"critical", c.critical}, {"two_critical", c.two_critical}, {"strong", c.strong},
                {"top_down", c.top_down}, {"seconds", c.seconds}, {"passed", c.passed()}};
            row["matches_G"] = c.matches_G ? json(*c.matches_G) : json(nullptr);
            if (! c.error.empty())
                row["error"] = c.error;
            rows.push_back(row);
        }
        json out{{"mode", to_string(opt.mode)}, {"s_min", opt.s_min}, {"s_max", opt.s_max}, {"checks", rows},
            {"budget_exceeded", report.budget_exceeded}, {"seconds", report.seconds}, {"passed", report.passed()}};
        std::cout << out.dump(2) << "\n";
    }
    else {
        std::cout << "  s    k   k'  |gcs|  crit 2crit strong topdown   G      sec\n";
        for (auto & c : report.checks) {
            auto yn = [](bool b) { return b ? "yes" : "NO"; };
            char line[160];
            std::snprintf(line, sizeof line, "%3d %4d %4d %6zu %5s %5s %6s %7s %4s %8.3f%s\n", c.s, c.k, c.kp, c.gcs_size,
                yn(c.critical), yn(c.two_critical), yn(c.strong), yn(c.top_down),
                c.matches_G ? yn(*c.matches_G) : "-", c.seconds, c.skipped ? "  skipped" : "");
            std::cout << line;
        }
        std::cout << report.checks.size() << " swaps, " << report.seconds << " s"
                  << (report.budget_exceeded ? ", budget exceeded" : "") << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    if (auto * bad = report.first_failure(); bad && ! a.json_out) {
        std::cout << "first counterexample: s=" << bad->s << " k=" << bad->k << " k'=" << bad->kp << "\n";
        if (! bad->error.empty())
            std::cout << bad->error << "\n";
        if (bad->gcs)
            std::cout << render_marked(swapped_L(bad->s, bad->k, bad->kp), *bad->gcs);
    }
    return report.passed() ? ok : failed;
}

auto run_trace(int k, int kp, int s, bool check) -> int
{
    std::cout << render_trace(expansion_trace(k, kp, s));
    if (! check)
        return ok;
    if (s > 6) {
        std::cerr << "latinset: --check supports s up to 6\n";
        return usage;
    }
    auto same = build_G(k, kp, s) == gcs(swapped_L(s, k, kp));
    std::cout << (same ? "PASS" : "FAIL") << " G(" << k << "," << kp << "," << s << ") equals gcs\n";
    return same ? ok : failed;
}

auto run_golden_cmd(const string & dir) -> int
{
    auto results = run_golden(dir.empty() ? default_fixture_dir() : std::filesystem::path(dir));
    bool all = true;
    for (auto & r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.file << "  " << r.what << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    }
    return all ? ok : failed;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"Greedy critical sets of elementary abelian 2-group latin squares"};
    app.require_subcommand(1);

    BuildArgs build;
    auto * cmd_build = app.add_subcommand("build", "Build L, P, G, E, A, U, V, H2, H2hat or multiswapG");
    cmd_build->add_option("--kind", build.kind)->required();
    cmd_build->add_option("--s", build.s);
    cmd_build->add_option("--k", build.k);
    cmd_build->add_option("--kp", build.kp);
    cmd_build->add_option("--ks", build.ks, "Swap block indices for multiswapG")->delimiter(',');
    cmd_build->add_option("--format", build.format)->check(CLI::IsMember({"grid", "json", "marked"}));

    GcsArgs g;
    auto * cmd_gcs = app.add_subcommand("gcs", "Greedy critical set by Algorithm A");
    cmd_gcs->add_option("--input", g.input);
    cmd_gcs->add_option("--builtin", g.builtin, "L<s> or aL<s> (with --k, --kp)");
    cmd_gcs->add_option("--k", g.k);
    cmd_gcs->add_option("--kp", g.kp);
    cmd_gcs->add_flag("--partial", g.partial);
    cmd_gcs->add_option("--f", g.f, "normative, literal-formula or random");
    cmd_gcs->add_option("--seed", g.seed);
    cmd_gcs->add_option("--format", g.format)->check(CLI::IsMember({"grid", "json", "marked"}));

    VerifyArgs v;
    auto * cmd_verify = app.add_subcommand("verify", "Check properties of a partial latin square");
    cmd_verify->add_option("--input", v.input)->required();
    cmd_verify->add_option("--ambient", v.ambient);
    cmd_verify->add_option("--checks", v.checks, "Comma list of unique,critical,2critical,strong,topdown,gcschar");
    cmd_verify->add_flag("--json", v.json_out);

    ScanArgs sc;
    auto * cmd_scan = app.add_subcommand("scan", "Check gcs of every swapped L_s");
    cmd_scan->add_option("--s", sc.s_range, "N or A..B");
    cmd_scan->add_option("--mode", sc.mode, "theorem or conjecture");
    cmd_scan->add_option("--budget", sc.budget, "Wall-clock limit, e.g. 3600s");
    cmd_scan->add_option("--threads", sc.threads);
    cmd_scan->add_flag("--json", sc.json_out);

    int tk = -1, tkp = -1, ts = 0;
    bool tcheck = false;
    auto * cmd_trace = app.add_subcommand("trace", "Show the recursive expansion of G(k,k',s)");
    cmd_trace->add_option("--k", tk)->required();
    cmd_trace->add_option("--kp", tkp)->required();
    cmd_trace->add_option("--s", ts)->required();
    cmd_trace->add_flag("--check", tcheck);

    string fixtures;
    auto * cmd_golden = app.add_subcommand("golden", "Compare the transcribed tables with the constructions");
    cmd_golden->add_option("--fixtures", fixtures);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*cmd_build)
            return run_build(build);
        if (*cmd_gcs)
            return run_gcs(g);
        if (*cmd_verify)
            return run_verify(v);
        if (*cmd_scan)
            return run_scan_cmd(sc);
        if (*cmd_trace)
            return run_trace(tk, tkp, ts, tcheck);
        if (*cmd_golden)
            return run_golden_cmd(fixtures);
    }
    catch (const UsageError & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return usage;
    }
    catch (const KeyError & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return usage;
    }
    catch (const RangeError & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return usage;
    }
    catch (const ParseError & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return usage;
    }
    catch (const NoCompletion & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return precondition;
    }
    catch (const NotUnique & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return precondition;
    }
    catch (const Error & e) {
        std::cerr << "latinset: " << e.what() << "\n";
        return failed;
    }
    return usage;
}
