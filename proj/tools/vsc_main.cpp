// Command-line driver: computes virtual structure constants, Gromov-Witten
// invariants and curve counts for complete intersections in weighted
// projective spaces, and verifies the bundled table fixtures.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "vsc/counts.hpp"
#include "vsc/emit.hpp"
#include "vsc/genus0.hpp"
#include "vsc/genus1.hpp"

namespace fs = std::filesystem;
using namespace vsc;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCompute = 3;

struct CommonOpts {
    std::string cache_dir;
    int jobs = 1;
};

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("VSC_CACHE_DIR")) return env;
    return {};
}

std::shared_ptr<VscCache> open_cache(const CommonOpts& opts) {
    auto cache = std::make_shared<VscCache>();
    std::string dir = resolve_cache_dir(opts.cache_dir);
    if (!dir.empty()) {
        fs::create_directories(dir);
        cache->attach_disk((fs::path(dir) / "vsc-cache.tsv").string());
    }
    return cache;
}

int run_compute(const std::string& space_str, const std::string& genus, int max_degree,
                const std::string& format, const std::string& ins_filter,
                const CommonOpts& opts) {
    SpaceSpec space = parse_space(space_str);
    auto cache = open_cache(opts);
    GenusZero g0(space, cache.get(), opts.jobs);
    GenusOne g1(space, cache.get(), &g0, opts.jobs);

    if (max_degree + 1 > kMaxVars)
        throw SpaceError("max degree " + std::to_string(max_degree) +
                         " exceeds the residue-variable budget (max " +
                         std::to_string(kMaxVars - 1) + ")");

    bool filtered = !ins_filter.empty();
    Insertions wanted;
    if (filtered) {
        try {
            wanted = parse_insertions(ins_filter);
        } catch (const std::exception& e) {
            throw SpaceError(std::string("bad --insertions: ") + e.what());
        }
        if (genus == "counts") throw SpaceError("--insertions does not apply to counts");
    }
    auto keep = [&](const Insertions& ins) { return !filtered || ins == wanted; };

    Report report;
    report.space = space_str;
    report.genus = genus;
    if (genus == "0") {
        for (int d = 1; d <= max_degree; ++d)
            for (const auto& ins : enumerate_insertions(space, space.fano * d + space.dim - 3))
                if (keep(ins)) report.rows.push_back({d, ins, "gw", g0.gw(ins, d)});
    } else if (genus == "1") {
        for (int d = 1; d <= max_degree; ++d)
            for (const auto& ins : enumerate_insertions(space, space.fano * d)) {
                if (!keep(ins)) continue;
                report.rows.push_back({d, ins, "gw", g1.gw(ins, d)});
                report.rows.push_back({d, ins, "vsc", g1.evsc(ins, d)});
            }
    } else if (genus == "counts") {
        CurveCounts counts = curve_counts(g0, g1, max_degree);
        for (int d = 1; d <= max_degree; ++d) {
            report.rows.push_back({d, {}, "n", counts.n[d - 1]});
            report.rows.push_back({d, {}, "m", counts.m[d - 1]});
        }
        for (int d : non_integral_degrees(counts.n))
            std::cerr << "warning: n_" << d << " is not an integer\n";
        for (int d : non_integral_degrees(counts.m))
            std::cerr << "warning: m_" << d << " is not an integer\n";
    } else {
        throw CLI::ValidationError("--genus must be 0, 1 or counts");
    }
    sort_rows(report.rows);

    if (format == "json") std::cout << to_json(report);
    else if (format == "csv") std::cout << to_csv(report);
    else if (format == "markdown") std::cout << to_markdown(report);
    else throw CLI::ValidationError("--format must be json, csv or markdown");
    return 0;
}

int run_verify(const std::string& fixtures_path, int max_degree, const CommonOpts& opts) {
    std::vector<std::string> files;
    fs::path p(fixtures_path);
    if (fs::is_directory(p)) {
        for (const auto& entry : fs::directory_iterator(p))
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
    } else if (fs::is_regular_file(p)) {
        files.push_back(p.string());
    }
    if (files.empty()) {
        std::cerr << "error: no fixture files at '" << fixtures_path << "'\n";
        return kExitParse;
    }

    auto cache = open_cache(opts);
    std::map<std::string, std::unique_ptr<GenusZero>> g0s;
    std::map<std::string, std::unique_ptr<GenusOne>> g1s;
    auto evaluators = [&](const std::string& space_str) -> std::pair<GenusZero*, GenusOne*> {
        auto it = g0s.find(space_str);
        if (it == g0s.end()) {
            SpaceSpec space = parse_space(space_str);
            auto g0 = std::make_unique<GenusZero>(space, cache.get(), opts.jobs);
            auto g1 = std::make_unique<GenusOne>(space, cache.get(), g0.get(), opts.jobs);
            it = g0s.emplace(space_str, std::move(g0)).first;
            g1s.emplace(space_str, std::move(g1));
        }
        return {it->second.get(), g1s.at(space_str).get()};
    };

    size_t checked = 0, mismatched = 0, skipped = 0;
    for (const auto& file : files) {
        Fixture fixture;
        try {
            fixture = load_fixture(file);
        } catch (const std::exception& e) {
            std::cerr << "error: fixture '" << file << "': " << e.what() << "\n";
            return kExitParse;
        }
        auto [g0, g1] = evaluators(fixture.space);
        // Curve-count fixtures are solved in one ascending sweep.
        CurveCounts counts;
        if (fixture.genus == "counts") {
            int needed = 0;
            for (const auto& row : fixture.rows)
                if (row.d <= max_degree) needed = std::max(needed, row.d);
            if (needed > 0) counts = curve_counts(*g0, *g1, needed);
        }
        for (const auto& row : fixture.rows) {
            if (row.d > max_degree) {
                ++skipped;
                continue;
            }
            bool admissible = true;
            if (row.kind == "vsc" || (row.kind == "gw" && fixture.genus == "1"))
                admissible = selection_genus1(g0->space(), row.d, row.ins);
            else if (row.kind == "gw")
                admissible = selection_genus0_gw(g0->space(), row.d, row.ins);
            if (!admissible) {
                std::cerr << "error: fixture '" << file << "': row d=" << row.d << " ins=["
                          << insertions_str(row.ins) << "] violates the selection rule\n";
                return kExitParse;
            }
            Rational got;
            if (row.kind == "n") got = counts.n.at(row.d - 1);
            else if (row.kind == "m") got = counts.m.at(row.d - 1);
            else if (row.kind == "vsc") got = g1->evsc(row.ins, row.d);
            else if (row.kind == "gw" && fixture.genus == "0") got = g0->gw(row.ins, row.d);
            else if (row.kind == "gw" && fixture.genus == "1") got = g1->gw(row.ins, row.d);
            else {
                std::cerr << "error: fixture '" << file << "': bad row kind '" << row.kind << "'\n";
                return kExitParse;
            }
            ++checked;
            bool ok = got == row.value;
            if (!ok) ++mismatched;
            std::cout << (ok ? "ok      " : "MISMATCH") << "  " << fixture.source << "  d=" << row.d
                      << "  ins=[" << insertions_str(row.ins) << "]  " << row.kind << "  expected "
                      << row.value.str();
            if (!ok) std::cout << "  got " << got.str();
            std::cout << "\n";
        }
    }
    std::cout << checked << " checked, " << mismatched << " mismatched, " << skipped
              << " skipped (d > " << max_degree << ")\n";
    return mismatched == 0 ? 0 : 1;
}

int run_cache(const std::string& action, const CommonOpts& opts) {
    auto cache = std::make_shared<VscCache>();
    std::string dir = resolve_cache_dir(opts.cache_dir);
    if (dir.empty()) {
        std::cerr << "error: no cache directory (use --cache-dir or VSC_CACHE_DIR)\n";
        return kExitParse;
    }
    fs::create_directories(dir);
    std::string path = (fs::path(dir) / "vsc-cache.tsv").string();
    cache->attach_disk(path);
    if (action == "stats") {
        std::cout << "path: " << path << "\nentries: " << cache->size() << "\n";
    } else if (action == "clear") {
        cache->clear_disk();
        std::cout << "cleared " << path << "\n";
    } else if (action == "path") {
        std::cout << path << "\n";
    } else {
        std::cerr << "error: cache action must be stats, clear or path\n";
        return kExitParse;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Virtual structure constants and Gromov-Witten invariants for\n"
                 "complete intersections in weighted projective spaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string space_str, genus = "0", format = "json", ins_filter;
    int max_degree = 2;
    std::string fixtures_path = "fixtures", cache_action = "stats";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", opts.jobs, "parallel evaluation width")->check(CLI::PositiveNumber);
        cmd->add_option("--cache-dir", opts.cache_dir,
                        "cache directory (overrides VSC_CACHE_DIR)");
    };

    CLI::App* compute = app.add_subcommand("compute", "compute invariants for one space");
    compute->add_option("--space", space_str, "space spec \"a1,..,aN|k1,..,km\"")->required();
    compute->add_option("--genus", genus, "0, 1 or counts");
    compute->add_option("--max-degree", max_degree, "top degree (cost grows sharply; 4-5 are slow)")
        ->check(CLI::PositiveNumber);
    compute->add_option("--format", format, "json, csv or markdown");
    compute->add_option("--insertions", ins_filter,
                        "only this insertion multi-index, e.g. \"2:1,3:2\"");
    add_common(compute);

    CLI::App* verify = app.add_subcommand("verify", "recompute bundled table fixtures");
    verify->add_option("--fixtures", fixtures_path, "fixture file or directory");
    verify->add_option("--max-degree", max_degree, "verify rows with d <= this");
    add_common(verify);

    CLI::App* cache_cmd = app.add_subcommand("cache", "inspect or clear the disk cache");
    cache_cmd->add_option("action", cache_action, "stats, clear or path");
    add_common(cache_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (compute->parsed())
            return run_compute(space_str, genus, max_degree, format, ins_filter, opts);
        if (verify->parsed()) return run_verify(fixtures_path, max_degree, opts);
        return run_cache(cache_action, opts);
    } catch (const SpaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
}
