#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "vsc/cache.hpp"
#include "vsc/emit.hpp"

using namespace vsc;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(VSC_BIN) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args) {
    std::string path = (fs::temp_directory_path() / "vsc_cli_out.txt").string();
    std::string cmd = std::string(VSC_BIN) + " " + args + " > " + path + " 2>/dev/null";
    if (std::system(cmd.c_str()) == -1) return {};
    std::ifstream in(path);
    std::string out((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    fs::remove(path);
    return out;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("vsc_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("report serialization is deterministic and float-free") {
    Report r;
    r.space = "1,1,1,1,1|2,2";
    r.genus = "1";
    r.rows.push_back({2, {{2, 2}}, "vsc", Rational(-272, 3)});
    r.rows.push_back({1, {{2, 1}}, "vsc", Rational(-2)});
    r.rows.push_back({1, {{2, 1}}, "gw", Rational(0)});
    sort_rows(r.rows);
    CHECK(r.rows[0].kind == "gw");
    CHECK(r.rows[1].d == 1);
    CHECK(r.rows[2].value == Rational(-272, 3));

    std::string json = to_json(r);
    CHECK(json.find("-272/3") != std::string::npos);
    CHECK(json.find(".") == std::string::npos);  // no floats anywhere
    CHECK(to_json(r) == json);                   // byte-stable

    std::string csv = to_csv(r);
    CHECK(csv.find("vsc,-2\n") != std::string::npos);
    CHECK(to_markdown(r).find("| -272/3 |") != std::string::npos);
}

TEST_CASE("fixture files parse back to the emitted schema") {
    Fixture f = load_fixture(std::string(FIXTURES_DIR) + "/table5_genus1.json");
    CHECK(f.source == "Table 5");
    CHECK(f.space == "1,1,1,1,1|2,2");
    CHECK(f.genus == "1");
    bool found = false;
    for (const auto& row : f.rows)
        if (row.d == 1 && row.kind == "vsc") {
            CHECK(row.value == Rational(-2));
            CHECK(row.ins == Insertions{{2, 1}});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("cache: write/read round trip, idempotent puts, corrupt rebuild") {
    TempDir tmp;
    std::string file = (tmp.path / "cache.tsv").string();
    {
        VscCache cache;
        cache.attach_disk(file);
        cache.put("w1|1,1,1,1,1|2,2|d=1|ins=2:1", Rational(-2));
        cache.put("w1|1,1,1,1,1|2,2|d=1|ins=2:1", Rational(-2));  // idempotent
        CHECK(cache.size() == 1);
    }
    {
        VscCache cache;
        cache.attach_disk(file);
        CHECK(cache.size() == 1);
        auto v = cache.get("w1|1,1,1,1,1|2,2|d=1|ins=2:1");
        REQUIRE(v.has_value());
        CHECK(v->str() == "-2");  // byte-identical value
    }
    {
        std::ofstream out(file, std::ios::app);
        out << "garbage line without tab\n";
        out << "bad\tnot-a-rational\n";
    }
    {
        VscCache cache;
        cache.attach_disk(file);  // rebuilds with a warning
        CHECK(cache.size() == 1);
        std::ifstream in(file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text.find("garbage") == std::string::npos);
    }
}

TEST_CASE("cli: counts output contains the table values") {
    std::string out =
        run_capture("compute --space \"1,1,1,1,2|6\" --genus counts --max-degree 2");
    CHECK(out.find("\"7884\"") != std::string::npos);
    CHECK(out.find("\"6028452\"") != std::string::npos);
    CHECK(out.find("\"kind\": \"m\"") != std::string::npos);
}

TEST_CASE("cli: output is identical across parallelism widths") {
    std::string a = run_capture("compute --space \"1,1,1,1,2|2\" --genus 1 --max-degree 1 --jobs 1");
    std::string b = run_capture("compute --space \"1,1,1,1,2|2\" --genus 1 --max-degree 1 --jobs 8");
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("cli: malformed space exits 2, non-CY counts exits 3") {
    CHECK(run("compute --space \"1,1,1,2|3\" --genus 0 --max-degree 1") == 2);
    CHECK(run("compute --space \"nonsense\" --genus 0") == 2);
    CHECK(run("compute --space \"1,1,1,1,1|2,2\" --genus counts --max-degree 1") == 3);
    CHECK(run("badsubcommand") == 2);
}

TEST_CASE("cli: verify passes on real fixtures and flags a perturbed one") {
    TempDir tmp;
    CHECK(run("verify --fixtures " + std::string(FIXTURES_DIR) + "/table5_genus1.json"
              " --max-degree 1") == 0);

    // perturb one value by +1
    Fixture f = load_fixture(std::string(FIXTURES_DIR) + "/table5_genus1.json");
    std::string evil = (tmp.path / "evil.json").string();
    {
        std::ifstream in(std::string(FIXTURES_DIR) + "/table5_genus1.json");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto pos = text.find("\"-2\"");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 4, "\"-1\"");
        std::ofstream out(evil);
        out << text;
    }
    CHECK(run("verify --fixtures " + evil + " --max-degree 1") == 1);
    CHECK(run("verify --fixtures " + (tmp.path / "missing").string()) == 2);
}

TEST_CASE("cli: cache subcommand and directory precedence") {
    TempDir tmp;
    std::string dir = (tmp.path / "cachedir").string();
    CHECK(run("compute --space \"1,1,1,1,1|2,2\" --genus 1 --max-degree 1 --cache-dir " + dir) == 0);
    CHECK(fs::exists(fs::path(dir) / "vsc-cache.tsv"));
    std::string stats = run_capture("cache stats --cache-dir " + dir);
    CHECK(stats.find("entries:") != std::string::npos);
    CHECK(stats.find("entries: 0") == std::string::npos);
    CHECK(run("cache clear --cache-dir " + dir) == 0);
    CHECK(!fs::exists(fs::path(dir) / "vsc-cache.tsv"));
    CHECK(run("cache stats") == 2);  // no directory anywhere
}

TEST_CASE("cli: insertion filter restricts emission") {
    std::string out = run_capture(
        "compute --space \"1,1,1,1,2|2\" --genus 1 --max-degree 1 --insertions \"2:2,3:1\" --format csv");
    CHECK(out.find("\"2:2,3:1\",vsc,-5/6") != std::string::npos);
    CHECK(out.find("2:4") == std::string::npos);  // other admissible rows filtered out
    CHECK(run("compute --space \"1,1,1,1,2|6\" --genus counts --insertions \"2:1\"") == 2);
}

TEST_CASE("cli: degrees past the residue-variable budget fail fast") {
    CHECK(run("compute --space \"1,1,1,1,1|2,2\" --genus 0 --max-degree 12") == 2);
}

TEST_CASE("cli: spaces with negative Fano degree emit no spurious rows") {
    std::string out = run_capture(
        "compute --space \"1,1,2,2,3|12\" --genus 1 --max-degree 2 --format csv");
    CHECK(out == "space,genus,d,insertions,kind,value\n");
}
