#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"

#include "goalsel/kb.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("goalsel_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string("\"") + GOALSEL_CLI_PATH + "\" " + args + " >" +
                      out.string() + " 2>" + err.string();
    int raw = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(raw)) r.code = WEXITSTATUS(raw);
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
}

std::string fixture(const std::string& name) { return oracle::fixture_path(name); }

} // namespace

TEST_CASE("cli: check echoes the canonical form") {
    RunResult r = run("check " + fixture("cleaner.json"));
    CHECK(r.code == 0);
    CHECK(r.err.empty());

    goalsel::KnowledgeBase kb = goalsel::load_spec_file(fixture("cleaner.json"));
    CHECK(r.out == goalsel::serialize(kb));

    // Canonicalization is idempotent: checking the echo returns the same bytes.
    fs::path echoed = scratch_dir() / "echoed.json";
    write_file(echoed, r.out);
    RunResult again = run("check " + echoed.string());
    CHECK(again.code == 0);
    CHECK(again.out == r.out);
}

TEST_CASE("cli: invalid specs and missing files exit with 1") {
    fs::path bad = scratch_dir() / "bad.json";
    write_file(bad, R"({"goals": [{"name": "g", "pref": 2.0}]})");
    RunResult r = run("check " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.err.find("preference-out-of-range") != std::string::npos);

    RunResult missing = run("check " + (scratch_dir() / "nope.json").string());
    CHECK(missing.code == 1);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate x.json").code == 2);
    CHECK(run("check").code == 2);
    CHECK(run("select " + fixture("cleaner.json") + " --tiebreak xx").code == 2);
    RunResult no_input = run("verify");
    CHECK(no_input.code == 2);
    CHECK(no_input.err.find("--fuzz") != std::string::npos);

    RunResult help = run("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("select") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("cli: args lists the arguments") {
    RunResult text = run("args " + fixture("cleaner.json"));
    CHECK(text.code == 0);
    CHECK(text.out.find("5 argument(s)") != std::string::npos);
    CHECK(text.out.find("be_fixed") != std::string::npos);

    RunResult json = run("args " + fixture("cleaner.json") + " --format json");
    CHECK(json.code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    REQUIRE(doc.at("arguments").size() == 5);
    bool found = false;
    for (const auto& entry : doc.at("arguments")) {
        CHECK(entry.contains("strength"));
        CHECK(entry.contains("utility"));
        if (entry.at("claim") == "be_fixed") {
            found = true;
            CHECK(entry.at("subs").size() == 2);
            CHECK(entry.at("needs").at("battery") == 2.0);
        }
    }
    CHECK(found);
}

TEST_CASE("cli: attacks reports both relations") {
    RunResult json = run("attacks " + fixture("cleaner.json") + " --format json");
    CHECK(json.code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("pre_filter").size() == 12);
    CHECK(doc.at("post_filter").size() == 6);
    for (const auto& entry : doc.at("pre_filter")) {
        CHECK(entry.at("types") == nlohmann::json::array({"terminal"}));
    }

    RunResult text = run("attacks " + fixture("cleaner.json"));
    CHECK(text.code == 0);
    CHECK(text.out.find("pre-filter (12)") != std::string::npos);
    CHECK(text.out.find("post-filter (6)") != std::string::npos);
}

TEST_CASE("cli: select reports the full pipeline") {
    RunResult json = run("select " + fixture("cleaner.json") + " --format json");
    CHECK(json.code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("extensions").at("conflict_free").size() == 11);
    CHECK(doc.at("extensions").at("max_goal").size() == 2);
    REQUIRE(doc.at("extensions").at("max_util").size() == 1);
    REQUIRE(doc.at("selection").size() == 1);
    CHECK(doc.at("selection")[0].at("compatible_goals") ==
          nlohmann::json::array({"be_oper", "clean_1_3"}));

    RunResult text = run("select " + fixture("cleaner.json"));
    CHECK(text.code == 0);
    CHECK(text.out.find("conflict-free extensions (11)") != std::string::npos);
    CHECK(text.out.find("compatible goals: be_oper, clean_1_3") != std::string::npos);
}

TEST_CASE("cli: output lands in the requested file and is deterministic") {
    fs::path out1 = scratch_dir() / "select1.json";
    fs::path out2 = scratch_dir() / "select2.json";
    RunResult r1 =
        run("select " + fixture("cleaner.json") + " --format json -o " + out1.string());
    RunResult r2 =
        run("select " + fixture("cleaner.json") + " --format json -o " + out2.string());
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    CHECK(r1.out.empty());
    std::string first = read_file(out1);
    CHECK(!first.empty());
    CHECK(first == read_file(out2));
}

TEST_CASE("cli: verify confirms the postulates on the example spec") {
    RunResult r = run("verify " + fixture("cleaner.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("11 extension(s) checked, 0 failure(s), output ok") != std::string::npos);

    RunResult json = run("verify " + fixture("cleaner.json") + " --format json");
    CHECK(json.code == 0);
    nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("extensions").size() == 11);
}

TEST_CASE("cli: verify flags a closure gap and exits with 1") {
    fs::path spec = scratch_dir() / "closure_gap.json";
    write_file(spec, R"({
      "beliefs": [{"lit": "b", "l": 1.0, "u": 1.0}],
      "goals": [{"name": "g1", "pursued": true}, {"name": "g2"}],
      "rules": [
        {"id": "r1", "head": "g1", "beliefs": ["b"], "l": 1.0, "u": 1.0},
        {"id": "r2", "head": "g2", "goals": ["g1"], "l": 0.9, "u": 1.0}
      ]})");
    RunResult r = run("verify " + spec.string());
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("derivable head 'g2'") != std::string::npos);
}

TEST_CASE("cli: verify --fuzz runs generated specs") {
    RunResult r = run("verify --fuzz 25 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("25 generated instance(s), 0 failure(s)") != std::string::npos);

    // Same seed, same outcome.
    RunResult again = run("verify --fuzz 25 --seed 7");
    CHECK(again.out == r.out);
}

TEST_CASE("cli: export-dot emits the filtered framework") {
    RunResult r = run("export-dot " + fixture("cleaner.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph framework") != std::string::npos);
    std::size_t arrows = 0;
    for (std::size_t pos = 0; (pos = r.out.find("\" -> \"", pos)) != std::string::npos; ++pos) {
        ++arrows;
    }
    CHECK(arrows == 6);
    CHECK(r.out.find("⟨") != std::string::npos);
}

TEST_CASE("cli: diagnostics land on stderr as warnings") {
    fs::path spec = scratch_dir() / "unsat.json";
    write_file(spec, R"({
      "beliefs": [{"lit": "b", "l": 1.0, "u": 1.0}],
      "goals": [{"name": "g", "pursued": true}],
      "rules": [{"id": "r", "head": "g", "beliefs": ["~b"], "l": 1.0, "u": 1.0}]
    })");
    RunResult r = run("args " + spec.string());
    CHECK(r.code == 0);
    CHECK(r.err.find("warning:") != std::string::npos);
    CHECK(r.out.find("0 argument(s)") != std::string::npos);
}

TEST_CASE("cli: limit overruns exit with 1 and name the flag") {
    RunResult r = run("select " + fixture("cleaner.json") + " --max-args 3");
    CHECK(r.code == 1);
    CHECK(r.err.find("--max-args") != std::string::npos);

    RunResult ext = run("select " + fixture("cleaner.json") + " --max-extensions 5");
    CHECK(ext.code == 1);
    CHECK(ext.err.find("--max-extensions") != std::string::npos);

    // The tie-break flag is accepted and the result does not change.
    RunResult lo = run("select " + fixture("cleaner.json") + " --format json --tiebreak lo");
    RunResult pr = run("select " + fixture("cleaner.json") + " --format json --tiebreak pr");
    CHECK(lo.code == 0);
    CHECK(lo.out == pr.out);
}