#include "webcalc/cli.hpp"
#include "webcalc/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace webcalc;

namespace {

namespace fs = std::filesystem;

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(WEBCALC_CORPUS_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "webcalc_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("vector and strandings") {
        Run v = cli({"vector", corpus("cup_n2.json"), "--format", "text"});
        CHECK(v.status == 0);
        CHECK(v.out == "x1⊗x2 - q^-1 x2⊗x1\n");
        Run j = cli({"vector", corpus("cup_n2.json"), "--format", "json"});
        CHECK(vector_from_json(Json::parse(j.out)).size() == 2);
        Run c = cli({"strandings", corpus("loop_n4_k2.json"), "--count"});
        CHECK(c.status == 0);
        CHECK(c.out == "6\n");
        CHECK(Json::parse(cli({"strandings", corpus("cup_n2.json")}).out).size() == 2);
    }

    TEST_CASE("checks report through the exit status") {
        CHECK(cli({"validate", corpus("running_sl4.json")}).out == "valid\n");
        Run inv = cli({"check-invariance", corpus("running_sl4.json")});
        CHECK(inv.status == 0);
        CHECK(inv.out.find("FAIL") == std::string::npos);
        Run base = cli({"base-stranding", corpus("running_sl4.json")});
        CHECK(base.status == 0);
        CHECK(base.out.find("monomial x1⊗x2⊗x1∧x3∧x4⊗x2∧x3∧x4") != std::string::npos);
        CHECK(cli({"oracle-check", corpus("program_running_sl4.json")}).status == 0);
        CHECK(cli({"rank", "--n", "3", "--m", "6"}).out == "rank 5 expected 5\n");
    }

    TEST_CASE("relations") {
        Run all = cli({"relations", "--all", "--max-n", "3", "--jobs", "2"});
        CHECK(all.status == 0);
        CHECK(all.out.find("FAIL") == std::string::npos);
        Run one = cli({"relations", "--rule", "square-switch", "--n", "4", "--k", "2", "--l", "1"});
        CHECK(one.status == 0);
        CHECK(one.out.find("PASS square-switch(n=4,k=2,l=1)") != std::string::npos);
        CHECK(cli({"relations", "--rule", "kekule"}).status != 0);
        CHECK(cli({"relations"}).status == 2);
    }

    TEST_CASE("random oracle programs honor the seed") {
        setenv("WEBCALC_SEED", "40", 1);
        Run r = cli({"oracle-check", "--random", "5"});
        unsetenv("WEBCALC_SEED");
        CHECK(r.status == 0);
        CHECK(r.out == "oracle: 5/5 agree (base seed 40)\n");
    }

    TEST_CASE("errors") {
        Run missing = cli({"vector", "no_such_file.json"});
        CHECK(missing.status == 2);
        CHECK(missing.err.find("no_such_file.json") != std::string::npos);

        fs::path bad = scratch("bad.json");
        std::ofstream(bad) << R"({"n": 3, "boundary": [{"id": "b1", "x": 1}, {"id": "b2", "x": 2}],
            "interior": [], "edges": [{"id": "e1", "tail": "b1", "head": "b2", "weight": 5}]})";
        Run inval = cli({"validate", bad.string()});
        CHECK(inval.status == 1);
        CHECK(inval.out != "valid\n");

        std::ofstream(bad) << "{\"n\": 3,";
        CHECK(cli({"vector", bad.string()}).status == 2);
        CHECK(cli({"from-tableau", "--n", "2", "--word", "21"}).status == 2);
        CHECK(cli({"frobnicate"}).status != 0);
    }

    TEST_CASE("from-tableau and render") {
        fs::path web = scratch("t.json"), st = scratch("t.stranding.json"), svg = scratch("t.svg");
        CHECK(cli({"from-tableau", "--n", "4", "--word", "12132344", "-o", web.string(), "--stranding", st.string()})
                  .status == 0);
        CHECK(slurp(web) == slurp(corpus("tableau_12132344.json")));
        CHECK(cli({"render", web.string(), "-o", svg.string(), "--stranding", st.string(), "--flows", "1,4"}).status ==
              0);
        const std::string first = slurp(svg);
        CHECK(first.find("<svg") != std::string::npos);
        CHECK(first.find("#1f5fbf") != std::string::npos);
        CHECK(cli({"render", web.string(), "-o", svg.string(), "--stranding", st.string(), "--flows", "1,4"}).status ==
              0);
        CHECK(slurp(svg) == first);
        CHECK(cli({"render", web.string(), "-o", svg.string(), "--flows", "1,4"}).status == 2);
    }

    TEST_CASE("corpus round trip") {
        for (const auto& entry : fs::directory_iterator(WEBCALC_CORPUS_DIR)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind("program_", 0) == 0 || name.find(".stranding.") != std::string::npos) continue;
            INFO(name);
            const std::string text = slurp(entry.path());
            CHECK(web_to_json(web_from_json(Json::parse(text))).dump(2) + "\n" == text);
        }
    }
}
