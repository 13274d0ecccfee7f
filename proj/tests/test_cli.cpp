#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fixlab/instance_io.hpp"
#include "test_util.hpp"

using namespace fixlab;
using nlohmann::json;

namespace {

const std::string cli = FIXLAB_CLI_PATH;
const std::string fixtures = FIXLAB_FIXTURE_DIR;

std::string fixture(const std::string& name) { return fixtures + "/" + name; }

}  // namespace

TEST_CASE("exit code contract, one fixture per code") {
    using test::run_command;
    // 0: hypotheses and conclusion hold
    CHECK(run_command(cli + " check --theorem T2 " + fixture("contraction_013.json")).exit_code == 0);
    // 1: a hypothesis fails
    CHECK(run_command(cli + " check --theorem T2 " + fixture("identity_pair.json")).exit_code == 1);
    // 2: validation error
    CHECK(run_command(cli + " validate " + fixture("bad_triangle.json")).exit_code == 2);
    // 3: parse error
    CHECK(run_command(cli + " validate " + fixture("truncated.json")).exit_code == 3);
    // 4: soundness alarm (testing hook; a real alarm would mean the artifact is broken)
    CHECK(run_command(cli + " check --theorem T2 --force-alarm " +
                      fixture("contraction_013.json"))
              .exit_code == 4);
    // 5: I/O error
    const std::string blocked = fixture("truncated.json") + "/cannot_be_a_directory";
    CHECK(run_command(cli + " search --theorem T2 --drop b03 --budget 1 --out " + blocked)
              .exit_code == 5);
}

TEST_CASE("validate") {
    using test::run_command;
    CHECK(run_command(cli + " validate " + fixture("contraction_013.json")).exit_code == 0);
    const auto r = run_command(cli + " validate --json " + fixture("bad_triangle.json"));
    CHECK(r.exit_code == 2);
    const json doc = json::parse(r.out);
    CHECK(doc["error"]["code"] == json("TriangleViolation"));
    CHECK(doc["error"]["defect"] == json(1.0));
}

TEST_CASE("check reports alpha_star and verdicts as JSON") {
    const auto r = test::run_command(cli + " check --theorem T2 --json " +
                                     fixture("contraction_013.json"));
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["report"]["contraction"]["alpha_star"] == json(0.5));
    CHECK(doc["report"]["conclusion"] == json(true));
    CHECK(doc["report"]["soundness_alarm"] == json(false));
    CHECK(doc["tolerance"] == json(1e-9));
    CHECK(doc.contains("version"));
    CHECK(doc.contains("timing_ms"));
}

TEST_CASE("json reports round-trip through re-validation") {
    const auto first = test::run_command(cli + " check --theorem T2 --json " +
                                         fixture("contraction_013.json"));
    REQUIRE(first.exit_code == 0);
    const json doc = json::parse(first.out);

    const std::string tmp =
        (std::filesystem::temp_directory_path() / "fixlab_roundtrip.json").string();
    {
        std::ofstream out(tmp);
        out << doc.dump();  // the whole report; the loader uses its embedded instance
    }
    const auto second = test::run_command(cli + " check --theorem T2 --json " + tmp);
    CHECK(second.exit_code == 0);
    const json redo = json::parse(second.out);
    CHECK(redo["report"]["conclusion"] == doc["report"]["conclusion"]);
    CHECK(redo["report"]["hypotheses"] == doc["report"]["hypotheses"]);
    CHECK(redo["report"]["contraction"]["alpha_star"] ==
          doc["report"]["contraction"]["alpha_star"]);
    std::filesystem::remove(tmp);
}

TEST_CASE("solve") {
    using test::run_command;
    SUBCASE("a chosen start point") {
        const auto r = run_command(cli + " solve --json --start 3 " +
                                   fixture("contraction_013.json"));
        CHECK(r.exit_code == 0);
        const json doc = json::parse(r.out);
        REQUIRE(doc["report"]["orbits"].size() == 1);
        const json& orbit = doc["report"]["orbits"][0];
        CHECK(orbit["orbit"] == json::array({"3", "1", "0"}));
        CHECK(orbit["limit"] == json("0"));
        CHECK(orbit["steps_to_limit"] == json(2));
    }
    SUBCASE("default iterates from every point") {
        const auto r = run_command(cli + " solve --json " + fixture("contraction_013.json"));
        CHECK(json::parse(r.out)["report"]["orbits"].size() == 3);
    }
    SUBCASE("cycles are results, not errors") {
        const auto r = run_command(cli + " solve --json --start a " + fixture("swap.json"));
        CHECK(r.exit_code == 0);
        const json doc = json::parse(r.out);
        CHECK(doc["report"]["orbits"][0]["cycle"].size() == 2);
    }
    SUBCASE("unknown start points exit 2") {
        CHECK(run_command(cli + " solve --start zzz " + fixture("contraction_013.json"))
                  .exit_code == 2);
    }
}

TEST_CASE("reduce renders inf literally and flags (b03)") {
    const auto r = test::run_command(cli + " reduce --json " + fixture("two_chains.json"));
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["report"]["blocked_on"] == json("b03"));
    CHECK(doc["report"]["reduction_verdict"] == json(false));
    bool saw_inf = false;
    for (const auto& row : doc["report"]["chain_metric"])
        for (const auto& v : row)
            if (v == json("inf")) saw_inf = true;
    CHECK(saw_inf);

    const auto ok = test::run_command(cli + " reduce --json " + fixture("contraction_013.json"));
    const json okdoc = json::parse(ok.out);
    CHECK(okdoc["report"]["reduction_verdict"] == json(true));
    CHECK(okdoc["report"]["d_factor"] == json(0.5));
    CHECK(okdoc["report"]["e_factor"] == json(0.5));
}

TEST_CASE("T5 checks on fixtures") {
    using test::run_command;
    // quasi-order cycles are accepted input
    CHECK(run_command(cli + " check --theorem T5 " + fixture("quasi_cycle.json")).exit_code == 0);
    // swap on an antichain: X(T,<=) empty, hypothesis fails
    CHECK(run_command(cli + " check --theorem T5 " + fixture("swap.json")).exit_code == 1);
    // identity pair: (c03) fails at every alpha
    CHECK(run_command(cli + " check --theorem T5 " + fixture("identity_pair.json")).exit_code == 1);
}

TEST_CASE("search writes reproducible witness files") {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "fixlab_search_test";
    fs::remove_all(base);
    const std::string flags = " search --theorem T2 --drop b03 --budget 25 --seed 7 --out ";
    const auto a = test::run_command(cli + " --json" + flags + (base / "a").string());
    const auto b = test::run_command(cli + " --json" + flags + (base / "b").string());
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);

    const json summary = json::parse(a.out)["summary"];
    CHECK(summary["witness_count"].get<std::size_t>() >= 1);
    for (const auto& name : summary["files"]) {
        const std::string fa = read_text_file((base / "a" / name.get<std::string>()).string());
        const std::string fb = read_text_file((base / "b" / name.get<std::string>()).string());
        CHECK(fa == fb);
        // every witness file is itself a loadable instance
        CHECK_NOTHROW(parse_instance_text(fa));
    }
    CHECK(read_text_file((base / "a" / "summary.json").string()) ==
          read_text_file((base / "b" / "summary.json").string()));
    fs::remove_all(base);
}

TEST_CASE("single-point searches find nothing, successfully") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "fixlab_tiny_search";
    fs::remove_all(dir);
    const auto r = test::run_command(cli + " --json search --theorem T2 --drop b03 --budget 1" +
                                     " --n 1 --seed 0 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["summary"]["witness_count"] == json(0));
    fs::remove_all(dir);
}

TEST_CASE("the tolerance override is honored and reported") {
    const auto r = test::run_command(cli + " validate --json --tolerance 1e-6 " +
                                     fixture("contraction_013.json"));
    CHECK(json::parse(r.out)["tolerance"] == json(1e-6));
    const auto env = test::run_command("FIXLAB_TOLERANCE=1e-7 " + cli + " validate --json " +
                                       fixture("contraction_013.json"));
    CHECK(json::parse(env.out)["tolerance"] == json(1e-7));
}
