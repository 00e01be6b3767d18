#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace iswp;
using namespace testsupport;

namespace {

using Json = nlohmann::ordered_json;

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
    Json report; // parsed when code == 0 and stdout held one
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    if (r.code == 0 && !r.out.empty() && r.out.front() == '{') r.report = Json::parse(r.out);
    return r;
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "iswp-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream f(path);
    f << content;
    f.close();
    return path.string();
}

Json strip_runtime(Json report) {
    report.erase("runtime_ms");
    return report;
}

} // namespace

TEST_CASE("count reports the exact value with full provenance") {
    std::string k4 = write_scratch("k4.graph", serialize_graph(complete_graph(4)));
    CliRun r = run({"count", "--property", "clique", "--graph", k4, "--k", "3"});
    REQUIRE(r.code == 0);
    REQUIRE(r.report["command"] == "count");
    REQUIRE(r.report["result"]["count"] == 24);
    REQUIRE(r.report["parameters"]["property"] == "clique");
    REQUIRE(r.report["parameters"]["k"] == 3);
    REQUIRE(r.report["version"] == "iswp 0.1.0");
    REQUIRE(r.report.contains("runtime_ms"));
    REQUIRE_FALSE(r.report.contains("seed")); // deterministic run
    std::string digest = r.report["inputs"]["graph"]["digest"];
    REQUIRE(digest.rfind("fnv1a:", 0) == 0);
}

TEST_CASE("count modes agree through the command line") {
    SplitMix64 rng(801);
    Graph g = random_graph(6, 0.5, rng);
    Colouring f = random_colouring(6, 3, rng);
    std::string gp = write_scratch("agree.graph", serialize_graph(g));
    std::string fp = write_scratch("agree.colouring", serialize_colouring(f));

    CliRun exact = run({"count", "--property", "clique", "--graph", gp, "--colouring", fp,
                        "--k", "3", "--mode", "exact"});
    CliRun ie = run({"count", "--property", "clique", "--graph", gp, "--colouring", fp,
                     "--k", "3", "--mode", "ie"});
    CliRun dp = run({"count", "--property", "clique", "--graph", gp, "--colouring", fp,
                     "--k", "3", "--mode", "dp"});
    REQUIRE(exact.code == 0);
    REQUIRE(ie.code == 0);
    REQUIRE(dp.code == 0);
    REQUIRE(exact.report["result"]["count"] == ie.report["result"]["count"]);
    // The dp mode counts copies of the unique minimal pattern; for cliques
    // that is the same number as the tuple count.
    REQUIRE(dp.report["result"]["count"] == exact.report["result"]["count"]);
}

TEST_CASE("sampling runs are reproducible for a fixed seed") {
    std::string k5 = write_scratch("k5.graph", serialize_graph(complete_graph(5)));
    std::vector<std::string> args{"count", "--property", "clique", "--graph", k5,
                                  "--k",   "2",          "--mode",  "sample",
                                  "--epsilon", "1/4",    "--delta", "1/10",
                                  "--gk",  "2",          "--seed",  "7"};
    CliRun a = run(args);
    CliRun b = run(args);
    REQUIRE(a.code == 0);
    REQUIRE(a.report["seed"] == 7);
    REQUIRE(strip_runtime(a.report) == strip_runtime(b.report));
    // Every pair in K5 is a clique: the estimate collapses to exactly 20.
    REQUIRE(a.report["result"]["estimate"] == "20");
}

TEST_CASE("gadget verify confirms the copy-clique identity end to end") {
    std::string k4 = write_scratch("gk4.graph", serialize_graph(complete_graph(4)));
    CliRun r = run({"gadget", "verify", "--graph", k4, "--k", "3", "--pattern", "grid3"});
    REQUIRE(r.code == 0);
    REQUIRE(r.report["result"]["lhs"] == 4);
    REQUIRE(r.report["result"]["rhs"] == 4);
    REQUIRE(r.report["result"]["equal"] == true);
    REQUIRE(r.report["result"]["host_order"] == 144);
}

TEST_CASE("gadget build writes loadable artifacts") {
    std::string k3 = write_scratch("gk3.graph", serialize_graph(complete_graph(3)));
    std::string prefix = (scratch_dir() / "built").string();
    CliRun r = run({"gadget", "build", "--graph", k3, "--k", "3", "--pattern", "grid3",
                    "--out-prefix", prefix});
    REQUIRE(r.code == 0);
    REQUIRE(r.report["result"]["host_order"] == 63);

    std::ifstream gf(prefix + ".graph");
    std::stringstream gs;
    gs << gf.rdbuf();
    Graph host = parse_graph(gs.str());
    REQUIRE(host.order() == 63);

    std::ifstream cf(prefix + ".colouring");
    std::stringstream cs;
    cs << cf.rdbuf();
    Colouring col = parse_colouring(cs.str(), 63);
    REQUIRE(col.k == 9);
    REQUIRE(static_cast<int>(col.colour.size()) == 63);

    std::ifstream jf(prefix + ".json");
    Json sidecar = Json::parse(jf);
    REQUIRE(sidecar["k"] == 3);
    REQUIRE(sidecar["host_order"] == 63);

    // decode the copy that encodes the triangle {0,1,2}
    // (obtained through the library, checked through the CLI)
    PatternResult pr = generate_pattern_by_name("grid3");
    GadgetInstance gi = build_clique_gadget(complete_graph(3), 3, pr.graph, *pr.minor_map,
                                            rainbow_colouring(9));
    std::vector<int> copy = encode_clique(gi, {0, 1, 2});
    std::string copy_arg;
    for (int v : copy) copy_arg += (copy_arg.empty() ? "" : ",") + std::to_string(v);
    CliRun d = run({"gadget", "decode", "--graph", k3, "--k", "3", "--pattern", "grid3",
                    "--copy", copy_arg});
    REQUIRE(d.code == 0);
    REQUIRE(d.report["result"]["clique"] == Json::array({0, 1, 2}));

    CliRun c = run({"gadget", "closure-check", "--graph", k3, "--k", "3", "--pattern", "grid3",
                    "--trials", "200", "--seed", "3"});
    REQUIRE(c.code == 0);
    REQUIRE(c.report["result"]["violations"] == 0);
    REQUIRE(c.report["result"]["trials_run"] == 200);
    REQUIRE(c.report["seed"] == 3);
}

TEST_CASE("props subcommands surface the property catalogue") {
    CliRun list = run({"props", "list"});
    REQUIRE(list.code == 0);
    bool saw_clique = false;
    for (const auto& entry : list.report["result"]["properties"])
        if (entry["name"] == "clique") {
            saw_clique = true;
            REQUIRE(entry["symmetric"] == true);
            REQUIRE(entry["monotone"] == true);
        }
    REQUIRE(saw_clique);

    CliRun minimal = run({"props", "minimal", "--property", "matching", "--k", "4"});
    REQUIRE(minimal.code == 0);
    REQUIRE(minimal.report["result"]["labelled"] == Json::array({"21"}));
    REQUIRE(minimal.report["result"]["unlabelled"] == Json::array({"c"}));

    CliRun check = run({"props", "check", "--property", "independent_set", "--k", "3"});
    REQUIRE(check.code == 0);
    REQUIRE(check.report["result"]["monotone"] == false);
    REQUIRE(check.report["result"]["declared"]["monotone"] == false);
}

TEST_CASE("decide subcommand answers through every mode") {
    std::string k4 = write_scratch("dk4.graph", serialize_graph(complete_graph(4)));
    CliRun brute = run({"decide", "--property", "clique", "--graph", k4, "--k", "3",
                        "--mode", "brute"});
    REQUIRE(brute.code == 0);
    REQUIRE(brute.report["result"]["answer"] == "yes");
    REQUIRE(brute.report["result"]["witness"].size() == 3);

    CliRun cc = run({"decide", "--property", "clique", "--graph", k4, "--k", "3",
                     "--mode", "colour-coding", "--cc-mode", "family", "--decider", "dp"});
    REQUIRE(cc.code == 0);
    REQUIRE(cc.report["result"]["answer"] == "yes");

    CliRun wit = run({"decide", "--property", "clique", "--graph", k4, "--k", "3",
                      "--mode", "witness", "--oracle", "exact"});
    REQUIRE(wit.code == 0);
    REQUIRE(wit.report["result"]["answer"] == "yes");

    CliRun ram = run({"decide", "--property", "clique_or_is", "--graph", k4, "--k", "2",
                      "--mode", "ramsey"});
    REQUIRE(ram.code == 0);
    REQUIRE(ram.report["result"]["answer"] == "yes");
}

TEST_CASE("hash-family builds and writes the catalogue") {
    std::string out = (scratch_dir() / "fam.txt").string();
    CliRun r = run({"hash-family", "--n", "8", "--k", "3", "--validate", "--out", out});
    REQUIRE(r.code == 0);
    REQUIRE(r.report["result"]["construction"] == "greedy-cover");
    REQUIRE(r.report["result"]["validation"]["perfect"] == true);
    std::ifstream f(out);
    std::string header;
    std::getline(f, header);
    REQUIRE(header.rfind("family 8 3 ", 0) == 0);
}

TEST_CASE("failures map to distinct exit codes") {
    std::string k4 = write_scratch("ek4.graph", serialize_graph(complete_graph(4)));
    SECTION("unknown property is an input error") {
        CliRun r = run({"count", "--property", "no_such_thing", "--graph", k4, "--k", "3"});
        REQUIRE(r.code == 2);
        REQUIRE(r.err.find("input error") != std::string::npos);
    }
    SECTION("missing required options are input errors") {
        CliRun r = run({"count", "--property", "clique"});
        REQUIRE(r.code == 2);
    }
    SECTION("missing graph file is an input error") {
        CliRun r = run({"count", "--property", "clique", "--graph",
                        (scratch_dir() / "absent.graph").string(), "--k", "2"});
        REQUIRE(r.code == 2);
    }
    SECTION("an exhausted budget is its own failure") {
        CliRun r = run({"count", "--property", "clique", "--graph", k4, "--k", "3",
                        "--budget", "5"});
        REQUIRE(r.code == 3);
        REQUIRE(r.err.find("budget error") != std::string::npos);
    }
    SECTION("dp mode refuses properties without a unique minimal pattern") {
        // connected has three minimal labelled patterns at k=3 (the three
        // labelled two-edge paths), so the copy count is not the answer.
        std::string fp = write_scratch("ek4.colouring",
                                       serialize_colouring(Colouring{3, {1, 2, 3, 1}}));
        CliRun r = run({"count", "--property", "connected", "--graph", k4, "--colouring", fp,
                        "--k", "3", "--mode", "dp"});
        REQUIRE(r.code == 2);
        REQUIRE(r.err.find("exactly one minimal") != std::string::npos);
    }
    SECTION("help exits cleanly") {
        CliRun r = run({"--help"});
        REQUIRE(r.code == 0);
        REQUIRE(r.out.find("count") != std::string::npos);
    }
}
