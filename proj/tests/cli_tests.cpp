// End-to-end tests of the z2skel binary: exit-code conventions, canonical
// JSON output, determinism, and the gen -> file -> validate round trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kCli = Z2SKEL_CLI_PATH;
const std::string kDir = Z2SKEL_WORK_DIR;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    std::string out_path = kDir + "/cli_stdout.txt";
    std::string err_path = kDir + "/cli_stderr.txt";
    std::string cmd = kCli + " " + args + " > " + out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    int code = (status >= 0) ? ((status >> 8) & 0xff) : -1;
    return RunResult{code, slurp(out_path), slurp(err_path)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("gen -> validate round trip with exit code 0") {
    auto gen = run("gen simplex 3");
    REQUIRE(gen.exit_code == 0);
    write_file(kDir + "/k4.json", gen.out);
    auto val = run("validate --input " + kDir + "/k4.json");
    CHECK(val.exit_code == 0);
    auto doc = parse(val.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["independence_level"] == 3);
    CHECK(doc["input_hash"].get<std::string>().substr(0, 8) == "fnv1a64:");
}

TEST_CASE("identical invocations are byte-identical") {
    auto a = run("gen cube 4");
    auto b = run("gen cube 4");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    write_file(kDir + "/q4.json", a.out);
    auto v1 = run("validate --input " + kDir + "/q4.json");
    auto v2 = run("validate --input " + kDir + "/q4.json");
    CHECK(v1.out == v2.out);
}

TEST_CASE("obstruct on the odd k=1 triangle reports 1/r1^2 with exit 1") {
    write_file(kDir + "/k3_rho1.json", R"({
      "k": 1, "n": 2,
      "vertices": ["a", "b", "c"],
      "edges": [
        {"id": "ab", "ends": ["a", "b"], "color": "1"},
        {"id": "bc", "ends": ["b", "c"], "color": "1"},
        {"id": "ca", "ends": ["c", "a"], "color": "1"}
      ]
    })");
    auto r = run("obstruct --input " + kDir + "/k3_rho1.json --f 1");
    CHECK(r.exit_code == 1);
    auto doc = parse(r.out);
    CHECK(doc["sum"] == "1/r1^2");
    // the full check also reports the k=1 verdict
    auto full = run("obstruct --input " + kDir + "/k3_rho1.json");
    CHECK(full.exit_code == 1);
    CHECK(parse(full.out)["verdict"] == "not_realizable_k1");
}

TEST_CASE("obstruct scan with a degree bound") {
    auto gen = run("gen cube 3");
    write_file(kDir + "/q3o.json", gen.out);
    auto r = run("obstruct --input " + kDir + "/q3o.json --max-degree 2");
    CHECK(r.exit_code == 0);
    auto doc = parse(r.out);
    CHECK(doc["verdict"] == "no_obstruction_up_to_degree");
    CHECK(doc["max_degree"] == 2);
}

TEST_CASE("poset f-vector and manifold3 on the 4-cube") {
    auto gen = run("gen cube 4");
    write_file(kDir + "/q4.json", gen.out);
    auto p = run("poset --input " + kDir + "/q4.json --f-vector");
    REQUIRE(p.exit_code == 0);
    auto doc = parse(p.out);
    CHECK(doc["f_vector"] == nlohmann::json({8, 24, 32, 16}));
    auto m = run("manifold3 --input " + kDir + "/q4.json");
    CHECK(m.exit_code == 0);
    CHECK(parse(m.out)["f1_equals_f0_plus_f3"] == true);
}

TEST_CASE("poset full export carries elements and covers") {
    auto gen = run("gen simplex 3");
    write_file(kDir + "/k4s.json", gen.out);
    auto p = run("poset --input " + kDir + "/k4s.json --check-complex");
    REQUIRE(p.exit_code == 0);
    auto doc = parse(p.out);
    CHECK(doc["rank"] == 3);
    CHECK(doc["elements"].size() == 15);  // 4+6+4+1
    CHECK(doc["simplicial_complex"] == true);
    CHECK(!doc["covers"].empty());
}

TEST_CASE("face-extend returns the triangle or NoFace") {
    auto gen = run("gen simplex 3");
    write_file(kDir + "/k4f.json", gen.out);
    auto good = run("face-extend --input " + kDir + "/k4f.json --vertex 0 --edges 0-1,0-2");
    REQUIRE(good.exit_code == 0);
    auto doc = parse(good.out);
    CHECK(doc["face"]["dim"] == 2);
    CHECK(doc["face"]["vertices"] == nlohmann::json({"0", "1", "2"}));

    // K3 all r1: the 1-face component construction fails (whole graph is
    // r1-colored and 2-regular)
    auto bad = run("face-extend --input " + kDir + "/k3_rho1.json --vertex a --edges ab");
    CHECK(bad.exit_code == 1);
    CHECK(parse(bad.out).contains("no_face"));
}

TEST_CASE("connectivity report") {
    auto gen = run("gen cube 3");
    write_file(kDir + "/q3.json", gen.out);
    auto r = run("connectivity --input " + kDir + "/q3.json");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r.out);
    CHECK(doc["connectivity"] == "ge_n");
    CHECK(doc["connectivity_value"] == 3);
    CHECK(doc["menger"] == 3);
    CHECK(doc["hypothesis_holds"] == true);
}

TEST_CASE("lambda export on the square") {
    auto gen = run("gen cube 2");
    write_file(kDir + "/q2.json", gen.out);
    auto r = run("lambda --input " + kDir + "/q2.json");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r.out);
    CHECK(doc["facets"].size() == 4);  // the four edges of the square
    for (const auto& f : doc["facets"]) CHECK(f.contains("lambda"));
}

TEST_CASE("export-dot emits a labeled multigraph") {
    auto gen = run("gen simplex 2");
    write_file(kDir + "/k3s.json", gen.out);
    auto r = run("export-dot --input " + kDir + "/k3s.json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("graph skeleton {") == 0);
    CHECK(r.out.find("label=\"10\"") != std::string::npos);
}

TEST_CASE("gen k1 and gen product subcommands") {
    write_file(kDir + "/c4g.json", R"({
      "n": 2, "vertices": ["a", "b", "c", "d"],
      "edges": [
        {"id": "ab", "ends": ["a", "b"]},
        {"id": "bc", "ends": ["b", "c"]},
        {"id": "cd", "ends": ["c", "d"]},
        {"id": "da", "ends": ["d", "a"]}
      ]
    })");
    auto k1 = run("gen k1 " + kDir + "/c4g.json");
    REQUIRE(k1.exit_code == 0);
    write_file(kDir + "/c4s.json", k1.out);
    auto val = run("validate --input " + kDir + "/c4s.json");
    CHECK(val.exit_code == 0);

    auto s2 = run("gen simplex 2");
    write_file(kDir + "/s2.json", s2.out);
    auto c1 = run("gen cube 1");
    write_file(kDir + "/c1.json", c1.out);
    auto prod = run("gen product " + kDir + "/s2.json " + kDir + "/c1.json");
    REQUIRE(prod.exit_code == 0);
    auto doc = parse(prod.out);
    CHECK(doc["k"] == 3);
    CHECK(doc["n"] == 3);
    CHECK(doc["vertices"].size() == 6);
}

TEST_CASE("search subcommand emits the canonical skeleton format") {
    write_file(kDir + "/spec34.json", R"({
      "k": 3, "n": 4, "independence_min": 3,
      "target": {"type": "no_face_extension", "m": 3}
    })");
    auto r = run("search " + kDir + "/spec34.json");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r.out);
    CHECK(doc["k"] == 3);
    CHECK(doc["n"] == 4);
    write_file(kDir + "/witness34.json", r.out);
    CHECK(run("validate --input " + kDir + "/witness34.json").exit_code == 0);
    CHECK(r.err.find("witness:") != std::string::npos);

    // exhausted space exits 1 with a structured report
    write_file(kDir + "/spec_empty.json", R"({
      "k": 2, "n": 2, "vertex_count": 2,
      "target": {"type": "disconnected_two_face_intersection"}
    })");
    auto empty = run("search " + kDir + "/spec_empty.json");
    CHECK(empty.exit_code == 1);
    CHECK(parse(empty.out)["error"] == "search space exhausted");
}

TEST_CASE("usage and IO errors exit 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("validate").exit_code == 2);  // missing --input
    CHECK(run("validate --input " + kDir + "/no_such_file.json").exit_code == 2);
    write_file(kDir + "/broken.json", "{not json");
    CHECK(run("validate --input " + kDir + "/broken.json").exit_code == 2);
    write_file(kDir + "/incomplete.json", R"({"k": 1})");
    CHECK(run("validate --input " + kDir + "/incomplete.json").exit_code == 2);
    CHECK(run("gen simplex").exit_code == 2);
    CHECK(run("gen simplex x").exit_code == 2);
    CHECK(run("gen frobnicate 3").exit_code == 2);
}

TEST_CASE("faces without --dim enumerates the guaranteed dimensions") {
    auto gen = run("gen cube 3");
    write_file(kDir + "/q3f.json", gen.out);
    auto r = run("faces --input " + kDir + "/q3f.json");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r.out);
    auto& by_dim = doc["faces_by_dim"];
    CHECK(by_dim["0"].size() == 8);
    CHECK(by_dim["1"].size() == 12);
    CHECK(by_dim["2"].size() == 6);
    CHECK(by_dim["3"].size() == 1);

    // out-of-range dimension requests are domain errors
    CHECK(run("faces --input " + kDir + "/q3f.json --dim 7").exit_code == 1);
}

TEST_CASE("invalid skeletons exit 1 from validate") {
    // all edges r1 but k=2: the span axiom (P1) fails at every vertex
    write_file(kDir + "/bad.json", R"({
      "k": 2, "n": 2,
      "vertices": ["a", "b", "c", "d"],
      "edges": [
        {"id": "ab", "ends": ["a", "b"], "color": "10"},
        {"id": "bc", "ends": ["b", "c"], "color": "10"},
        {"id": "cd", "ends": ["c", "d"], "color": "10"},
        {"id": "da", "ends": ["d", "a"], "color": "10"}
      ]
    })");
    auto r = run("validate --input " + kDir + "/bad.json");
    CHECK(r.exit_code == 1);
    auto doc = parse(r.out);
    CHECK(doc["ok"] == false);
    CHECK(doc["p1_ok"] == false);
    CHECK(doc["p1_failures"].size() == 4);
}
