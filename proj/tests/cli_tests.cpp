// End-to-end checks of the nwall binary: exit codes, artifact formats and
// byte determinism. The binary path is injected by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

int run_cmd(const std::string& args) {
    std::string cmd = std::string(NWALL_BIN) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("gen writes a deterministic wall dump") {
    REQUIRE(run_cmd("gen --modulus 3 --rows 10 --cols -10:10 --seq paperfolding "
                    "--strategy hybrid --out cli_wall_a.json") == 0);
    REQUIRE(run_cmd("gen --modulus 3 --rows 10 --cols -10:10 --seq paperfolding "
                    "--strategy hybrid --out cli_wall_b.json") == 0);
    std::string a = slurp("cli_wall_a.json"), b = slurp("cli_wall_b.json");
    CHECK(!a.empty());
    CHECK(a == b);
    Json j = Json::parse(a);
    CHECK(j["modulus"] == 3);
    CHECK(j["j_range"] == Json::array({1, 10}));
    CHECK(j["k_range"] == Json::array({-10, 10}));
    CHECK(j["cells"].size() == 10u * 21u);
    long long prov_total = 0;
    for (const auto& run : j["provenance"]) prov_total += run[1].get<long long>();
    CHECK(prov_total == 10 * 21);
    std::remove("cli_wall_a.json");
    std::remove("cli_wall_b.json");
}

TEST_CASE("gen cells are strategy independent") {
    REQUIRE(run_cmd("gen --modulus 7 --rows 8 --cols -8:8 --strategy hybrid --out cli_h.json") ==
            0);
    REQUIRE(run_cmd("gen --modulus 7 --rows 8 --cols -8:8 --strategy oracle --out cli_o.json") ==
            0);
    Json h = Json::parse(slurp("cli_h.json")), o = Json::parse(slurp("cli_o.json"));
    CHECK(h["cells"] == o["cells"]);
    std::remove("cli_h.json");
    std::remove("cli_o.json");
}

TEST_CASE("csv format") {
    REQUIRE(run_cmd("gen --modulus 3 --rows 2 --cols 0:2 --format csv --out cli_wall.csv") == 0);
    std::string csv = slurp("cli_wall.csv");
    CHECK(csv.rfind("j,k,value\n", 0) == 0);
    // first data row: j=1, k=0, lambda_{-1} = 1
    CHECK(csv.find("1,0,1\n") != std::string::npos);
    std::remove("cli_wall.csv");
}

TEST_CASE("render emits a P6 pixmap whose red mask is the zero set") {
    REQUIRE(run_cmd("render --modulus 3 --rows 10 --cols -10:10 --out cli_wall.ppm") == 0);
    REQUIRE(run_cmd("gen --modulus 3 --rows 10 --cols -10:10 --out cli_wall.json") == 0);
    std::string ppm = slurp("cli_wall.ppm");
    Json wall = Json::parse(slurp("cli_wall.json"));
    REQUIRE(ppm.rfind("P6\n21 10\n255\n", 0) == 0);
    std::size_t off = std::string("P6\n21 10\n255\n").size();
    REQUIRE(ppm.size() == off + 3u * 21u * 10u);
    for (std::size_t i = 0; i < 21u * 10u; ++i) {
        bool red = static_cast<unsigned char>(ppm[off + 3 * i]) == 255 &&
                   static_cast<unsigned char>(ppm[off + 3 * i + 1]) == 0 &&
                   static_cast<unsigned char>(ppm[off + 3 * i + 2]) == 0;
        bool zero = wall["cells"][i] == 0;
        CHECK(red == zero);
    }
    std::remove("cli_wall.ppm");
    std::remove("cli_wall.json");
}

TEST_CASE("windows report") {
    REQUIRE(run_cmd("windows --modulus 3 --rows 12 --cols -6:12 --out cli_windows.json") == 0);
    Json arr = Json::parse(slurp("cli_windows.json"));
    REQUIRE(arr.is_array());
    bool found = false;
    for (const auto& w : arr) {
        if (w["j_corner"] == 3 && w["k_corner"] == 5) {
            found = true;
            CHECK(w["size"] == 3);
            CHECK(w["truncated"] == false);
            CHECK(w["q_coeffs"] == Json::array({1, 0, 1}));  // t^2 + 1
        }
    }
    CHECK(found);
    std::remove("cli_windows.json");
}

TEST_CASE("cf lists normalized convergents") {
    REQUIRE(run_cmd("cf --modulus 3 -m 1 --precision 24 --out cli_cf.json") == 0);
    Json j = Json::parse(slurp("cli_cf.json"));
    CHECK(j["m"] == 1);
    CHECK(j["precision"] == 24);
    REQUIRE(j["items"].size() >= 3);
    CHECK(j["items"][0]["q"] == 0);
    CHECK(j["items"][1]["q"] == 1);
    CHECK(j["items"][1]["q_coeffs"] == Json::array({1, 1}));  // t + 1
    CHECK(j["items"][2]["q"] == 3);
    std::remove("cli_cf.json");
}

TEST_CASE("littlewood reports the degree-bounded minimum") {
    REQUIRE(run_cmd("littlewood --modulus 3 --p 1,0 --max-deg 12 --mode fast "
                    "--out cli_lw.json") == 0);
    Json j = Json::parse(slurp("cli_lw.json"));
    CHECK(j["min_exp"] == -4);
    CHECK(j["p"] == "1,0");
    std::remove("cli_lw.json");
}

TEST_CASE("verify suite exits 0 on success with an empty failure list") {
    REQUIRE(run_cmd("verify --suite wxyz --modulus 3,7 --m-range -10:10 --n-max 9 "
                    "--out cli_verify.json") == 0);
    Json j = Json::parse(slurp("cli_verify.json"));
    CHECK(j["failure_count"] == 0);
    CHECK(j["failures"].empty());
    CHECK(j["checks_run"].get<long long>() > 0);
    std::remove("cli_verify.json");
}

TEST_CASE("scan-t2m1 exits 1 when violations exist") {
    {
        std::ofstream out("cli_seq.txt");
        out << "base_index 1\n";
        for (int k = 1; k <= 40; ++k) out << (k % 2 == 0 ? 1 : 0) << "\n";
    }
    CHECK(run_cmd("scan-t2m1 --modulus 3 --seq file:cli_seq.txt --m-range 1:1 --max-deg 6 "
                  "--out cli_scan.json") == 1);
    Json j = Json::parse(slurp("cli_scan.json"));
    CHECK(j["violations"].size() == 1);
    CHECK(run_cmd("scan-t2m1 --modulus 3 --m-range -5:5 --max-deg 10 --out cli_scan.json") == 0);
    std::remove("cli_seq.txt");
    std::remove("cli_scan.json");
}

TEST_CASE("trace reproduces the seed chain") {
    REQUIRE(run_cmd("trace --modulus 3 --rows 40 --cols -10:40 --corner 2,3 --depth 3 "
                    "--out cli_trace.json") == 0);
    Json j = Json::parse(slurp("cli_trace.json"));
    REQUIRE(j["links"].size() == 4);
    CHECK(j["links"][1]["j_corner"] == 3);
    CHECK(j["links"][1]["k_corner"] == 5);
    CHECK(j["links"][3]["j_corner"] == 15);
    CHECK(j["links"][3]["k_corner"] == 23);
    for (const auto& link : j["links"]) CHECK(link["verified"] == true);
    std::remove("cli_trace.json");
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cmd("gen --modulus 4 --rows 4 --cols 0:4") == 2);          // composite modulus
    CHECK(run_cmd("gen --modulus 3 --rows 4 --cols 4:0") == 2);          // inverted range
    CHECK(run_cmd("gen --modulus 3 --seq level:0 --rows 2 --cols 0:2") == 2);
    CHECK(run_cmd("frobnicate") == 2);                                   // unknown subcommand
    CHECK(run_cmd("verify --suite nonsense") == 2);
    CHECK(run_cmd("littlewood --modulus 3 --p 2,0,1 --max-deg 4") == 2);  // reducible p
}
