#include <sstream>

#include "doctest.h"
#include "nw/io.hpp"

using namespace nw;

TEST_CASE("wall json carries the full grid and a consistent provenance encoding") {
    BiSequence pf = BiSequence::paperfolding();
    PrimeField f(3);
    WallRegion region = generate(pf, f, 6, -5, 5, WallStrategy::hybrid);
    Json j = wall_to_json(region);
    CHECK(j["modulus"] == 3);
    CHECK(j["j_range"][1] == 6);
    CHECK(j["cells"].size() == 6u * 11u);
    long long total = 0;
    for (const auto& run : j["provenance"]) {
        CHECK(run.size() == 2);
        total += run[1].get<long long>();
    }
    CHECK(total == 6 * 11);
    CHECK(j["provenance"][0][0] == "first_row");
    // row-major: cell (1, -5) is lambda_{-6} = -1 = 2 mod 3
    CHECK(j["cells"][0] == f.from_int(pf.at(-6)));
}

TEST_CASE("csv starts with the header and one line per cell") {
    BiSequence pf = BiSequence::paperfolding();
    PrimeField f(5);
    WallRegion region = generate(pf, f, 3, 0, 4, WallStrategy::oracle);
    std::string csv = wall_to_csv(region);
    CHECK(csv.rfind("j,k,value\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 3 * 5);
}

TEST_CASE("ppm renders red zeros and the grayscale residue ramp") {
    BiSequence pf = BiSequence::paperfolding();
    PrimeField f(19);
    WallRegion region = generate(pf, f, 12, -12, 12, WallStrategy::hybrid);
    std::ostringstream os;
    write_ppm(region, os);
    std::string ppm = os.str();
    std::string header = "P6\n25 12\n255\n";
    REQUIRE(ppm.rfind(header, 0) == 0);
    REQUIRE(ppm.size() == header.size() + 3u * 25u * 12u);
    std::size_t off = header.size();
    int idx = 0;
    for (int j = 1; j <= 12; ++j) {
        for (int k = -12; k <= 12; ++k, ++idx) {
            auto r = static_cast<unsigned char>(ppm[off + 3 * idx]);
            auto g = static_cast<unsigned char>(ppm[off + 3 * idx + 1]);
            auto b = static_cast<unsigned char>(ppm[off + 3 * idx + 2]);
            std::uint64_t v = region.value(j, k);
            if (v == 0) {
                CHECK(r == 255);
                CHECK(g == 0);
                CHECK(b == 0);
            } else {
                auto want = static_cast<unsigned char>(
                    std::lround(255.0 * static_cast<double>(v) / 18.0));
                CHECK(r == want);
                CHECK(g == want);
                CHECK(b == want);
            }
        }
    }
}

TEST_CASE("report json keeps the schema fields in order") {
    VerificationReport report;
    report.suite = "demo";
    report.params = {{"modulus", "3"}};
    report.check(true, {});
    report.check(false, {"identity q", 3, -2, 4, "1", "0", "spot"});
    Json j = report_to_json(report);
    CHECK(j["suite"] == "demo");
    CHECK(j["params"]["modulus"] == "3");
    CHECK(j["checks_run"] == 2);
    CHECK(j["failure_count"] == 1);
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["identity"] == "identity q");
    CHECK(j["failures"][0]["m"] == -2);
    std::string dumped = j.dump();
    CHECK(dumped.find("\"suite\"") < dumped.find("\"params\""));
    CHECK(dumped.find("\"params\"") < dumped.find("\"checks_run\""));
}

TEST_CASE("windows json attaches normalized convergent coefficients") {
    BiSequence pf = BiSequence::paperfolding();
    PrimeField f(3);
    WallRegion region = generate(pf, f, 10, -8, 12, WallStrategy::hybrid);
    Json arr = windows_to_json(region, scan_windows(region));
    REQUIRE(arr.is_array());
    bool saw_interior = false;
    for (const auto& w : arr) {
        REQUIRE(w.contains("j_corner"));
        REQUIRE(w.contains("q_coeffs"));
        if (!w["truncated"].get<bool>()) {
            saw_interior = true;
            CHECK(!w["q_coeffs"].empty());
        }
    }
    CHECK(saw_interior);
}
