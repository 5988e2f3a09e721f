#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "nw/laurent.hpp"
#include "nw/sequence.hpp"
#include "nw/wall.hpp"

using namespace nw;

TEST_CASE("paperfolding values k = 0..14") {
    const int expected[15] = {1, 1, -1, 1, 1, -1, -1, 1, 1, 1, -1, -1, 1, -1, -1};
    for (int k = 0; k < 15; ++k) CHECK(paperfolding_at(k) == expected[k]);
}

TEST_CASE("paperfolding negative extension k = -4..-1") {
    CHECK(paperfolding_at(-4) == 1);
    CHECK(paperfolding_at(-3) == -1);
    CHECK(paperfolding_at(-2) == -1);
    CHECK(paperfolding_at(-1) == 1);
}

TEST_CASE("odd-index halving and periodic even positions") {
    for (std::int64_t m = -10000; m <= 10000; ++m) {
        CHECK(paperfolding_at(2 * m + 1) == paperfolding_at(m));
        CHECK(paperfolding_at(4 * m) == 1);
        CHECK(paperfolding_at(4 * m + 2) == -1);
        int v = paperfolding_at(m);
        CHECK((v == 1 || v == -1));
    }
}

TEST_CASE("interleave fixed point") {
    BiSequence pf = BiSequence::paperfolding();
    SUBCASE("first 8 terms fold to the first 16") {
        std::vector<std::int64_t> v8 = pf.materialize(0, 7);
        std::vector<std::int64_t> v16 = pf.materialize(0, 15);
        CHECK(interleave_fold({1, -1}, v8) == v16);
    }
    SUBCASE("empty and single-element unfolds") {
        CHECK(interleave_fold({1, -1}, std::vector<std::int64_t>{}).empty());
        std::vector<std::int64_t> one{7};
        CHECK(interleave_fold({4, 9}, one) == std::vector<std::int64_t>{4, 7});
    }
    SUBCASE("prefix lengths up to 2^16") {
        std::vector<std::int64_t> big = pf.materialize(0, (1 << 17) - 1);
        for (int L : {1, 2, 37, 1 << 10, 1 << 16}) {
            std::vector<std::int64_t> head(big.begin(), big.begin() + L);
            std::vector<std::int64_t> folded = interleave_fold({1, -1}, head);
            CHECK(std::equal(folded.begin(), folded.end(), big.begin()));
        }
    }
}

TEST_CASE("level sequences") {
    SUBCASE("s=1 agrees with paperfolding on k >= 0") {
        for (std::int64_t k = 0; k < 4096; ++k)
            CHECK(level_paperfolding_at(1, k) == paperfolding_at(k));
    }
    SUBCASE("s=2 first eight values") {
        const std::int64_t expected[8] = {1, 1, -1, 1, 2, -1, -2, 1};
        for (int k = 0; k < 8; ++k) CHECK(level_paperfolding_at(2, k) == expected[k]);
    }
    SUBCASE("s=2 positions 0 mod 8 are all 1") {
        for (std::int64_t k = 0; k < 2000; ++k) CHECK(level_paperfolding_at(2, 8 * k) == 1);
    }
    SUBCASE("negative indices are rejected") {
        CHECK_THROWS_AS(level_paperfolding_at(2, -1), std::out_of_range);
        BiSequence lvl = BiSequence::level(2);
        CHECK_THROWS_AS(lvl.at(-3), std::out_of_range);
        CHECK(lvl.domain_min() == 0);
    }
}

TEST_CASE("file-backed sequences") {
    std::string path = "test_seq_tmp.txt";
    {
        std::ofstream out(path);
        out << "base_index -2\n1\n-1\n-1\n1\n1\n";
    }
    SUBCASE("values and range") {
        BiSequence s = BiSequence::from_file(path);
        CHECK(s.at(-2) == 1);
        CHECK(s.at(-1) == -1);
        CHECK(s.at(0) == -1);
        CHECK(s.at(1) == 1);
        CHECK(s.at(2) == 1);
        CHECK_THROWS_AS(s.at(3), std::out_of_range);
        CHECK_THROWS_AS(s.at(-3), std::out_of_range);
    }
    SUBCASE("parse errors") {
        std::string bad = "test_seq_bad.txt";
        {
            std::ofstream out(bad);
            out << "values 0\n1\n";
        }
        CHECK_THROWS_AS(BiSequence::from_file(bad), std::runtime_error);
        CHECK_THROWS_AS(BiSequence::from_file("does_not_exist.txt"), std::runtime_error);
        std::remove(bad.c_str());
    }
    SUBCASE("paperfolding dump re-ingested gives an identical wall region") {
        BiSequence pf = BiSequence::paperfolding();
        std::string dump = "test_seq_dump.txt";
        {
            std::ofstream out(dump);
            out << "base_index -40\n";
            for (std::int64_t k = -40; k <= 40; ++k) out << pf.at(k) << "\n";
        }
        BiSequence reread = BiSequence::from_file(dump);
        PrimeField f(3);
        WallRegion a = generate(pf, f, 8, -10, 10, WallStrategy::hybrid);
        WallRegion b = generate(reread, f, 8, -10, 10, WallStrategy::hybrid);
        for (int j = 1; j <= 8; ++j)
            for (int k = -10; k <= 10; ++k) {
                CHECK(a.value(j, k) == b.value(j, k));
                CHECK(b.known(j, k));
            }
        std::remove(dump.c_str());
    }
    std::remove(path.c_str());
}

TEST_CASE("star transforms match series multiplication to precision 200") {
    BiSequence pf = BiSequence::paperfolding();
    BiSequence star = BiSequence::star(pf);
    BiSequence dstar = BiSequence::doublestar(pf);
    for (std::int64_t k = -50; k <= 50; ++k) {
        CHECK(star.at(k) == pf.at(k) + pf.at(k + 1));
        CHECK(dstar.at(k) == pf.at(k) + 2 * pf.at(k + 1) + pf.at(k + 2));
    }
    for (std::uint64_t l : {3ull, 7ull}) {
        PrimeField f(l);
        const int K = 200;
        Laurent lambda = series_slice(pf, f, 1, K + 2);
        Poly t_plus_1(f, {1, 1});
        Laurent star_series = frac_and_poly_part(mul(t_plus_1, lambda)).frac;
        Laurent dstar_series = frac_and_poly_part(mul(t_plus_1 * t_plus_1, lambda)).frac;
        for (int k = 1; k <= K; ++k) {
            CHECK(star_series.coeff(k) == f.from_int(star.at(k)));
            CHECK(dstar_series.coeff(k) == f.from_int(dstar.at(k)));
        }
    }
}
