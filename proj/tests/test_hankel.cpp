#include <random>

#include "doctest.h"
#include "nw/hankel.hpp"

using namespace nw;

namespace {

// Independent oracle: determinant by cofactor expansion along the first row.
std::uint64_t cofactor_det(const std::vector<std::uint64_t>& a, int n, const PrimeField& f) {
    if (n == 0) return 1;
    if (n == 1) return a[0];
    std::uint64_t acc = 0;
    for (int col = 0; col < n; ++col) {
        if (a[static_cast<std::size_t>(col)] == 0) continue;
        std::vector<std::uint64_t> minor;
        minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != col) minor.push_back(a[static_cast<std::size_t>(i) * n + j]);
        std::uint64_t term = f.mul(a[static_cast<std::size_t>(col)], cofactor_det(minor, n - 1, f));
        acc = (col % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

}  // namespace

TEST_CASE("determinant oracle basics") {
    PrimeField f3(3);
    SUBCASE("0x0 determinant is 1") {
        CHECK(det_oracle({}, 0, f3) == 1);
        CHECK(det_oracle_int({}, 0) == 1);
    }
    SUBCASE("[[-1,1],[1,1]] is -2 over Z and 1 over F_3") {
        std::vector<BigInt> zi{-1, 1, 1, 1};
        CHECK(det_oracle_int(zi, 2) == -2);
        std::vector<std::uint64_t> a{f3.from_int(-1), 1, 1, 1};
        CHECK(det_oracle(a, 2, f3) == 1);
    }
    SUBCASE("random 8x8 against the cofactor oracle") {
        std::mt19937 rng(7);
        PrimeField f(11);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<std::uint64_t> a(64);
            for (auto& v : a) v = rng() % 11;
            CHECK(det_oracle(a, 8, f) == cofactor_det(a, 8, f));
        }
    }
    SUBCASE("integer Bareiss against the modular result") {
        std::mt19937 rng(8);
        PrimeField f(101);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<BigInt> zi(49);
            std::vector<std::uint64_t> a(49);
            for (int i = 0; i < 49; ++i) {
                std::int64_t v = static_cast<std::int64_t>(rng() % 9) - 4;
                zi[static_cast<std::size_t>(i)] = v;
                a[static_cast<std::size_t>(i)] = f.from_int(v);
            }
            BigInt d = det_oracle_int(zi, 7);
            std::int64_t dm = static_cast<std::int64_t>(d % 101);
            CHECK(det_oracle(a, 7, f) == f.from_int(dm));
        }
    }
}

TEST_CASE("Hankel matrices have constant anti-diagonals") {
    BiSequence pf = BiSequence::paperfolding();
    PrimeField f(7);
    for (std::int64_t m : {-9, -1, 0, 3}) {
        HankelMatrix h = HankelMatrix::build(pf, f, m, 4, 6);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 6; ++j) CHECK(h.at(i, j) == f.from_int(pf.at(m + i + j)));
        for (int i = 1; i < 4; ++i)
            for (int j = 0; j + 1 < 6; ++j) CHECK(h.at(i, j) == h.at(i - 1, j + 1));
    }
}

TEST_CASE("the vanishing triple H(2,3) = H(2,4) = H(2,5) = 0") {
    BiSequence pf = BiSequence::paperfolding();
    for (int n : {3, 4, 5}) CHECK(hankel_value_int(DetKind::H, pf, 2, n) == 0);
    for (std::uint64_t l : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 19ull}) {
        PrimeField f(l);
        for (int n : {3, 4, 5}) CHECK(hankel_value(DetKind::H, pf, f, 2, n) == 0);
    }
}

TEST_CASE("small Hankel values by hand") {
    BiSequence pf = BiSequence::paperfolding();
    PrimeField f(3);
    CHECK(hankel_value(DetKind::H, pf, f, 1, 1) == 1);               // lambda_1
    CHECK(hankel_value_int(DetKind::H, pf, 2, 2) == -2);             // over Z
    CHECK(hankel_value(DetKind::H, pf, f, 2, 2) == 1);               // -2 mod 3
    for (std::int64_t m = -6; m <= 6; ++m) {
        CHECK(hankel_value(DetKind::G, pf, f, m, 0) == 1);
        CHECK(bordered_G(pf, f, m, 0) == 1);
        CHECK(hankel_value(DetKind::F, pf, f, m, 0) == 1);
        CHECK(bordered_F(pf, f, m, 0) == 1);
    }
}

TEST_CASE("polynomial approximants") {
    BiSequence pf = BiSequence::paperfolding();
    PrimeField f(3);
    SUBCASE("S(1,1;t) = t + 1") {
        CHECK(poly_approx(ApproxKind::S, pf, f, 1, 1) == Poly(f, {1, 1}));
    }
    SUBCASE("leading coefficient of S(2,3;t) vanishes with H(2,3)") {
        Poly s = poly_approx(ApproxKind::S, pf, f, 2, 3);
        CHECK(s.coeff(3) == 0);
    }
    SUBCASE("order-0 approximants are the constant 1") {
        for (std::int64_t m = -4; m <= 4; ++m) {
            CHECK(poly_approx(ApproxKind::S, pf, f, m, 0) == Poly::one(f));
            CHECK(poly_approx(ApproxKind::R, pf, f, m, 0) == Poly::one(f));
            CHECK(poly_approx(ApproxKind::V, pf, f, m, 0) == Poly::one(f));
            // (t+1) V(m,0;t) equals the 3x3 bordered determinant
            Poly raw = bordered_V_raw_det(pf, f, m, 0);
            CHECK(-raw == Poly(f, {1, 1}) * bordered_V(pf, f, m, 0));
            CHECK(bordered_V(pf, f, m, 0) == Poly::one(f));
        }
    }
    SUBCASE("endpoint coefficients on a sample grid") {
        for (std::int64_t m = -8; m <= 8; ++m) {
            for (int n = 1; n <= 6; ++n) {
                Poly s = poly_approx(ApproxKind::S, pf, f, m, n);
                std::uint64_t h = hankel_value(DetKind::H, pf, f, m, n);
                std::uint64_t h1 = hankel_value(DetKind::H, pf, f, m + 1, n);
                CHECK(s.coeff(n) == h);
                CHECK(s.coeff(0) == (n % 2 == 1 ? f.neg(h1) : h1));
            }
        }
    }
}

TEST_CASE("bordered determinant forms agree with the Hankel route") {
    BiSequence pf = BiSequence::paperfolding();
    for (std::uint64_t l : {3ull, 5ull, 7ull, 11ull, 13ull, 19ull}) {
        PrimeField f(l);
        for (std::int64_t m = -15; m <= 15; ++m) {
            for (int n = 0; n <= 10; ++n) {
                CHECK(bordered_F(pf, f, m, n) == hankel_value(DetKind::F, pf, f, m, n));
                CHECK(bordered_G(pf, f, m, n) == hankel_value(DetKind::G, pf, f, m, n));
            }
        }
    }
}

TEST_CASE("bordered approximant forms agree and carry the t+1 factor") {
    BiSequence pf = BiSequence::paperfolding();
    for (std::uint64_t l : {3ull, 7ull}) {
        PrimeField f(l);
        Poly t_plus_1(f, {1, 1});
        for (std::int64_t m = -8; m <= 8; ++m) {
            for (int n = 0; n <= 6; ++n) {
                CHECK(bordered_R(pf, f, m, n) == poly_approx(ApproxKind::R, pf, f, m, n));
                Poly raw = bordered_V_raw_det(pf, f, m, n);
                CHECK(divides(t_plus_1, raw));  // polynomial identity over F_l
                CHECK(bordered_V(pf, f, m, n) == poly_approx(ApproxKind::V, pf, f, m, n));
            }
        }
    }
}

TEST_CASE("exact-integer and modular routes agree after reduction") {
    BiSequence pf = BiSequence::paperfolding();
    for (std::uint64_t l : {3ull, 7ull}) {
        PrimeField f(l);
        for (std::int64_t m = -6; m <= 6; ++m) {
            for (int n = 0; n <= 6; ++n) {
                for (DetKind kind : {DetKind::H, DetKind::F, DetKind::G}) {
                    BigInt z = hankel_value_int(kind, pf, m, n);
                    std::int64_t reduced = static_cast<std::int64_t>(
                        z % static_cast<std::int64_t>(l));
                    CHECK(hankel_value(kind, pf, f, m, n) == f.from_int(reduced));
                }
            }
        }
    }
}

TEST_CASE("condensation identity validates the wall cross rule") {
    BiSequence pf = BiSequence::paperfolding();
    for (std::uint64_t l : {3ull, 7ull, 19ull}) {
        PrimeField f(l);
        for (std::int64_t m = -10; m <= 10; ++m) {
            for (int n = 1; n <= 8; ++n) {
                auto H = [&](std::int64_t mm, int nn) {
                    return hankel_value(DetKind::H, pf, f, mm, nn);
                };
                std::uint64_t lhs = f.mul(H(m, n + 1), H(m + 2, n - 1));
                std::uint64_t rhs =
                    f.sub(f.mul(H(m, n), H(m + 2, n)), f.mul(H(m + 1, n), H(m + 1, n)));
                CHECK(lhs == rhs);
            }
        }
    }
}
