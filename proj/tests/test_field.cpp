#include "doctest.h"
#include "nw/field.hpp"

using namespace nw;

TEST_CASE("primality check") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(19));
    CHECK(is_prime(2147483647ull));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));  // 7*13
}

TEST_CASE("field construction rejects bad moduli") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField((1ull << 31)), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField((1ull << 31) - 1));
}

TEST_CASE("2 is self-inverse mod 3") {
    PrimeField f(3);
    CHECK(f.inv(2) == 2);
    CHECK(f.mul(f.inv(2), 2) == 1);
    PrimeFieldElement two = f.elem(2);
    CHECK(inverse(two) * two == f.elem(1));
}

TEST_CASE("3 + 5 = 1 mod 7") {
    PrimeField f(7);
    CHECK(f.add(3, 5) == 1);
    CHECK(f.elem(3) + f.elem(5) == f.elem(1));
}

TEST_CASE("inv(a)*a = 1 for all a in [1,10] mod 11") {
    PrimeField f(11);
    for (std::uint64_t a = 1; a <= 10; ++a) {
        CHECK(f.mul(f.inv(a), a) == 1);
        CHECK(inverse(f.elem(static_cast<std::int64_t>(a))) * f.elem(static_cast<std::int64_t>(a)) ==
              f.elem(1));
    }
}

TEST_CASE("inverse of zero is rejected") {
    PrimeField f(7);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(inverse(f.elem(0)), std::domain_error);
}

TEST_CASE("modulus mismatch is rejected") {
    PrimeField f3(3), f5(5);
    CHECK_THROWS_AS(f3.elem(1) + f5.elem(1), std::invalid_argument);
    CHECK_THROWS_AS(f3.elem(2) * f5.elem(2), std::invalid_argument);
}

TEST_CASE("signed reduction and negation") {
    PrimeField f(7);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.from_int(-15) == 6);
    CHECK(f.from_int(15) == 1);
    CHECK(f.neg(0) == 0);
    CHECK(f.neg(3) == 4);
    CHECK(-f.elem(3) == f.elem(4));
}

TEST_CASE("large modulus products stay exact") {
    PrimeField f((1ull << 31) - 1);
    std::uint64_t a = f.modulus() - 2, b = f.modulus() - 3;
    // (p-2)(p-3) = 6 mod p
    CHECK(f.mul(a, b) == 6);
    CHECK(f.mul(f.inv(a), a) == 1);
    CHECK(f.pow(a, f.modulus() - 1) == 1);
    CHECK(f.pow(a, f.modulus() - 2) == f.inv(a));
}

TEST_CASE("field works at the characteristic 2 edge") {
    PrimeField f(2);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.inv(1) == 1);
    CHECK(f.from_int(-1) == 1);
}
