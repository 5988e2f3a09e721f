#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nw/poly.hpp"
#include "nw/sequence.hpp"

namespace nw {

using BigInt = boost::multiprecision::cpp_int;

/// H is the Hankel determinant of the sequence itself, F the one of the star
/// sequence gamma_k + gamma_{k+1}, G the one of the double-star sequence
/// gamma_k + 2 gamma_{k+1} + gamma_{k+2}.
enum class DetKind { H, F, G };

/// S is the bordered Hankel approximant of the sequence, R the one of the
/// star sequence, V the one of the double-star sequence.
enum class ApproxKind { S, R, V };

/// Dense n x p slice gamma_{m+i+j}, reduced mod l. Entries are constant along
/// anti-diagonals by construction.
struct HankelMatrix {
    std::int64_t m = 0;
    int rows = 0;
    int cols = 0;
    std::uint64_t modulus = 2;
    std::vector<std::uint64_t> entries;  // row-major

    std::uint64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    static HankelMatrix build(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n,
                              int p);
};

/// Exact determinant over F_l by Gaussian elimination; the 0x0 matrix gives 1.
std::uint64_t det_oracle(std::vector<std::uint64_t> rowmajor, int n, const PrimeField& f);
std::uint64_t det_oracle(const HankelMatrix& mat);

/// Exact integer determinant (fraction-free Bareiss over arbitrary precision).
BigInt det_oracle_int(std::vector<BigInt> rowmajor, int n);

std::uint64_t hankel_value(DetKind kind, const BiSequence& seq, const PrimeField& f,
                           std::int64_t m, int n);
BigInt hankel_value_int(DetKind kind, const BiSequence& seq, std::int64_t m, int n);

/// Polynomial approximant of order (m,n): degree <= n, leading coefficient
/// H(m,n), constant term (-1)^n H(m+1,n). Order 0 is the constant 1.
Poly poly_approx(ApproxKind kind, const BiSequence& seq, const PrimeField& f, std::int64_t m,
                 int n);

// Bordered determinant forms. These are alternative expressions for F, G, R
// and (t+1)V; the library computes the plain Hankel route and the test suite
// checks the two routes agree.
std::uint64_t bordered_F(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n);
std::uint64_t bordered_G(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n);
Poly bordered_R(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n);
/// The raw (n+3)-determinant equal to -(t+1)V(m,n;t).
Poly bordered_V_raw_det(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n);
/// V(m,n;t) recovered from the raw determinant; throws if (t+1) fails to divide.
Poly bordered_V(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n);

}  // namespace nw
