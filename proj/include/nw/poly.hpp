#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "nw/field.hpp"

namespace nw {

/// Dense polynomial over F_l, coefficients stored lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree kNegInfinity.
class Poly {
public:
    static constexpr int kNegInfinity = std::numeric_limits<int>::min();

    explicit Poly(const PrimeField& f) : mod_(f.modulus()) {}
    Poly(const PrimeField& f, std::span<const std::int64_t> coeffs_low_first);
    Poly(const PrimeField& f, std::initializer_list<std::int64_t> coeffs_low_first);

    static Poly zero(const PrimeField& f) { return Poly(f); }
    static Poly one(const PrimeField& f) { return Poly(f, {1}); }
    /// t^e with an optional scalar, lowest-degree-first storage.
    static Poly monomial(const PrimeField& f, int e, std::int64_t c = 1);

    std::uint64_t modulus() const noexcept { return mod_; }
    PrimeField field() const { return PrimeField(mod_); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kNegInfinity : static_cast<int>(c_.size()) - 1; }
    std::uint64_t coeff(int i) const noexcept {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(i)];
    }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const noexcept { return mod_ == o.mod_ && c_ == o.c_; }

    Poly scaled(std::uint64_t s) const;
    Poly shifted(int s) const;  // multiply by t^s, s >= 0
    Poly monic() const;         // throws on zero
    std::uint64_t eval(std::uint64_t x) const;
    Poly composed(const Poly& inner) const;  // this(inner(t))
    Poly pow(unsigned e) const;

    std::string to_string() const;  // e.g. "t^2 + 2"

private:
    void trim();
    std::uint64_t mod_;
    std::vector<std::uint64_t> c_;

    friend std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on zero divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

Poly poly_gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0
bool divides(const Poly& d, const Poly& a);

/// Largest v with p^v | q. Throws for q = 0 (valuation +infinity) or constant p.
int padic_valuation(const Poly& q, const Poly& p);

/// Irreducibility over F_l for deg <= 3 (constant-free root test via t^l mod p).
/// Degrees >= 4 are accepted on caller assertion; `warned` reports that case.
bool is_irreducible_low_degree(const Poly& p, bool* caller_asserted = nullptr);

/// Ordering used to pick deterministic witnesses: by degree, then by
/// coefficient values from the leading coefficient down.
bool poly_canonical_less(const Poly& a, const Poly& b);

}  // namespace nw
