#pragma once

#include <cstdint>
#include <stdexcept>

namespace nw {

/// Deterministic primality check for moduli up to 2^31 - 1.
bool is_prime(std::uint64_t n) noexcept;

/// A residue carrying its modulus. Cross-modulus arithmetic throws.
/// Bulk computations go through PrimeField on raw residues instead.
struct PrimeFieldElement {
    std::uint64_t value = 0;
    std::uint64_t modulus = 2;

    friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
};

PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b);
PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b);
PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b);
PrimeFieldElement operator-(PrimeFieldElement a);
PrimeFieldElement inverse(PrimeFieldElement a);

/// Field context: the modulus is validated once here; all element values are
/// canonical residues in [0, modulus). Products stay below 2^62, so plain
/// 64-bit arithmetic is exact for every supported modulus.
class PrimeField {
public:
    static constexpr std::uint64_t kMaxModulus = (1ull << 31) - 1;

    explicit PrimeField(std::uint64_t modulus);

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;

    /// Reduce an arbitrary signed integer into [0, modulus).
    std::uint64_t from_int(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }

    PrimeFieldElement elem(std::int64_t x) const noexcept { return {from_int(x), p_}; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

}  // namespace nw
