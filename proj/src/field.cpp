#include "nw/field.hpp"

namespace nw {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
    if (modulus > kMaxModulus)
        throw std::invalid_argument("PrimeField: modulus exceeds 2^31 - 1");
    if (!is_prime(modulus))
        throw std::invalid_argument("PrimeField: modulus is not prime");
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % p_, res = 1 % p_;
    while (e > 0) {
        if (e & 1) res = mul(res, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return res;
}

namespace {

const PrimeField& ctx_for(std::uint64_t modulus) {
    // Element-level operators funnel through a validated context; contexts for
    // repeated moduli are cheap to rebuild (validation is trial division).
    thread_local PrimeField cached(2);
    if (cached.modulus() != modulus) cached = PrimeField(modulus);
    return cached;
}

void require_same_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus != b.modulus)
        throw std::invalid_argument("PrimeFieldElement: modulus mismatch");
}

}  // namespace

PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
    require_same_modulus(a, b);
    return {ctx_for(a.modulus).add(a.value, b.value), a.modulus};
}

PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
    require_same_modulus(a, b);
    return {ctx_for(a.modulus).sub(a.value, b.value), a.modulus};
}

PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
    require_same_modulus(a, b);
    return {ctx_for(a.modulus).mul(a.value, b.value), a.modulus};
}

PrimeFieldElement operator-(PrimeFieldElement a) {
    return {ctx_for(a.modulus).neg(a.value), a.modulus};
}

PrimeFieldElement inverse(PrimeFieldElement a) {
    return {ctx_for(a.modulus).inv(a.value), a.modulus};
}

}  // namespace nw
