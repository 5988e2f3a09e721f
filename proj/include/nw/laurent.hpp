#pragma once

#include <cstdint>
#include <vector>

#include "nw/poly.hpp"

namespace nw {

/// Norm |x| = 2^exp, reported as the exponent only; 2^exp is never materialized.
/// `unknown_below` covers a truncation whose known coefficients are all zero:
/// the norm is then at most 2^exp with exp = -(precision+1), but not determined.
struct NormExponent {
    enum class Kind { finite, neg_infinity, unknown_below };
    Kind kind = Kind::neg_infinity;
    int exp = 0;

    static NormExponent finite(int e) { return {Kind::finite, e}; }
    static NormExponent zero() { return {Kind::neg_infinity, 0}; }
    static NormExponent unknown_below(int e) { return {Kind::unknown_below, e}; }

    bool is_finite() const noexcept { return kind == Kind::finite; }
    friend bool operator==(const NormExponent&, const NormExponent&) = default;
};

/// Finitely many coefficients of a Laurent series in t^{-1}: gamma_k is the
/// coefficient of t^{-k}, stored for k in [k_min, precision]. Every operation
/// tracks the precision of its result conservatively; reading a coefficient
/// beyond the precision throws.
class Laurent {
public:
    Laurent(const PrimeField& f, int k_min, int precision, std::vector<std::uint64_t> coeffs);
    static Laurent zero(const PrimeField& f, int precision, int k_min = 1);

    std::uint64_t modulus() const noexcept { return mod_; }
    int k_min() const noexcept { return k_min_; }
    int precision() const noexcept { return prec_; }

    /// Coefficient of t^{-k}; zero below k_min, throws above the precision.
    std::uint64_t coeff(int k) const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    Laurent scaled(std::uint64_t s) const;
    Laurent truncated_to(int new_precision) const;

    /// Substitute t -> t^2 (coefficient indices double; odd ones are exactly 0).
    Laurent substituted_t_squared() const;

    bool agrees_with(const Laurent& o, int up_to_k) const;

private:
    std::uint64_t mod_;
    int k_min_;
    int prec_;
    std::vector<std::uint64_t> c_;  // c_[k - k_min_] = coefficient of t^{-k}
};

/// Exact polynomial times truncation; the result loses deg(p) precision.
Laurent mul(const Poly& p, const Laurent& x);

NormExponent norm_exp(const Laurent& x);
NormExponent norm_exp(const Poly& p);

/// Split into the polynomial part (exponents >= 0) and the fractional part
/// (exponents <= -1); x = poly + frac.
struct SeriesParts {
    Poly poly;
    Laurent frac;
};
SeriesParts frac_and_poly_part(const Laurent& x);

/// Truncation of sum_k gamma_k * p(t)^{-k} to precision K, i.e. the input
/// series evaluated in K((p(t)^{-1})). Requires deg p >= 1 and input precision
/// at least ceil(K / deg p) + 1.
Laurent compose_series(const Laurent& g, const Poly& p, int K);

/// Laurent expansion of p(t)^{-1} to the given precision (k_min = deg p).
Laurent invert_poly(const Poly& p, int precision);

}  // namespace nw
