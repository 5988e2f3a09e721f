#include "nw/laurent.hpp"

#include <algorithm>

namespace nw {

namespace {
void require_same_modulus(const Laurent& a, const Laurent& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("Laurent: modulus mismatch");
}
}  // namespace

Laurent::Laurent(const PrimeField& f, int k_min, int precision, std::vector<std::uint64_t> coeffs)
    : mod_(f.modulus()), k_min_(k_min), prec_(precision), c_(std::move(coeffs)) {
    if (prec_ < k_min_) throw std::invalid_argument("Laurent: precision below k_min");
    if (c_.size() != static_cast<std::size_t>(prec_ - k_min_ + 1))
        throw std::invalid_argument("Laurent: coefficient count does not match [k_min, precision]");
    for (auto& v : c_) v %= mod_;
}

Laurent Laurent::zero(const PrimeField& f, int precision, int k_min) {
    return Laurent(f, k_min, precision,
                   std::vector<std::uint64_t>(static_cast<std::size_t>(precision - k_min + 1), 0));
}

std::uint64_t Laurent::coeff(int k) const {
    if (k > prec_) throw std::out_of_range("Laurent: coefficient beyond known precision");
    if (k < k_min_) return 0;
    return c_[static_cast<std::size_t>(k - k_min_)];
}

Laurent Laurent::operator+(const Laurent& o) const {
    require_same_modulus(*this, o);
    PrimeField f(mod_);
    int kmin = std::min(k_min_, o.k_min_), prec = std::min(prec_, o.prec_);
    if (prec < kmin) throw std::domain_error("Laurent: sum has no known coefficients");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(prec - kmin + 1));
    for (int k = kmin; k <= prec; ++k)
        c[static_cast<std::size_t>(k - kmin)] = f.add(coeff(k), o.coeff(k));
    return Laurent(f, kmin, prec, std::move(c));
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const {
    PrimeField f(mod_);
    Laurent r = *this;
    for (auto& v : r.c_) v = f.neg(v);
    return r;
}

Laurent Laurent::scaled(std::uint64_t s) const {
    PrimeField f(mod_);
    Laurent r = *this;
    s %= mod_;
    for (auto& v : r.c_) v = f.mul(v, s);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    require_same_modulus(*this, o);
    PrimeField f(mod_);
    // The first unknown coefficient of either factor feeds the product at
    // index (prec+1) + other.k_min, so everything below that stays known.
    int prec = std::min(prec_ + o.k_min_, o.prec_ + k_min_);
    int kmin = k_min_ + o.k_min_;
    if (prec < kmin) throw std::domain_error("Laurent: product has no known coefficients");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(prec - kmin + 1), 0);
    for (int i = k_min_; i <= prec_; ++i) {
        std::uint64_t a = coeff(i);
        if (a == 0) continue;
        int jmax = std::min(o.prec_, prec - i);
        for (int j = o.k_min_; j <= jmax; ++j) {
            std::size_t idx = static_cast<std::size_t>(i + j - kmin);
            c[idx] = f.add(c[idx], f.mul(a, o.coeff(j)));
        }
    }
    return Laurent(f, kmin, prec, std::move(c));
}

Laurent Laurent::truncated_to(int new_precision) const {
    if (new_precision > prec_) throw std::domain_error("Laurent: cannot raise precision");
    if (new_precision < k_min_) throw std::domain_error("Laurent: truncation below k_min");
    std::vector<std::uint64_t> c(c_.begin(), c_.begin() + (new_precision - k_min_ + 1));
    return Laurent(PrimeField(mod_), k_min_, new_precision, std::move(c));
}

Laurent Laurent::substituted_t_squared() const {
    PrimeField f(mod_);
    int kmin = 2 * k_min_;
    int prec = 2 * prec_ + 1;
    std::vector<std::uint64_t> c(static_cast<std::size_t>(prec - kmin + 1), 0);
    for (int k = k_min_; k <= prec_; ++k)
        c[static_cast<std::size_t>(2 * k - kmin)] = coeff(k);
    return Laurent(f, kmin, prec, std::move(c));
}

bool Laurent::agrees_with(const Laurent& o, int up_to_k) const {
    if (mod_ != o.mod_) return false;
    if (up_to_k > prec_ || up_to_k > o.prec_)
        throw std::domain_error("Laurent: comparison beyond known precision");
    for (int k = std::min(k_min_, o.k_min_); k <= up_to_k; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

Laurent mul(const Poly& p, const Laurent& x) {
    if (p.modulus() != x.modulus()) throw std::invalid_argument("mul: modulus mismatch");
    PrimeField f(p.modulus());
    if (p.is_zero()) return Laurent::zero(f, x.precision(), x.k_min());
    int d = p.degree();
    int kmin = x.k_min() - d;
    int prec = x.precision() - d;
    if (prec < kmin) throw std::domain_error("mul: product has no known coefficients");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(prec - kmin + 1), 0);
    // coefficient of t^{-k} in p * x is sum_i p_i * gamma_{k+i}
    for (int k = kmin; k <= prec; ++k) {
        std::uint64_t acc = 0;
        for (int i = 0; i <= d; ++i) {
            std::uint64_t pi = p.coeff(i);
            if (pi == 0) continue;
            int ki = k + i;
            if (ki < x.k_min()) continue;
            acc = f.add(acc, f.mul(pi, x.coeff(ki)));
        }
        c[static_cast<std::size_t>(k - kmin)] = acc;
    }
    return Laurent(f, kmin, prec, std::move(c));
}

NormExponent norm_exp(const Laurent& x) {
    for (int k = x.k_min(); k <= x.precision(); ++k)
        if (x.coeff(k) != 0) return NormExponent::finite(-k);
    return NormExponent::unknown_below(-(x.precision() + 1));
}

NormExponent norm_exp(const Poly& p) {
    if (p.is_zero()) return NormExponent::zero();
    return NormExponent::finite(p.degree());
}

SeriesParts frac_and_poly_part(const Laurent& x) {
    PrimeField f(x.modulus());
    // polynomial part: exponents 0..-k_min when k_min <= 0 (t^i has index -i)
    Poly poly(f);
    if (x.k_min() <= 0) {
        std::vector<std::int64_t> coeffs;
        for (int i = 0; i <= -x.k_min(); ++i)
            coeffs.push_back(static_cast<std::int64_t>(x.coeff(-i)));
        poly = Poly(f, coeffs);
    }
    int kmin = std::max(1, x.k_min());
    if (x.precision() < kmin)
        throw std::domain_error("frac_and_poly_part: no known fractional coefficients");
    std::vector<std::uint64_t> c;
    for (int k = kmin; k <= x.precision(); ++k) c.push_back(x.coeff(k));
    return {std::move(poly), Laurent(f, kmin, x.precision(), std::move(c))};
}

Laurent invert_poly(const Poly& p, int precision) {
    if (p.degree() < 1) throw std::invalid_argument("invert_poly: need deg p >= 1");
    PrimeField f(p.modulus());
    int d = p.degree();
    if (precision < d) throw std::invalid_argument("invert_poly: precision below deg p");
    // Solve p * inv = 1 for inv = sum_{k>=d} c_k t^{-k}, triangular in c.
    std::vector<std::uint64_t> c(static_cast<std::size_t>(precision - d + 1), 0);
    std::uint64_t lead_inv = f.inv(p.leading());
    c[0] = lead_inv;
    for (int r = 1; r <= precision - d; ++r) {
        // coefficient of t^{-r}: sum_{i=0..d} p_i c_{i+r} = 0
        std::uint64_t acc = 0;
        for (int i = 0; i < d; ++i) {
            int k = i + r;  // index of c_{k}, offset k - d in c
            if (k - d < 0 || k - d >= r) continue;
            acc = f.add(acc, f.mul(p.coeff(i), c[static_cast<std::size_t>(k - d)]));
        }
        c[static_cast<std::size_t>(r)] = f.mul(f.neg(acc), lead_inv);
    }
    return Laurent(f, d, precision, std::move(c));
}

Laurent compose_series(const Laurent& g, const Poly& p, int K) {
    if (g.modulus() != p.modulus()) throw std::invalid_argument("compose_series: modulus mismatch");
    if (p.degree() < 1) throw std::invalid_argument("compose_series: need deg p >= 1");
    if (g.k_min() < 1) throw std::invalid_argument("compose_series: input must be fractional");
    PrimeField f(g.modulus());
    int d = p.degree();
    int terms = K / d + 1;  // gamma_k p^{-k} only touches exponents <= -k*d
    int needed = (K + d - 1) / d + 1;
    if (g.precision() < needed)
        throw std::domain_error("compose_series: insufficient input precision");
    Laurent x = invert_poly(p, K);
    // Horner over x: sum_{k=1..terms} gamma_k x^k = x*(g_1 + x*(g_2 + ...))
    auto constant = [&](std::uint64_t v) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(K + 1), 0);
        c[0] = v;
        return Laurent(f, 0, K, std::move(c));
    };
    Laurent acc = constant(g.coeff(terms));
    for (int k = terms - 1; k >= 1; --k) {
        Laurent prod = (acc * x).truncated_to(K);
        acc = prod + constant(g.coeff(k));
    }
    Laurent result = (acc * x).truncated_to(K);
    return frac_and_poly_part(result).frac;
}

}  // namespace nw
