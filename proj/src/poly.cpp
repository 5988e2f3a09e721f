#include "nw/poly.hpp"

#include <algorithm>
#include <sstream>

namespace nw {

Poly::Poly(const PrimeField& f, std::span<const std::int64_t> coeffs_low_first) : mod_(f.modulus()) {
    c_.reserve(coeffs_low_first.size());
    for (std::int64_t v : coeffs_low_first) c_.push_back(f.from_int(v));
    trim();
}

Poly::Poly(const PrimeField& f, std::initializer_list<std::int64_t> coeffs_low_first)
    : Poly(f, std::span<const std::int64_t>(coeffs_low_first.begin(), coeffs_low_first.size())) {}

Poly Poly::monomial(const PrimeField& f, int e, std::int64_t c) {
    if (e < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    Poly p(f);
    std::uint64_t r = f.from_int(c);
    if (r != 0) {
        p.c_.assign(static_cast<std::size_t>(e) + 1, 0);
        p.c_.back() = r;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {
void require_same_modulus(const Poly& a, const Poly& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("Poly: modulus mismatch");
}
}  // namespace

Poly Poly::operator+(const Poly& o) const {
    require_same_modulus(*this, o);
    PrimeField f(mod_);
    Poly r(f);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = f.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_modulus(*this, o);
    PrimeField f(mod_);
    Poly r(f);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = f.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_modulus(*this, o);
    PrimeField f(mod_);
    Poly r(f);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f.add(r.c_[i + j], f.mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    PrimeField f(mod_);
    Poly r = *this;
    for (auto& v : r.c_) v = f.neg(v);
    return r;
}

Poly Poly::scaled(std::uint64_t s) const {
    PrimeField f(mod_);
    Poly r(f);
    if (s % mod_ == 0 || is_zero()) return r;
    r.c_ = c_;
    for (auto& v : r.c_) v = f.mul(v, s % mod_);
    return r;
}

Poly Poly::shifted(int s) const {
    if (s < 0) throw std::invalid_argument("Poly::shifted: negative shift");
    if (is_zero()) return *this;
    Poly r{PrimeField(mod_)};
    r.c_.assign(static_cast<std::size_t>(s), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
    PrimeField f(mod_);
    return scaled(f.inv(c_.back()));
}

std::uint64_t Poly::eval(std::uint64_t x) const {
    PrimeField f(mod_);
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x % mod_), c_[i]);
    return acc;
}

Poly Poly::composed(const Poly& inner) const {
    require_same_modulus(*this, inner);
    PrimeField f(mod_);
    Poly acc(f);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * inner;
        if (c_[i] != 0) acc = acc + Poly(f, {static_cast<std::int64_t>(c_[i])});
    }
    return acc;
}

Poly Poly::pow(unsigned e) const {
    PrimeField f(mod_);
    Poly base = *this, res = Poly::one(f);
    while (e > 0) {
        if (e & 1u) res = res * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return res;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        std::uint64_t v = coeff(i);
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || v != 1) os << v;
        if (i >= 1) {
            if (v != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    PrimeField f(a.modulus());
    Poly q(f), r = a;
    int db = b.degree();
    if (a.degree() < db) return {q, r};
    q.c_.assign(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    std::uint64_t inv_lead = f.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
        std::uint64_t cur = r.coeff(i);
        if (cur == 0) continue;
        std::uint64_t factor = f.mul(cur, inv_lead);
        q.c_[static_cast<std::size_t>(i - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            std::size_t idx = static_cast<std::size_t>(i - db + j);
            r.c_[idx] = f.sub(r.c_[idx], f.mul(factor, b.coeff(j)));
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    require_same_modulus(a, b);
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divmod(a, d).second.is_zero();
}

int padic_valuation(const Poly& q, const Poly& p) {
    if (q.is_zero()) throw std::domain_error("padic_valuation: valuation of zero is infinite");
    if (p.degree() < 1) throw std::invalid_argument("padic_valuation: p must be nonconstant");
    int v = 0;
    Poly cur = q;
    while (true) {
        auto [quo, rem] = poly_divmod(cur, p);
        if (!rem.is_zero()) return v;
        ++v;
        cur = std::move(quo);
    }
}

bool is_irreducible_low_degree(const Poly& p, bool* caller_asserted) {
    if (caller_asserted) *caller_asserted = false;
    int d = p.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (d > 3) {
        if (caller_asserted) *caller_asserted = true;
        return true;
    }
    // deg 2 or 3: irreducible iff no root in F_l, i.e. gcd(t^l - t mod p, p) constant.
    PrimeField f(p.modulus());
    Poly t = Poly::monomial(f, 1);
    Poly acc = Poly::one(f), base = poly_divmod(t, p).second;
    std::uint64_t e = f.modulus();
    while (e > 0) {
        if (e & 1ull) acc = poly_divmod(acc * base, p).second;
        e >>= 1ull;
        if (e) base = poly_divmod(base * base, p).second;
    }
    Poly frob = acc - poly_divmod(t, p).second;  // t^l - t (mod p)
    Poly g = poly_gcd(frob, p);
    return g.degree() <= 0;
}

bool poly_canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

}  // namespace nw
