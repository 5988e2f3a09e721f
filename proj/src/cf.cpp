#include "nw/cf.hpp"

#include <iostream>

namespace nw {

ConvergentSequence cf_expand(const Laurent& g) {
    if (g.k_min() < 1) throw std::invalid_argument("cf_expand: input must be fractional");
    int K = g.precision();
    if (K < 2) throw std::invalid_argument("cf_expand: precision too small to emit any convergent");
    PrimeField f(g.modulus());

    // Gamma ~ v / t^K with v = sum_{k=1..K} gamma_k t^{K-k}.
    std::vector<std::int64_t> vc(static_cast<std::size_t>(K), 0);
    for (int k = 1; k <= K; ++k)
        vc[static_cast<std::size_t>(K - k)] = static_cast<std::int64_t>(g.coeff(k));
    Poly v(f, vc);
    Poly u = Poly::monomial(f, K);

    ConvergentSequence cs;
    cs.precision_used = K;
    Poly p_prev2 = Poly::one(f), q_prev2 = Poly::zero(f);  // index -1
    Poly p_prev = Poly::zero(f), q_prev = Poly::one(f);    // index 0: A_0 = 0
    cs.items.emplace_back(Poly::zero(f), p_prev, q_prev, 0);

    int h = 1;
    while (!v.is_zero()) {
        auto [a, r] = poly_divmod(u, v);
        Poly pn = a * p_prev + p_prev2;
        Poly qn = a * q_prev + q_prev2;
        if (2 * qn.degree() >= K) break;  // beyond the validity guard
        cs.items.emplace_back(std::move(a), pn, qn, h);
        p_prev2 = std::move(p_prev);
        q_prev2 = std::move(q_prev);
        p_prev = std::move(pn);
        q_prev = std::move(qn);
        u = std::move(v);
        v = std::move(r);
        ++h;
    }
    cs.valid_prefix = static_cast<int>(cs.items.size());
    return cs;
}

ConvergentSequence cf_expand(const BiSequence& seq, const PrimeField& f, std::int64_t m, int K) {
    ConvergentSequence cs = cf_expand(series_slice(seq, f, m, K));
    cs.m = m;
    return cs;
}

void normalize_convergents(ConvergentSequence& cs, const BiSequence& seq, const PrimeField& f) {
    for (auto& item : cs.items) {
        std::uint64_t target = hankel_value(DetKind::H, seq, f, cs.m, item.q);
        if (target == 0)
            throw std::logic_error(
                "normalize_convergents: H(m, q) = 0 at a normal order (upstream bug)");
        std::uint64_t c = f.mul(target, f.inv(item.den.leading()));
        item.den = item.den.scaled(c);
        item.num = item.num.scaled(c);
    }
}

std::set<int> normal_orders(const BiSequence& seq, const PrimeField& f, std::int64_t m, int N) {
    if (N < 1) throw std::invalid_argument("normal_orders: N must be >= 1");
    ConvergentSequence cs = cf_expand(seq, f, m, 2 * N + 2);
    std::set<int> orders;
    for (const auto& item : cs.items)
        if (item.q <= N) orders.insert(item.q);
    return orders;
}

int approx_error_exp(const ConvergentSequence& cs, int h) {
    if (h < 0 || h + 1 >= static_cast<int>(cs.items.size()))
        throw std::domain_error("approx_error_exp: next convergent not within the valid prefix");
    return -cs.items[static_cast<std::size_t>(h + 1)].q;
}

namespace {

// Exponent of |<Q gamma>|: the first index k >= 1 where sum_j Q_j gamma_{k+j}
// is nonzero, negated. Scans lazily and stops early.
int frac_norm_exp_of_product(const Poly& q, const Laurent& gamma, const PrimeField& f) {
    int dq = q.degree();
    int kmax = gamma.precision() - dq;
    for (int k = 1; k <= kmax; ++k) {
        std::uint64_t acc = 0;
        for (int j = 0; j <= dq; ++j) {
            std::uint64_t qj = q.coeff(j);
            if (qj == 0) continue;
            int idx = k + j;
            if (idx < gamma.k_min()) continue;
            acc = f.add(acc, f.mul(qj, gamma.coeff(idx)));
        }
        if (acc != 0) return -k;
    }
    throw std::domain_error(
        "brute_force_littlewood: fractional norm indeterminate at current precision");
}

struct Best {
    bool set = false;
    int exp = 0;
    Poly witness;

    explicit Best(const PrimeField& f) : witness(f) {}
    void offer(int e, const Poly& q) {
        if (!set || e < exp || (e == exp && poly_canonical_less(q, witness))) {
            set = true;
            exp = e;
            witness = q;
        }
    }
};

}  // namespace

LittlewoodResult brute_force_littlewood(const Laurent& gamma, const Poly& p, int D,
                                        LittlewoodMode mode) {
    if (gamma.modulus() != p.modulus())
        throw std::invalid_argument("brute_force_littlewood: modulus mismatch");
    PrimeField f(gamma.modulus());
    int dp = p.degree();
    if (dp < 1) throw std::invalid_argument("brute_force_littlewood: p must be nonconstant");
    if (D < 0) throw std::invalid_argument("brute_force_littlewood: D must be >= 0");
    bool caller_asserted = false;
    if (!is_irreducible_low_degree(p, &caller_asserted))
        throw std::invalid_argument("brute_force_littlewood: p is reducible over F_l");
    if (caller_asserted)
        std::cerr << "brute_force_littlewood: deg p > 3, irreducibility accepted on caller "
                     "assertion\n";
    if (gamma.precision() < 2 * D + 4 * dp)
        throw std::domain_error("brute_force_littlewood: gamma precision below 2D + 4 deg p");

    auto objective = [&](const Poly& q) {
        int nu = padic_valuation(q, p);
        return q.degree() - nu * dp + frac_norm_exp_of_product(q, gamma, f);
    };

    Best best(f);
    long long checked = 0;

    if (mode == LittlewoodMode::slow) {
        std::uint64_t l = f.modulus();
        for (int d = 0; d <= D; ++d) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
            c.back() = 1;
            while (true) {
                Poly q(f, c);
                best.offer(objective(q), q);
                ++checked;
                // odometer: lowest coefficient fastest, leading stays in [1, l)
                int pos = 0;
                while (pos <= d) {
                    std::int64_t limit = static_cast<std::int64_t>(l) - 1;
                    if (c[static_cast<std::size_t>(pos)] < limit) {
                        ++c[static_cast<std::size_t>(pos)];
                        break;
                    }
                    c[static_cast<std::size_t>(pos)] = (pos == d) ? 1 : 0;
                    ++pos;
                }
                if (pos > d) break;
            }
        }
    } else {
        Poly p_pow = Poly::one(f);
        for (int a = 0; a * dp <= D; ++a) {
            Laurent shifted = a == 0 ? gamma : frac_and_poly_part(mul(p_pow, gamma)).frac;
            ConvergentSequence cs = cf_expand(shifted);
            for (const auto& item : cs.items) {
                if (item.q > D - a * dp) continue;
                Poly q = p_pow * item.den.monic();
                best.offer(objective(q), q);
                ++checked;
            }
            p_pow = p_pow * p;
        }
    }

    if (!best.set) throw std::domain_error("brute_force_littlewood: no candidate evaluated");
    return {best.exp, best.witness, checked};
}

}  // namespace nw
