#include "nw/verify.hpp"

#include <sstream>

#include "nw/cf.hpp"
#include "nw/hankel.hpp"

namespace nw {

namespace {

std::string int_str(const BigInt& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

bool odd(std::int64_t v) { return ((v % 2) + 2) % 2 == 1; }

}  // namespace

VerificationReport verify_doubling_recurrences(const std::vector<std::uint64_t>& moduli,
                                               std::int64_t m_lo, std::int64_t m_hi, int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_doubling_recurrences: n_max must be >= 2");
    VerificationReport report;
    report.suite = "doubling-recurrences";
    report.params = {{"m_lo", std::to_string(m_lo)},
                     {"m_hi", std::to_string(m_hi)},
                     {"n_max", std::to_string(n_max)}};
    BiSequence seq = BiSequence::paperfolding();
    for (std::uint64_t l : moduli) {
        PrimeField f(l);
        Poly t1 = Poly::monomial(f, 1);
        Poly t_sq = Poly::monomial(f, 2);
        Poly t2p1(f, {1, 0, 1});
        auto S = [&](std::int64_t mm, int nn) { return poly_approx(ApproxKind::S, seq, f, mm, nn); };
        auto R = [&](std::int64_t mm, int nn) { return poly_approx(ApproxKind::R, seq, f, mm, nn); };
        auto V = [&](std::int64_t mm, int nn) { return poly_approx(ApproxKind::V, seq, f, mm, nn); };
        auto H = [&](std::int64_t mm, int nn) { return hankel_value(DetKind::H, seq, f, mm, nn); };
        auto F = [&](std::int64_t mm, int nn) { return hankel_value(DetKind::F, seq, f, mm, nn); };
        auto G = [&](std::int64_t mm, int nn) { return hankel_value(DetKind::G, seq, f, mm, nn); };
        auto record = [&](const char* identity, std::int64_t m, int n, const Poly& lhs,
                          const Poly& rhs) {
            report.check(lhs == rhs, {identity, l, m, n, lhs.to_string(), rhs.to_string(), ""});
        };
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            std::uint64_t sign_m = odd(m) ? f.from_int(-1) : 1;          // (-1)^m
            std::uint64_t sign_m1 = odd(m + 1) ? f.from_int(-1) : 1;     // (-1)^{m+1}
            for (int n = 1; n <= n_max; ++n) {
                std::uint64_t sign_n = odd(n) ? f.from_int(-1) : 1;      // (-1)^n
                {
                    Poly lhs = S(2 * m + 1, 2 * n);
                    Poly rhs = S(m, n).composed(t_sq).scaled(H(m + 1, n)) -
                               (t2p1 * V(m, n - 1).composed(t_sq)).scaled(G(m + 1, n - 1)) +
                               (t1 * R(m + 1, n - 1).composed(t_sq)).scaled(f.mul(sign_m1, F(m, n)));
                    record("A", m, n, lhs, rhs);
                }
                if (n >= 2) {
                    Poly lhs = S(2 * m + 1, 2 * n - 1);
                    Poly rhs = R(m, n - 1).composed(t_sq).scaled(f.mul(sign_m, F(m + 1, n - 1))) +
                               (t1 * S(m + 1, n - 1).composed(t_sq)).scaled(H(m, n)) -
                               (t1 * t2p1 * V(m + 1, n - 2).composed(t_sq)).scaled(G(m, n - 1));
                    record("B", m, n, lhs, rhs);
                }
                {
                    Poly lhs = S(2 * m, 2 * n);
                    Poly inner = (t1 * R(m, n - 1).composed(t_sq)).scaled(f.mul(sign_m, F(m, n))) +
                                 S(m, n).composed(t_sq).scaled(H(m, n)) +
                                 (t2p1 * V(m, n - 1).composed(t_sq)).scaled(G(m, n - 1));
                    record("C", m, n, lhs, inner.scaled(sign_n));
                }
                if (n >= 2) {
                    Poly lhs = S(2 * m, 2 * n - 1);
                    Poly inner =
                        (t1 * R(m, n - 1).composed(t_sq)).scaled(f.mul(sign_m1, F(m, n - 1))) +
                        S(m, n - 1).composed(t_sq).scaled(H(m, n)) +
                        (t2p1 * V(m, n - 2).composed(t_sq)).scaled(G(m, n - 1));
                    record("D", m, n, lhs, inner.scaled(sign_n));
                }
            }
        }
    }
    return report;
}

VerificationReport verify_hankel_doubling(const std::vector<std::uint64_t>& moduli,
                                          std::int64_t m_lo, std::int64_t m_hi, int n_max,
                                          bool exact_integers) {
    if (n_max < 2) throw std::invalid_argument("verify_hankel_doubling: n_max must be >= 2");
    VerificationReport report;
    report.suite = exact_integers ? "hankel-doubling-integer" : "hankel-doubling";
    report.params = {{"m_lo", std::to_string(m_lo)},
                     {"m_hi", std::to_string(m_hi)},
                     {"n_max", std::to_string(n_max)}};
    BiSequence seq = BiSequence::paperfolding();

    if (exact_integers) {
        auto H = [&](std::int64_t mm, int nn) { return hankel_value_int(DetKind::H, seq, mm, nn); };
        auto F = [&](std::int64_t mm, int nn) { return hankel_value_int(DetKind::F, seq, mm, nn); };
        auto G = [&](std::int64_t mm, int nn) { return hankel_value_int(DetKind::G, seq, mm, nn); };
        auto record = [&](const char* identity, std::int64_t m, int n, const BigInt& lhs,
                          const BigInt& rhs) {
            report.check(lhs == rhs, {identity, 0, m, n, int_str(lhs), int_str(rhs), "over Z"});
        };
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            for (int n = 1; n <= n_max; ++n) {
                BigInt sn = odd(n) ? -1 : 1;
                record("W", m, n, H(2 * m + 1, 2 * n),
                       H(m, n) * H(m + 1, n) - G(m, n - 1) * G(m + 1, n - 1));
                if (n >= 2)
                    record("X", m, n, H(2 * m + 1, 2 * n - 1),
                           H(m, n) * H(m + 1, n - 1) - G(m, n - 1) * G(m + 1, n - 2));
                record("Y", m, n, H(2 * m, 2 * n),
                       sn * (H(m, n) * H(m, n) + G(m, n - 1) * G(m, n - 1)));
                if (n >= 2) {
                    BigInt snm = odd(static_cast<std::int64_t>(n) + m + 1) ? -1 : 1;
                    record("Z", m, n, H(2 * m, 2 * n - 1),
                           snm * F(m, n - 1) * F(m, n - 1));
                }
            }
        }
        return report;
    }

    for (std::uint64_t l : moduli) {
        PrimeField f(l);
        auto H = [&](std::int64_t mm, int nn) { return hankel_value(DetKind::H, seq, f, mm, nn); };
        auto F = [&](std::int64_t mm, int nn) { return hankel_value(DetKind::F, seq, f, mm, nn); };
        auto G = [&](std::int64_t mm, int nn) { return hankel_value(DetKind::G, seq, f, mm, nn); };
        auto record = [&](const char* identity, std::int64_t m, int n, std::uint64_t lhs,
                          std::uint64_t rhs) {
            report.check(lhs == rhs,
                         {identity, l, m, n, std::to_string(lhs), std::to_string(rhs), ""});
        };
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            for (int n = 1; n <= n_max; ++n) {
                std::uint64_t sn = odd(n) ? f.from_int(-1) : 1;
                record("W", m, n, H(2 * m + 1, 2 * n),
                       f.sub(f.mul(H(m, n), H(m + 1, n)), f.mul(G(m, n - 1), G(m + 1, n - 1))));
                if (n >= 2)
                    record("X", m, n, H(2 * m + 1, 2 * n - 1),
                           f.sub(f.mul(H(m, n), H(m + 1, n - 1)),
                                 f.mul(G(m, n - 1), G(m + 1, n - 2))));
                record("Y", m, n, H(2 * m, 2 * n),
                       f.mul(sn, f.add(f.mul(H(m, n), H(m, n)), f.mul(G(m, n - 1), G(m, n - 1)))));
                if (n >= 2) {
                    std::uint64_t snm = odd(static_cast<std::int64_t>(n) + m + 1) ? f.from_int(-1) : 1;
                    record("Z", m, n, H(2 * m, 2 * n - 1),
                           f.mul(snm, f.mul(F(m, n - 1), F(m, n - 1))));
                }
            }
        }
    }
    return report;
}

VerificationReport verify_approximant_convergents(const std::vector<std::uint64_t>& moduli,
                                                  std::int64_t m_lo, std::int64_t m_hi,
                                                  int n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_approximant_convergents: n_max must be >= 1");
    VerificationReport report;
    report.suite = "approximant-convergents";
    report.params = {{"m_lo", std::to_string(m_lo)},
                     {"m_hi", std::to_string(m_hi)},
                     {"n_max", std::to_string(n_max)}};
    BiSequence seq = BiSequence::paperfolding();
    int K = 2 * (n_max + 2) + 2;
    for (std::uint64_t l : moduli) {
        PrimeField f(l);
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            ConvergentSequence cs = cf_expand(seq, f, m, K);
            Laurent gamma = series_slice(seq, f, m, K);

            for (int n = 1; n <= n_max; ++n) {
                Poly s = poly_approx(ApproxKind::S, seq, f, m, n);
                std::uint64_t h_mn = hankel_value(DetKind::H, seq, f, m, n);
                std::uint64_t h_m1n = hankel_value(DetKind::H, seq, f, m + 1, n);
                std::uint64_t want0 = odd(n) ? f.neg(h_m1n) : h_m1n;
                report.check(s.coeff(n) == h_mn,
                             {"S leading coefficient", l, m, n, std::to_string(s.coeff(n)),
                              std::to_string(h_mn), ""});
                report.check(s.coeff(0) == want0,
                             {"S constant term", l, m, n, std::to_string(s.coeff(0)),
                              std::to_string(want0), ""});

                if (!s.is_zero()) {
                    // the convergent with the largest order <= n is a scalar multiple of S
                    const ConvergentItem* item = nullptr;
                    std::size_t idx = 0;
                    for (std::size_t i = 0; i < cs.items.size(); ++i) {
                        if (cs.items[i].q <= n) {
                            item = &cs.items[i];
                            idx = i;
                        } else {
                            break;
                        }
                    }
                    bool ok = item != nullptr && item->q == s.degree();
                    if (ok) {
                        std::uint64_t c = f.div(item->den.leading(), s.leading());
                        ok = (s.scaled(c) == item->den);
                    }
                    report.check(ok, {"S scalar multiple of a convergent denominator", l, m, n,
                                      s.to_string(), item ? item->den.to_string() : "(none)", ""});
                    bool error_ok =
                        (idx + 1 >= cs.items.size()) || cs.items[idx + 1].q >= n + 1;
                    report.check(error_ok, {"approximation error at most -(n+1)", l, m, n,
                                            std::to_string(idx + 1 < cs.items.size()
                                                               ? -cs.items[idx + 1].q
                                                               : 0),
                                            "<= -(n+1)", ""});
                } else {
                    bool four_zero = hankel_value(DetKind::H, seq, f, m, n) == 0 &&
                                     hankel_value(DetKind::H, seq, f, m + 1, n) == 0 &&
                                     hankel_value(DetKind::H, seq, f, m - 1, n + 1) == 0 &&
                                     hankel_value(DetKind::H, seq, f, m, n + 1) == 0;
                    report.check(four_zero, {"deficient rank forces four vanishing determinants", l,
                                             m, n, "S = 0", "H(m,n)=H(m+1,n)=H(m-1,n+1)=H(m,n+1)=0",
                                             ""});
                }
            }

            // normal orders = nonvanishing Hankel determinants
            {
                std::set<int> orders;
                for (const auto& item : cs.items)
                    if (item.q <= n_max) orders.insert(item.q);
                std::set<int> nonzero;
                for (int n = 0; n <= n_max; ++n)
                    if (hankel_value(DetKind::H, seq, f, m, n) != 0) nonzero.insert(n);
                std::ostringstream lhs, rhs;
                for (int v : orders) lhs << v << " ";
                for (int v : nonzero) rhs << v << " ";
                report.check(orders == nonzero,
                             {"normal orders = nonvanishing H", l, m, n_max, lhs.str(), rhs.str(),
                              ""});
            }

            // |Q_h Gamma - P_h| = 2^{-q_{h+1}} for interior items
            for (std::size_t i = 0; i + 1 < cs.items.size(); ++i) {
                const auto& item = cs.items[i];
                NormExponent ne = norm_exp(frac_and_poly_part(mul(item.den, gamma)).frac);
                bool ok = ne.is_finite() && ne.exp == -cs.items[i + 1].q;
                report.check(ok, {"approximation error equals next normal order", l, m, item.q,
                                  ne.is_finite() ? std::to_string(ne.exp) : "indeterminate",
                                  std::to_string(-cs.items[i + 1].q), ""});
            }
        }
    }
    return report;
}

VerificationReport verify_functional_equations(const std::vector<std::uint64_t>& moduli,
                                               std::int64_t k_lo, std::int64_t k_hi, int K) {
    if (K < 8) throw std::invalid_argument("verify_functional_equations: K must be >= 8");
    VerificationReport report;
    report.suite = "functional-equations";
    report.params = {{"k_lo", std::to_string(k_lo)},
                     {"k_hi", std::to_string(k_hi)},
                     {"precision", std::to_string(K)}};
    BiSequence seq = BiSequence::paperfolding();
    for (std::uint64_t l : moduli) {
        PrimeField f(l);
        // t/(1+t^2) = t^{-1} - t^{-3} + t^{-5} - ...
        std::vector<std::uint64_t> tc(static_cast<std::size_t>(K), 0);
        for (int kk = 1; kk <= K; kk += 2)
            tc[static_cast<std::size_t>(kk - 1)] = (((kk - 1) / 2) % 2 == 0) ? 1 : f.from_int(-1);
        Laurent correction(f, 1, K, std::move(tc));
        Poly t1 = Poly::monomial(f, 1);

        for (std::int64_t k = k_lo; k <= k_hi; ++k) {
            Laurent lhs = series_slice(seq, f, 2 * k, K);
            Laurent half = series_slice(seq, f, k, K / 2 + 1).substituted_t_squared();
            Laurent rhs = half + (odd(k) ? -correction : correction);
            report.check(lhs.agrees_with(rhs, K),
                         {"index-doubling with rational correction", l, k, K, "", "", ""});

            Laurent full = mul(t1, series_slice(seq, f, k - 1, K + 1));
            SeriesParts parts = frac_and_poly_part(full);
            Poly expected_poly(f, {seq.at(k - 1)});
            bool shift_ok = parts.poly == expected_poly &&
                            parts.frac.agrees_with(series_slice(seq, f, k, K), K);
            report.check(shift_ok, {"one-step shift", l, k, K, "", "", ""});
        }
    }
    return report;
}

VerificationReport verify_window_geometry(const WallRegion& region) {
    VerificationReport report;
    report.suite = "window-geometry";
    report.params = {{"modulus", std::to_string(region.modulus())},
                     {"rows", std::to_string(region.rows())},
                     {"cols", std::to_string(region.col_min()) + ":" +
                                  std::to_string(region.col_max())}};
    std::vector<Window> windows;
    try {
        windows = scan_windows(region);
    } catch (const WallIntegrityError& e) {
        report.check(false,
                     {"interior zero components are exact squares", region.modulus(), 0, 0,
                      e.what(), "square", ""});
        return report;
    }
    report.check(true, {"interior zero components are exact squares", region.modulus(), 0, 0, "",
                        "", ""});

    bool strong = region.modulus() % 4 == 3;
    int max_size = 0;
    for (const auto& w : windows) {
        if (w.truncated) continue;
        max_size = std::max(max_size, w.size);
        if (strong) {
            report.check(w.size % 2 == 1, {"interior window size odd", region.modulus(), w.m(),
                                           w.n(), std::to_string(w.size), "odd", ""});
            report.check(w.size <= 3, {"interior window size at most 3", region.modulus(), w.m(),
                                       w.n(), std::to_string(w.size), "<= 3", ""});
        }
    }
    report.params.emplace_back("max_interior_size", std::to_string(max_size));

    if (strong) {
        for (int j = 2; j <= region.rows(); j += 2) {
            for (int k = region.col_min(); k <= region.col_max(); ++k) {
                if ((k % 2) != 0 || !region.is_zero_cell(j, k)) continue;
                if (j - 1 < 1 || j + 1 > region.rows() || k - 1 < region.col_min() ||
                    k + 1 > region.col_max())
                    continue;
                bool all_zero = true;
                for (int dj = -1; dj <= 1; ++dj)
                    for (int dk = -1; dk <= 1; ++dk)
                        if (!region.is_zero_cell(j + dj, k + dk)) all_zero = false;
                report.check(all_zero,
                             {"even-even zero cell centers a 3x3 zero square", region.modulus(),
                              (static_cast<std::int64_t>(k) - j) / 2, j / 2, "", "all zero", ""});
            }
        }
    }
    return report;
}

VerificationReport verify_frame_and_sufficiency(const WallRegion& region) {
    VerificationReport report;
    report.suite = "frame-and-sufficiency";
    report.params = {{"modulus", std::to_string(region.modulus())},
                     {"rows", std::to_string(region.rows())},
                     {"cols", std::to_string(region.col_min()) + ":" +
                                  std::to_string(region.col_max())}};
    std::vector<Window> windows = scan_windows(region);
    bool any_interior = false;
    for (const auto& w : windows) {
        if (w.truncated) continue;
        any_interior = true;
        std::optional<WindowConvergent> base;
        try {
            base = window_convergent(region, w);
        } catch (const WallIntegrityError& e) {
            report.check(false, {"window convergent properties", region.modulus(), w.m(), w.n(),
                                 e.what(), "", ""});
            continue;
        }
        report.check(true, {"window convergent properties", region.modulus(), w.m(), w.n(), "",
                            "", ""});

        for (int s = 0; s <= w.size; ++s) {
            for (FrameSide side : {FrameSide::left, FrameSide::top}) {
                const char* name = (side == FrameSide::left) ? "left frame formula"
                                                             : "top frame formula";
                try {
                    frame_convergents(region, w, side, s);
                    report.check(true, {name, region.modulus(), w.m(), s, "", "", ""});
                } catch (const WallIntegrityError& e) {
                    report.check(false, {name, region.modulus(), w.m(), s, e.what(), "", ""});
                }
            }
        }

        // round trip: corner and size from the convergent alone
        int q = base->den.degree();
        int rho_hat = -base->error_exp - q - 1;
        std::int64_t corner_k = w.m() + q + 1;
        bool ok = (q + 1 == w.j_corner) && (corner_k == w.k_corner) && (rho_hat == w.size);
        report.check(ok, {"corner and size recovered from the convergent", region.modulus(), w.m(),
                          w.n(),
                          "(" + std::to_string(q + 1) + "," + std::to_string(corner_k) +
                              ") size " + std::to_string(rho_hat),
                          "(" + std::to_string(w.j_corner) + "," + std::to_string(w.k_corner) +
                              ") size " + std::to_string(w.size),
                          ""});
    }
    if (!any_interior)
        throw std::invalid_argument("verify_frame_and_sufficiency: region has no interior window");
    return report;
}

}  // namespace nw
