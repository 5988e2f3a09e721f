#include "nw/wall.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace nw {

std::pair<int, std::int64_t> iota(std::int64_t m, int n) {
    if (n < 1) throw std::invalid_argument("iota: n must be >= 1");
    return {n, m + n};
}

std::pair<std::int64_t, int> iota_inv(int j, std::int64_t k) {
    if (j < 1) throw std::invalid_argument("iota_inv: j must be >= 1");
    return {k - j, j};
}

WallRegion::WallRegion(BiSequence seq, PrimeField f, int J, int k0, int k1)
    : seq_(std::move(seq)), f_(f), J_(J), k0_(k0), k1_(k1) {
    if (J < 1 || k0 > k1) throw std::invalid_argument("WallRegion: invalid bounds");
    std::size_t cells = static_cast<std::size_t>(J) * static_cast<std::size_t>(k1 - k0 + 1);
    vals_.assign(cells, 0);
    src_.assign(cells, CellSource::outside);
}

namespace {

bool cell_in_domain(const BiSequence& seq, int j, std::int64_t k) {
    return seq.domain_min() <= k - j && k + j - 2 <= seq.domain_max();
}

std::uint64_t oracle_cell(const BiSequence& seq, const PrimeField& f, int j, std::int64_t k) {
    return det_oracle(HankelMatrix::build(seq, f, k - j, j, j));
}

}  // namespace

WallRegion generate(const BiSequence& seq, const PrimeField& f, int J, int k0, int k1,
                    WallStrategy strategy) {
    WallRegion region(seq, f, J, k0, k1);

    if (strategy == WallStrategy::oracle) {
        for (int j = 1; j <= J; ++j) {
            for (int k = k0; k <= k1; ++k) {
                if (!cell_in_domain(seq, j, k)) continue;
                if (j == 1) {
                    region.set_cell(j, k, f.from_int(seq.at(k - 1)), CellSource::first_row);
                } else {
                    region.set_cell(j, k, oracle_cell(seq, f, j, k), CellSource::oracle);
                }
            }
        }
        return region;
    }

    // Hybrid: fill a pyramid of scratch rows wider than the region so that the
    // cross rule never starves at the column edges. Row j spans
    // [k0-(J-j), k1+(J-j)]; the rule reads rows j-1 and j-2 one column wider.
    struct Row {
        std::int64_t lo = 0;
        std::vector<std::uint64_t> val;
        std::vector<unsigned char> defined;
        std::vector<CellSource> src;
    };
    std::vector<Row> rows(static_cast<std::size_t>(J) + 1);
    for (int j = 0; j <= J; ++j) {
        Row& r = rows[static_cast<std::size_t>(j)];
        r.lo = static_cast<std::int64_t>(k0) - (J - j);
        std::size_t width = static_cast<std::size_t>(k1 - k0 + 1) + 2 * static_cast<std::size_t>(J - j);
        r.val.assign(width, 0);
        r.defined.assign(width, 0);
        r.src.assign(width, CellSource::outside);
    }
    auto row_at = [&](int j, std::int64_t k) -> std::size_t {
        return static_cast<std::size_t>(k - rows[static_cast<std::size_t>(j)].lo);
    };

    // virtual row j = 0: the empty determinant is 1 regardless of the sequence
    for (std::size_t i = 0; i < rows[0].val.size(); ++i) {
        rows[0].val[i] = 1 % f.modulus();
        rows[0].defined[i] = 1;
        rows[0].src[i] = CellSource::virtual_row;
    }
    {
        Row& r1 = rows[1];
        for (std::size_t i = 0; i < r1.val.size(); ++i) {
            std::int64_t k = r1.lo + static_cast<std::int64_t>(i);
            if (!cell_in_domain(seq, 1, k)) continue;
            r1.val[i] = f.from_int(seq.at(k - 1));
            r1.defined[i] = 1;
            r1.src[i] = CellSource::first_row;
        }
    }
    for (int j = 2; j <= J; ++j) {
        Row& cur = rows[static_cast<std::size_t>(j)];
        const Row& up = rows[static_cast<std::size_t>(j - 1)];
        const Row& up2 = rows[static_cast<std::size_t>(j - 2)];
        for (std::size_t i = 0; i < cur.val.size(); ++i) {
            std::int64_t k = cur.lo + static_cast<std::int64_t>(i);
            if (!cell_in_domain(seq, j, k)) continue;
            std::uint64_t denom = up2.val[row_at(j - 2, k)];
            if (denom != 0) {
                std::uint64_t left = up.val[row_at(j - 1, k - 1)];
                std::uint64_t right = up.val[row_at(j - 1, k + 1)];
                std::uint64_t mid = up.val[row_at(j - 1, k)];
                std::uint64_t num = f.sub(f.mul(left, right), f.mul(mid, mid));
                cur.val[i] = f.div(num, denom);
                cur.src[i] = CellSource::cross_rule;
            } else {
                cur.val[i] = oracle_cell(seq, f, j, k);
                cur.src[i] = CellSource::oracle;
            }
            cur.defined[i] = 1;
        }
    }
    for (int j = 1; j <= J; ++j) {
        const Row& r = rows[static_cast<std::size_t>(j)];
        for (int k = k0; k <= k1; ++k) {
            std::size_t i = row_at(j, k);
            if (r.defined[i]) region.set_cell(j, k, r.val[i], r.src[i]);
        }
    }
    return region;
}

std::vector<Window> scan_windows(const WallRegion& region) {
    int J = region.rows();
    int k0 = region.col_min(), k1 = region.col_max();
    int width = k1 - k0 + 1;
    std::vector<unsigned char> visited(static_cast<std::size_t>(J) * width, 0);
    auto vis = [&](int j, int k) -> unsigned char& {
        return visited[static_cast<std::size_t>(j - 1) * width + (k - k0)];
    };

    std::vector<Window> out;
    for (int j0 = 1; j0 <= J; ++j0) {
        for (int kc0 = k0; kc0 <= k1; ++kc0) {
            if (vis(j0, kc0) || !region.is_zero_cell(j0, kc0)) continue;
            // flood-fill the 4-connected zero component
            std::deque<std::pair<int, int>> queue{{j0, kc0}};
            vis(j0, kc0) = 1;
            int jmin = j0, jmax = j0, kmin = kc0, kmax = kc0;
            std::size_t count = 0;
            while (!queue.empty()) {
                auto [j, k] = queue.front();
                queue.pop_front();
                ++count;
                jmin = std::min(jmin, j);
                jmax = std::max(jmax, j);
                kmin = std::min(kmin, k);
                kmax = std::max(kmax, k);
                constexpr int dj[4] = {1, -1, 0, 0};
                constexpr int dk[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    int nj = j + dj[d], nk = k + dk[d];
                    if (!region.in_bounds(nj, nk) || vis(nj, nk)) continue;
                    if (!region.is_zero_cell(nj, nk)) continue;
                    vis(nj, nk) = 1;
                    queue.emplace_back(nj, nk);
                }
            }
            bool truncated = (jmax == J) || (kmin == k0) || (kmax == k1);
            // undefined cells in or next to the bounding box also leave the
            // true extent unknown (row 0 above the wall is virtual ones)
            for (int j = jmin - 1; j <= jmax + 1 && !truncated; ++j) {
                for (int k = kmin - 1; k <= kmax + 1 && !truncated; ++k) {
                    if (j < 1 || !region.in_bounds(j, k)) continue;
                    if (!region.known(j, k)) truncated = true;
                }
            }
            if (truncated) {
                out.push_back({jmin, kmin, std::max(jmax - jmin, kmax - kmin) + 1, true});
                continue;
            }
            int side = jmax - jmin + 1;
            bool square = (kmax - kmin + 1 == side) &&
                          count == static_cast<std::size_t>(side) * static_cast<std::size_t>(side);
            if (square) {
                for (int j = jmin; j <= jmax && square; ++j)
                    for (int k = kmin; k <= kmax && square; ++k)
                        if (!region.is_zero_cell(j, k)) square = false;
            }
            if (!square) {
                std::ostringstream os;
                os << "scan_windows: interior zero component at (" << jmin << "," << kmin
                   << ") is not an exact square";
                throw WallIntegrityError(os.str());
            }
            out.push_back({jmin, kmin, side, false});
        }
    }
    std::sort(out.begin(), out.end(), [](const Window& a, const Window& b) {
        return std::pair(a.j_corner, a.k_corner) < std::pair(b.j_corner, b.k_corner);
    });
    return out;
}

int infimum_from_wall(const WallRegion& region, bool restrict_m_ge_1) {
    int J = region.rows();
    int k0 = region.col_min(), k1 = region.col_max();
    int longest = 0;
    for (std::int64_t m = k0 - J; m <= k1 - 1; ++m) {
        if (restrict_m_ge_1 && m < 1) continue;
        int j_lo = static_cast<int>(std::max<std::int64_t>(1, k0 - m));
        int j_hi = static_cast<int>(std::min<std::int64_t>(J, k1 - m));
        bool prev_ok = (j_lo == 1);  // H(m,0) = 1 bounds a run starting at n = 1
        int run = 0;
        bool run_bounded = false;
        for (int j = j_lo; j <= j_hi; ++j) {
            int k = static_cast<int>(m + j);
            if (!region.known(j, k)) {
                run = 0;
                prev_ok = false;
                continue;
            }
            if (region.value(j, k) == 0) {
                if (run == 0) run_bounded = prev_ok;
                ++run;
            } else {
                if (run > 0 && run_bounded) longest = std::max(longest, run);
                run = 0;
                prev_ok = true;
            }
        }
        // a run still open at the bottom of the region has unknown extent
    }
    return -(longest + 1);
}

WindowConvergent window_convergent(const WallRegion& region, const Window& w) {
    if (w.truncated) throw std::invalid_argument("window_convergent: truncated window");
    if (w.j_corner < 2)
        throw std::invalid_argument("window_convergent: corner row must be >= 2");
    std::int64_t m = w.m();
    int n = w.n();
    int rho = w.size;
    const PrimeField& f = region.field();
    const BiSequence& seq = region.sequence();
    int K = 2 * (n + rho + 2) + 2;

    ConvergentSequence cs = cf_expand(seq, f, m, K);
    const ConvergentItem* item = nullptr;
    const ConvergentItem* next = nullptr;
    for (std::size_t i = 0; i < cs.items.size(); ++i) {
        if (cs.items[i].q == n) {
            item = &cs.items[i];
            if (i + 1 < cs.items.size()) next = &cs.items[i + 1];
            break;
        }
        if (cs.items[i].q > n) break;
    }
    if (!item)
        throw WallIntegrityError("window_convergent: n(W) is not a normal order of Gamma_m");

    std::uint64_t target = hankel_value(DetKind::H, seq, f, m, n);
    if (target == 0)
        throw WallIntegrityError("window_convergent: H(m, n(W)) vanishes at a window corner");
    std::uint64_t c = f.mul(target, f.inv(item->den.leading()));
    Poly q = item->den.scaled(c);
    Poly p = item->num.scaled(c);

    if (!next || next->q != n + rho + 1)
        throw WallIntegrityError("window_convergent: next normal order is not q + rho + 1");
    Laurent gamma = series_slice(seq, f, m, K);
    SeriesParts parts = frac_and_poly_part(mul(q, gamma));
    if (!(parts.poly == p))
        throw WallIntegrityError("window_convergent: P is not the polynomial part of Q*Gamma");
    NormExponent ne = norm_exp(parts.frac);
    if (!(ne.is_finite() && ne.exp == -(n + rho + 1)))
        throw WallIntegrityError("window_convergent: |Q Gamma - P| != 2^{-(q+rho+1)}");
    if (q.coeff(0) == 0) throw WallIntegrityError("window_convergent: t divides Q");
    std::uint64_t gm1 = f.from_int(seq.at(m - 1));
    if ((p + q.scaled(gm1)).coeff(0) == 0)
        throw WallIntegrityError("window_convergent: t divides P + gamma_{m-1} Q");
    return {std::move(p), std::move(q), -(n + rho + 1)};
}

WindowConvergent frame_convergents(const WallRegion& region, const Window& w, FrameSide side,
                                   int s) {
    if (s < 0 || s > w.size) throw std::invalid_argument("frame_convergents: s outside [0, rho]");
    WindowConvergent base = window_convergent(region, w);
    std::int64_t m = w.m();
    int n = w.n();
    const PrimeField& f = region.field();
    const BiSequence& seq = region.sequence();

    Poly p(f), q(f);
    std::int64_t target_m;
    int target_order;
    std::vector<std::int64_t> sum_coeffs;  // coefficient of t^{r-1} at position r-1
    if (side == FrameSide::left) {
        for (int r = 1; r <= s; ++r) sum_coeffs.push_back(seq.at(m - r));
        Poly sum(f, sum_coeffs);
        p = base.num + base.den * sum;
        q = base.den.shifted(s);
        target_m = m - s;
        target_order = n + s;
    } else {
        for (int r = 1; r <= s; ++r) sum_coeffs.push_back(seq.at(m + s - r));
        Poly sum(f, sum_coeffs);
        p = base.num.shifted(s) - base.den * sum;
        q = base.den;
        target_m = m + s;
        target_order = n;
    }

    int K = 2 * (n + s + w.size + 2) + 2;
    ConvergentSequence cs = cf_expand(seq, f, target_m, K);
    const ConvergentItem* item = nullptr;
    for (const auto& it : cs.items) {
        if (it.q == target_order) {
            item = &it;
            break;
        }
        if (it.q > target_order) break;
    }
    if (!item)
        throw WallIntegrityError("frame_convergents: target order is not a normal order");
    if (!(p * item->den == q * item->num))
        throw WallIntegrityError("frame_convergents: formula disagrees with cf_expand");

    Laurent gamma = series_slice(seq, f, target_m, K);
    NormExponent ne = norm_exp(frac_and_poly_part(mul(q, gamma)).frac);
    if (!ne.is_finite())
        throw WallIntegrityError("frame_convergents: error norm indeterminate");
    return {std::move(p), std::move(q), ne.exp};
}

InducementChain trace_inducement(const WallRegion& region, const Window& seed, int max_depth) {
    InducementChain chain;
    const PrimeField& f = region.field();
    std::vector<Window> windows = scan_windows(region);
    auto find_window = [&](int jc, int kc) -> const Window* {
        for (const auto& win : windows)
            if (win.j_corner == jc && win.k_corner == kc) return &win;
        return nullptr;
    };

    Poly t_plus_1(f, {1, 1});
    Poly t_sq = Poly::monomial(f, 2);
    Poly t_sq_plus_1(f, {1, 0, 1});

    Window cur = seed;
    Poly q_pred = window_convergent(region, seed).den.monic();
    chain.links.push_back({cur, cur.size, q_pred, true});

    for (int depth = 0; depth < max_depth; ++depth) {
        int child_jc, child_kc, child_size;
        Poly child_q(f);
        if (divides(t_plus_1, q_pred)) {
            child_jc = 2 * cur.j_corner - 1;  // j(W') = 2 j(W)
            child_kc = 2 * cur.k_corner - 1;
            child_size = 2 * cur.size + 1;
            child_q = q_pred.composed(t_sq);
        } else if (cur.size >= 3) {
            child_jc = 2 * cur.j_corner + 1;  // j(W') = 2 (j(W) + 1)
            child_kc = 2 * cur.k_corner + 1;
            child_size = 2 * cur.size - 3;
            child_q = t_sq_plus_1 * q_pred.composed(t_sq);
        } else {
            chain.stopped = InducementChain::Stop::no_child;
            return chain;
        }
        bool inside = child_jc >= 2 && child_jc + child_size <= region.rows() &&
                      child_kc - 1 >= region.col_min() && child_kc + child_size <= region.col_max();
        if (!inside) {
            chain.stopped = InducementChain::Stop::out_of_region;
            return chain;
        }
        const Window* found = find_window(child_jc, child_kc);
        bool ok = found && !found->truncated && found->size == child_size;
        if (ok) ok = (window_convergent(region, *found).den.monic() == child_q);
        Window child = found ? *found : Window{child_jc, child_kc, child_size, false};
        chain.links.push_back({child, child_size, child_q, ok});
        if (!ok)
            throw WallIntegrityError("trace_inducement: predicted window not observed in region");
        cur = child;
        q_pred = std::move(child_q);
    }
    chain.stopped = InducementChain::Stop::depth_reached;
    return chain;
}

std::vector<T2m1Violation> scan_t2_minus_1(const BiSequence& seq, const PrimeField& f,
                                           std::int64_t m_lo, std::int64_t m_hi, int deg_max) {
    if (deg_max < 1) throw std::invalid_argument("scan_t2_minus_1: deg_max must be >= 1");
    Poly t2m1(f, {-1, 0, 1});
    std::vector<T2m1Violation> out;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        ConvergentSequence cs = cf_expand(seq, f, m, 2 * deg_max + 2);
        for (const auto& item : cs.items) {
            if (item.h == 0 || item.q > deg_max) continue;
            if (divides(t2m1, item.den)) out.push_back({m, item.h, item.q, item.den});
        }
    }
    return out;
}

VerificationReport check_obstruction(const WallRegion& region) {
    if (region.modulus() % 4 != 3)
        throw std::invalid_argument("check_obstruction: requires a modulus = 3 (mod 4)");
    const PrimeField& f = region.field();
    const BiSequence& seq = region.sequence();
    VerificationReport report;
    report.suite = "obstruction";
    report.params = {{"modulus", std::to_string(region.modulus())}};

    for (int j = 2; j <= region.rows(); j += 2) {
        for (int k = region.col_min(); k <= region.col_max(); ++k) {
            if ((k % 2) != 0) continue;
            if (!region.is_zero_cell(j, k)) continue;
            std::int64_t m = (static_cast<std::int64_t>(k) - j) / 2;
            int n = j / 2;
            std::uint64_t hmn = hankel_value(DetKind::H, seq, f, m, n);
            report.check(hmn == 0, {"H(2m,2n)=0 => H(m,n)=0", region.modulus(), m, n,
                                    std::to_string(hmn), "0", "cell (" + std::to_string(j) + "," +
                                    std::to_string(k) + ")"});
            std::uint64_t gmn = hankel_value(DetKind::G, seq, f, m, n - 1);
            report.check(gmn == 0, {"H(2m,2n)=0 => G(m,n-1)=0", region.modulus(), m, n,
                                    std::to_string(gmn), "0", "cell (" + std::to_string(j) + "," +
                                    std::to_string(k) + ")"});
            // 3x3 zero square centered at the cell, when fully in the region
            if (j - 1 >= 1 && j + 1 <= region.rows() && k - 1 >= region.col_min() &&
                k + 1 <= region.col_max()) {
                bool all_zero = true;
                for (int dj = -1; dj <= 1; ++dj)
                    for (int dk = -1; dk <= 1; ++dk)
                        if (!region.is_zero_cell(j + dj, k + dk)) all_zero = false;
                report.check(all_zero, {"3x3 square centered at even-even zero", region.modulus(),
                                        m, n, "nonzero neighbour", "all zero",
                                        "cell (" + std::to_string(j) + "," + std::to_string(k) +
                                        ")"});
            }
        }
    }
    return report;
}

}  // namespace nw
