#include "nw/hankel.hpp"

namespace nw {

HankelMatrix HankelMatrix::build(const BiSequence& seq, const PrimeField& f, std::int64_t m,
                                 int n, int p) {
    if (n < 0 || p < n) throw std::invalid_argument("HankelMatrix: need 0 <= n <= p");
    HankelMatrix h;
    h.m = m;
    h.rows = n;
    h.cols = p;
    h.modulus = f.modulus();
    h.entries.resize(static_cast<std::size_t>(n) * p);
    if (n == 0) return h;
    // one pass over the anti-diagonal index i+j
    std::vector<std::uint64_t> diag(static_cast<std::size_t>(n + p - 1));
    for (int d = 0; d < n + p - 1; ++d) diag[static_cast<std::size_t>(d)] = f.from_int(seq.at(m + d));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j)
            h.entries[static_cast<std::size_t>(i) * p + j] = diag[static_cast<std::size_t>(i + j)];
    return h;
}

std::uint64_t det_oracle(std::vector<std::uint64_t> a, int n, const PrimeField& f) {
    if (n == 0) return 1;
    auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<std::size_t>(i) * n + j]; };
    std::uint64_t det = 1;
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            negate = !negate;
        }
        std::uint64_t pv = at(col, col);
        det = f.mul(det, pv);
        std::uint64_t pv_inv = f.inv(pv);
        for (int r = col + 1; r < n; ++r) {
            std::uint64_t factor = f.mul(at(r, col), pv_inv);
            if (factor == 0) continue;
            at(r, col) = 0;
            for (int j = col + 1; j < n; ++j)
                at(r, j) = f.sub(at(r, j), f.mul(factor, at(col, j)));
        }
    }
    return negate ? f.neg(det) : det;
}

std::uint64_t det_oracle(const HankelMatrix& mat) {
    if (mat.rows != mat.cols) throw std::invalid_argument("det_oracle: matrix not square");
    return det_oracle(mat.entries, mat.rows, PrimeField(mat.modulus));
}

BigInt det_oracle_int(std::vector<BigInt> a, int n) {
    if (n == 0) return 1;
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
    bool negate = false;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                at(i, j) = num / prev;  // exact by the Bareiss identity
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    BigInt det = at(n - 1, n - 1);
    return negate ? -det : det;
}

namespace {

BiSequence base_sequence(DetKind kind, const BiSequence& seq) {
    switch (kind) {
        case DetKind::H: return seq;
        case DetKind::F: return BiSequence::star(seq);
        case DetKind::G: return BiSequence::doublestar(seq);
    }
    throw std::logic_error("unreachable");
}

BiSequence base_sequence(ApproxKind kind, const BiSequence& seq) {
    switch (kind) {
        case ApproxKind::S: return seq;
        case ApproxKind::R: return BiSequence::star(seq);
        case ApproxKind::V: return BiSequence::doublestar(seq);
    }
    throw std::logic_error("unreachable");
}

// epsilon(n) = ((-1)^{n-1}, ..., -1, 1); entry i is (-1)^{n-1-i}
std::uint64_t epsilon_entry(const PrimeField& f, int n, int i) {
    return ((n - 1 - i) % 2 == 0) ? 1 : f.from_int(-1);
}

// Determinant of the square matrix whose scalar rows are given (N-1 rows of
// width N) and whose last row is (1, t, ..., t^{nm-1}, 0, ..., 0), expanded
// along that last row into N minors.
Poly poly_row_det(const std::vector<std::uint64_t>& scalar_rows, int N, int monomial_count,
                  const PrimeField& f) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(monomial_count), 0);
    std::vector<std::uint64_t> minor(static_cast<std::size_t>(N - 1) * (N - 1));
    for (int s = 0; s < monomial_count; ++s) {
        for (int i = 0; i < N - 1; ++i) {
            int out = 0;
            for (int j = 0; j < N; ++j) {
                if (j == s) continue;
                minor[static_cast<std::size_t>(i) * (N - 1) + out++] =
                    scalar_rows[static_cast<std::size_t>(i) * N + j];
            }
        }
        std::uint64_t d = det_oracle(minor, N - 1, f);
        std::uint64_t signed_d = ((N - 1 + s) % 2 == 0) ? d : f.neg(d);
        coeffs[static_cast<std::size_t>(s)] = static_cast<std::int64_t>(signed_d);
    }
    return Poly(f, coeffs);
}

}  // namespace

std::uint64_t hankel_value(DetKind kind, const BiSequence& seq, const PrimeField& f,
                           std::int64_t m, int n) {
    if (n < 0) throw std::invalid_argument("hankel_value: n must be >= 0");
    if (n == 0) return 1 % f.modulus();
    BiSequence base = base_sequence(kind, seq);
    return det_oracle(HankelMatrix::build(base, f, m, n, n));
}

BigInt hankel_value_int(DetKind kind, const BiSequence& seq, std::int64_t m, int n) {
    if (n < 0) throw std::invalid_argument("hankel_value_int: n must be >= 0");
    if (n == 0) return 1;
    BiSequence base = base_sequence(kind, seq);
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = base.at(m + i + j);
    return det_oracle_int(std::move(a), n);
}

Poly poly_approx(ApproxKind kind, const BiSequence& seq, const PrimeField& f, std::int64_t m,
                 int n) {
    if (n < 0) throw std::invalid_argument("poly_approx: n must be >= 0");
    if (n == 0) return Poly::one(f);
    BiSequence base = base_sequence(kind, seq);
    HankelMatrix h = HankelMatrix::build(base, f, m, n, n + 1);
    return poly_row_det(h.entries, n + 1, n + 1, f);
}

std::uint64_t bordered_F(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n) {
    if (n < 0) throw std::invalid_argument("bordered_F: n must be >= 0");
    int N = n + 1;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(N) * N, 0);
    HankelMatrix h = HankelMatrix::build(seq, f, m, n, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < N; ++j) a[static_cast<std::size_t>(i) * N + j] = h.at(i, j);
    for (int j = 0; j < N; ++j)
        a[static_cast<std::size_t>(n) * N + j] = epsilon_entry(f, n + 1, j);
    return det_oracle(std::move(a), N, f);
}

std::uint64_t bordered_G(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n) {
    if (n < 0) throw std::invalid_argument("bordered_G: n must be >= 0");
    int N = n + 2;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(N) * N, 0);
    HankelMatrix h = HankelMatrix::build(seq, f, m, n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(i) * N + j] = h.at(i, j);
        a[static_cast<std::size_t>(i) * N + (n + 1)] = epsilon_entry(f, n + 1, i);
    }
    for (int j = 0; j <= n; ++j)
        a[static_cast<std::size_t>(n + 1) * N + j] = epsilon_entry(f, n + 1, j);
    return f.neg(det_oracle(std::move(a), N, f));
}

Poly bordered_R(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n) {
    if (n < 0) throw std::invalid_argument("bordered_R: n must be >= 0");
    int N = n + 2;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(N - 1) * N, 0);
    HankelMatrix h = HankelMatrix::build(seq, f, m, n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) rows[static_cast<std::size_t>(i) * N + j] = h.at(i, j);
        rows[static_cast<std::size_t>(i) * N + (n + 1)] = epsilon_entry(f, n + 1, i);
    }
    return -poly_row_det(rows, N, n + 1, f);
}

Poly bordered_V_raw_det(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n) {
    if (n < 0) throw std::invalid_argument("bordered_V: n must be >= 0");
    int N = n + 3;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(N - 1) * N, 0);
    HankelMatrix h = HankelMatrix::build(seq, f, m, n + 1, n + 2);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n + 1; ++j) rows[static_cast<std::size_t>(i) * N + j] = h.at(i, j);
        rows[static_cast<std::size_t>(i) * N + (n + 2)] = epsilon_entry(f, n + 1, i);
    }
    for (int j = 0; j <= n + 1; ++j)
        rows[static_cast<std::size_t>(n + 1) * N + j] = epsilon_entry(f, n + 2, j);
    return poly_row_det(rows, N, n + 2, f);
}

Poly bordered_V(const BiSequence& seq, const PrimeField& f, std::int64_t m, int n) {
    Poly w = bordered_V_raw_det(seq, f, m, n);
    Poly t_plus_1(f, {1, 1});
    auto [q, r] = poly_divmod(-w, t_plus_1);
    if (!r.is_zero())
        throw std::domain_error("bordered_V: raw determinant not divisible by t+1");
    return q;
}

}  // namespace nw
