#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "nw/hankel.hpp"
#include "nw/laurent.hpp"
#include "nw/sequence.hpp"

namespace nw {

struct ConvergentItem {
    int h = 0;
    Poly partial;  // A_h
    Poly num;      // P_h
    Poly den;      // Q_h
    int q = 0;     // deg Q_h, the normal order reached at step h

    ConvergentItem(Poly a, Poly p, Poly qd, int idx)
        : h(idx), partial(std::move(a)), num(std::move(p)), den(std::move(qd)), q(den.degree()) {}
};

/// Convergents of a fractional Laurent truncation, computed by the Euclidean
/// algorithm on (t^K, sum gamma_k t^{K-k}). Only items with 2*deg Q < K are
/// kept; those are exactly the convergents of the underlying series.
struct ConvergentSequence {
    std::int64_t m = 0;
    int precision_used = 0;
    int valid_prefix = 0;  // == items.size(); items beyond the guard are discarded
    std::vector<ConvergentItem> items;
};

ConvergentSequence cf_expand(const Laurent& g);
ConvergentSequence cf_expand(const BiSequence& seq, const PrimeField& f, std::int64_t m, int K);

/// Rescale each item so that the leading coefficient of Q_h equals H(m, q_h),
/// making Q_h equal to the polynomial approximant S(m, q_h; t).
void normalize_convergents(ConvergentSequence& cs, const BiSequence& seq, const PrimeField& f);

/// Degrees of convergent denominators up to N; equals {n <= N : H(m,n) != 0}
/// (0 is always a normal order).
std::set<int> normal_orders(const BiSequence& seq, const PrimeField& f, std::int64_t m, int N);

/// -deg Q_{h+1}; requires item h+1 to be within the valid prefix.
int approx_error_exp(const ConvergentSequence& cs, int h);

enum class LittlewoodMode { fast, slow };

struct LittlewoodResult {
    int min_exp = 0;
    Poly witness;
    long long candidates_checked = 0;
};

/// Minimum over nonzero Q with deg Q <= D of
///   deg Q - v_p(Q) * deg p - (first nonzero index of <Q*gamma>),
/// i.e. the base-2 exponent of |Q| |Q|_p |<Q gamma>|. Slow mode enumerates
/// every nonzero polynomial; fast mode restricts to convergent denominators
/// of the p-shifted series times powers of p.
LittlewoodResult brute_force_littlewood(const Laurent& gamma, const Poly& p, int D,
                                        LittlewoodMode mode);

}  // namespace nw
