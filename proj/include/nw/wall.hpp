#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nw/cf.hpp"
#include "nw/report.hpp"
#include "nw/sequence.hpp"

namespace nw {

/// Thrown when a generated wall contradicts the square-window geometry or a
/// window convergent fails one of its guaranteed properties; either would
/// indicate a generator bug (or falsify the theory backing the checks).
struct WallIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CellSource : unsigned char { first_row, cross_rule, oracle, virtual_row, outside };

enum class WallStrategy { oracle, hybrid };

/// (m,n) -> (j,k) = (n, m+n); requires n >= 1.
std::pair<int, std::int64_t> iota(std::int64_t m, int n);
/// (j,k) -> (m,n) = (k-j, j); requires j >= 1.
std::pair<std::int64_t, int> iota_inv(int j, std::int64_t k);

/// Rectangular slice of a number wall: rows j in [1,J], columns k in [k0,k1],
/// cell (j,k) = H(k-j, j) mod l. Cells whose Hankel index window leaves the
/// sequence provider's domain are flagged `outside` and hold no value.
class WallRegion {
public:
    WallRegion(BiSequence seq, PrimeField f, int J, int k0, int k1);

    std::uint64_t modulus() const noexcept { return f_.modulus(); }
    const PrimeField& field() const noexcept { return f_; }
    const BiSequence& sequence() const noexcept { return seq_; }
    int rows() const noexcept { return J_; }
    int col_min() const noexcept { return k0_; }
    int col_max() const noexcept { return k1_; }

    bool in_bounds(int j, int k) const noexcept {
        return j >= 1 && j <= J_ && k >= k0_ && k <= k1_;
    }
    bool known(int j, int k) const { return source(j, k) != CellSource::outside; }
    bool is_zero_cell(int j, int k) const { return known(j, k) && value(j, k) == 0; }

    std::uint64_t value(int j, int k) const { return vals_[index(j, k)]; }
    CellSource source(int j, int k) const { return src_[index(j, k)]; }

    void set_cell(int j, int k, std::uint64_t v, CellSource s) {
        vals_[index(j, k)] = v;
        src_[index(j, k)] = s;
    }

private:
    std::size_t index(int j, int k) const {
        if (!in_bounds(j, k)) throw std::out_of_range("WallRegion: cell outside region");
        return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(k1_ - k0_ + 1) +
               static_cast<std::size_t>(k - k0_);
    }

    BiSequence seq_;
    PrimeField f_;
    int J_, k0_, k1_;
    std::vector<std::uint64_t> vals_;
    std::vector<CellSource> src_;
};

WallRegion generate(const BiSequence& seq, const PrimeField& f, int J, int k0, int k1,
                    WallStrategy strategy);

/// A maximal zero component. Interior components are exact squares (checked);
/// components touching the region boundary or undefined cells are flagged
/// truncated and carry their observed extent as `size`.
struct Window {
    int j_corner = 0;
    int k_corner = 0;
    int size = 0;  // 0 encodes an empty window (four nonzero cells)
    bool truncated = false;

    std::int64_t m() const noexcept { return static_cast<std::int64_t>(k_corner) - j_corner; }
    int n() const noexcept { return j_corner - 1; }
};

std::vector<Window> scan_windows(const WallRegion& region);

/// -(k_max + 1) for the largest fully visible run of vanishing H(m, n..n+k-1)
/// in the region (diagonal zero runs; equal to window sizes by the square
/// window geometry). With the flag set, only diagonals with m >= 1 count.
int infimum_from_wall(const WallRegion& region, bool restrict_m_ge_1);

struct WindowConvergent {
    Poly num;
    Poly den;
    int error_exp = 0;  // exponent of |Q Gamma_m - P| = -(q + rho + 1)
};

/// Convergent of Gamma_{m(W)} of degree exactly n(W), normalized so that the
/// leading coefficient of Q is H(m(W), n(W)). Checks the guaranteed
/// properties (error exponent, t does not divide Q nor P + gamma_{m-1} Q).
WindowConvergent window_convergent(const WallRegion& region, const Window& w);

enum class FrameSide { left, top };

/// Convergent attached to the frame entry s steps down the left edge (or
/// right along the top edge) of the window, verified against cf_expand.
WindowConvergent frame_convergents(const WallRegion& region, const Window& w, FrameSide side,
                                   int s);

struct ChainLink {
    Window window;
    int predicted_size = 0;
    Poly predicted_q;
    bool verified = false;
};

struct InducementChain {
    enum class Stop { none, no_child, out_of_region, depth_reached };
    std::vector<ChainLink> links;  // first link is the seed itself
    Stop stopped = Stop::none;
};

/// Iterates the window generation rules from a seed window: if (t+1) | Q the
/// child sits at doubled coordinates with size 2 rho + 1 and Q' = Q(t^2);
/// otherwise, when rho >= 3, at doubled shifted coordinates with size
/// 2 rho - 3 and Q' = (t^2+1) Q(t^2); otherwise the chain stops. Every
/// prediction is checked against the region and against cf_expand.
InducementChain trace_inducement(const WallRegion& region, const Window& seed, int max_depth);

struct T2m1Violation {
    std::int64_t m = 0;
    int h = 0;
    int q = 0;
    Poly den;
};

/// Scans convergent denominators of Gamma_m for divisibility by t^2 - 1.
/// An empty result certifies the divisibility criterion on the given range.
std::vector<T2m1Violation> scan_t2_minus_1(const BiSequence& seq, const PrimeField& f,
                                           std::int64_t m_lo, std::int64_t m_hi, int deg_max);

/// For every vanishing cell H(2m,2n) in the region, asserts H(m,n) = 0 and
/// G(m,n-1) = 0, and that the 3x3 square centered at iota(2m,2n) vanishes.
/// Requires l = 3 (mod 4).
VerificationReport check_obstruction(const WallRegion& region);

}  // namespace nw
