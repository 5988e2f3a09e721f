#pragma once

#include <cstdint>
#include <vector>

#include "nw/report.hpp"
#include "nw/wall.hpp"

namespace nw {

/// Identities (A)-(D): each polynomial approximant at doubled indices equals a
/// three-term combination of H, F, G and the approximants S, R, V evaluated at
/// t^2. Checked coefficientwise over each modulus, for the paperfolding
/// sequence.
VerificationReport verify_doubling_recurrences(const std::vector<std::uint64_t>& moduli,
                                               std::int64_t m_lo, std::int64_t m_hi, int n_max);

/// Identities (W)-(Z): Hankel determinants at doubled indices in terms of H,
/// F, G. With `exact_integers` the determinants are evaluated over Z with
/// arbitrary precision; otherwise modulo each given modulus.
VerificationReport verify_hankel_doubling(const std::vector<std::uint64_t>& moduli,
                                          std::int64_t m_lo, std::int64_t m_hi, int n_max,
                                          bool exact_integers);

/// Approximant/convergent correspondence: endpoint coefficients of S, the
/// scalar-multiple relation between S and a convergent denominator, normal
/// orders as nonvanishing Hankel determinants with the exact approximation
/// error, and the four vanishing determinants when S is identically zero.
VerificationReport verify_approximant_convergents(const std::vector<std::uint64_t>& moduli,
                                                  std::int64_t m_lo, std::int64_t m_hi, int n_max);

/// Functional equations of the paperfolding series: the index-doubling
/// identity with the rational correction t/(1+t^2), and the one-step shift
/// Gamma_m = t Gamma_{m-1} - gamma_{m-1}, both as truncations to precision K.
VerificationReport verify_functional_equations(const std::vector<std::uint64_t>& moduli,
                                               std::int64_t k_lo, std::int64_t k_hi, int K);

/// Square-window geometry: interior zero components are exact squares; for
/// moduli = 3 (mod 4) interior sizes are odd and at most 3 and every
/// even-even zero cell is the center of a 3x3 zero square.
VerificationReport verify_window_geometry(const WallRegion& region);

/// Frame formulas for the left and top edges of every interior window, and
/// the round trip recovering each window's corner and size from its
/// convergent's degree and approximation error alone.
VerificationReport verify_frame_and_sufficiency(const WallRegion& region);

}  // namespace nw
