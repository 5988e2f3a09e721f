#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nw/laurent.hpp"

namespace nw {

/// Paperfolding value at any index: lambda_{4k} = 1, lambda_{4k+2} = -1,
/// lambda_{2k+1} = lambda_k, with lambda_{-1} = 1 fixing the negative side.
int paperfolding_at(std::int64_t k) noexcept;

/// Level-s sequence: insert 1,-1,2,-2,...,s,-s periodically before each
/// element of the sequence itself. Defined for k >= 0 only.
std::int64_t level_paperfolding_at(int s, std::int64_t k);

/// (a, v0, b, v1, a, v2, ...) of length 2*len(v).
std::vector<std::int64_t> interleave_fold(std::pair<std::int64_t, std::int64_t> sigma,
                                          std::span<const std::int64_t> v);

/// Doubly-infinite integer sequence provider. Values are signed integers,
/// reduced into a prime field at the point of use, so one provider serves
/// every modulus. Copies share the underlying implementation.
class BiSequence {
public:
    static constexpr std::int64_t kMinIndex = std::numeric_limits<std::int64_t>::min() / 4;
    static constexpr std::int64_t kMaxIndex = std::numeric_limits<std::int64_t>::max() / 4;

    static BiSequence paperfolding();
    static BiSequence level(int s);
    static BiSequence star(BiSequence inner);        // gamma_k + gamma_{k+1}
    static BiSequence doublestar(BiSequence inner);  // gamma_k + 2 gamma_{k+1} + gamma_{k+2}
    static BiSequence from_file(const std::filesystem::path& path);

    std::int64_t at(std::int64_t k) const;  // throws std::out_of_range outside the domain
    std::int64_t domain_min() const noexcept;
    std::int64_t domain_max() const noexcept;
    bool covers(std::int64_t lo, std::int64_t hi) const noexcept {
        return domain_min() <= lo && hi <= domain_max();
    }
    std::string describe() const;

    /// Dense copy of [lo, hi]; indices outside the domain are rejected.
    std::vector<std::int64_t> materialize(std::int64_t lo, std::int64_t hi) const;

    struct Impl;

private:
    explicit BiSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Gamma_m(t) = sum_{k=1..K} gamma_{k+m-1} t^{-k} with precision K.
Laurent series_slice(const BiSequence& seq, const PrimeField& f, std::int64_t m, int K);

}  // namespace nw
