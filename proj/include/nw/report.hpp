#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nw {

struct CheckFailure {
    std::string identity;
    std::uint64_t modulus = 0;
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::string lhs;
    std::string rhs;
    std::string context;
};

/// Accumulating pass/fail record for one verification suite. Failures carry
/// enough context to re-run the check in isolation; at most 100 are stored
/// but all are counted.
struct VerificationReport {
    static constexpr std::size_t kMaxStoredFailures = 100;

    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    long long checks_run = 0;
    long long failure_count = 0;
    std::vector<CheckFailure> failures;

    bool passed() const noexcept { return failure_count == 0; }

    void check(bool ok, CheckFailure fail) {
        ++checks_run;
        if (ok) return;
        ++failure_count;
        if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(fail));
    }
};

}  // namespace nw
