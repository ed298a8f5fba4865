#pragma once

#include <cstdint>
#include <string>

namespace monoirr {

/// Upper bound on the estimated number of elementary steps (2x2 matrix
/// products, residue evaluations) a single operation may perform.
struct WorkBudget {
    static constexpr std::uint64_t kDefault = 100'000'000;

    std::uint64_t limit = kDefault;

    bool allows(std::uint64_t estimate) const noexcept { return estimate <= limit; }

    /// Throws UnsupportedSize naming `what` when `estimate` exceeds the limit.
    void require(std::uint64_t estimate, const std::string& what) const;
};

/// a * b, saturating at UINT64_MAX.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace monoirr
