#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monoirr/budget.hpp"
#include "monoirr/modular.hpp"
#include "monoirr/solutions.hpp"

namespace monoirr {

/// Least h >= 1 with A_k^h = sign * Id, A_k = (k -1; 1 0).
struct MonomialSize {
    std::size_t h = 0;
    int sign = 1;
};

/// A part (a, k, ..., k, a) of size part_size that splits the minimal
/// k-monomial solution of size h; the other part is
/// (k - a, k, ..., k, k - a) of size h + 2 - part_size.
struct ReductionCertificate {
    std::uint64_t N = 0;
    std::uint64_t k = 0;
    std::size_t h = 0;
    int sign = 1;
    std::size_t part_size = 0;
    std::uint64_t junction_a = 0;

    std::uint64_t complementary_junction() const noexcept { return (k + N - junction_a) % N; }
    std::size_t complementary_size() const noexcept { return h + 2 - part_size; }

    /// (a, k, ..., k, a). Throws InvalidArgument on an inconsistent record.
    SolutionTuple left() const;
    /// (k - a, k, ..., k, k - a).
    SolutionTuple right() const;

    bool operator==(const ReductionCertificate&) const = default;
};

struct MonomialReport {
    std::uint64_t N = 0;
    std::uint64_t k = 0;
    std::size_t h = 0;
    int sign = 1;
    bool irreducible = true;
    std::optional<ReductionCertificate> certificate;
};

struct ClassificationVerdict {
    std::uint64_t N = 0;
    bool monomially_irreducible = true;
    /// One report per k = 1..N-1, ascending.
    std::vector<MonomialReport> witnesses;
};

/// Iterates powers of A_k up to |SL_2(Z/NZ)|. k = 0 gives h = 2.
/// Throws InternalError if the cap is reached without hitting +-Id.
MonomialSize minimal_monomial_size(Modulus modulus, std::uint64_t k);

/// Roots of X(X - k) mod N by a scan of every residue, ascending.
std::vector<std::uint64_t> junction_roots(Modulus modulus, std::uint64_t k);

/// First (part_size, a) in ascending part size, then ascending a, such that
/// (a, k, ..., k, a) is a solution and 3 <= part_size <= h - 1.
///
/// For a fixed part size l = n + 2 the tuple is a solution exactly when
/// K_n(k, ..., k) = e is +-1 and a = e K_{n-1}, so each l admits at most one
/// junction and the scan over roots of X(X - k) collapses to one continuant
/// pass. Throws InvalidArgument when h < 3.
std::optional<ReductionCertificate> find_reduction_certificate(Modulus modulus, std::uint64_t k);

MonomialReport monomial_report(Modulus modulus, std::uint64_t k);

/// Empty string when the certificate replays; otherwise the first failed check.
std::string certificate_defect(const ReductionCertificate& c);

inline bool certificate_valid(const ReductionCertificate& c) { return certificate_defect(c).empty(); }

/// Per-N cost estimate used against the work budget (one step per k and
/// power, with h bounded by N on average).
std::uint64_t classification_cost(std::uint64_t N) noexcept;

/// Reports for every k in [1, N-1]. Throws UnsupportedSize when the cost
/// estimate exceeds the budget.
ClassificationVerdict is_monomially_irreducible(std::uint64_t N, const WorkBudget& budget = {});

struct ClassifyOptions {
    unsigned jobs = 1;
    WorkBudget budget;
    /// Drop the per-k reports after deciding the verdict.
    bool keep_witnesses = true;
};

/// One slot of a range classification: either a verdict or a gap.
struct RangeEntry {
    std::uint64_t N = 0;
    std::optional<ClassificationVerdict> verdict;
    std::string gap;
};

/// Calls `sink` once per N in [lo, hi], ascending, for any job count.
void classify_range(std::uint64_t lo, std::uint64_t hi, const ClassifyOptions& options,
                    const std::function<void(RangeEntry&&)>& sink);

std::vector<RangeEntry> classify_range(std::uint64_t lo, std::uint64_t hi, const ClassifyOptions& options = {});

}  // namespace monoirr
