#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monoirr/modular.hpp"
#include "monoirr/monomial.hpp"

namespace monoirr {

/// plus: m = -l mod k, evaluated at lm + 2. minus: m = l mod k, at lm - 2.
enum class FamilyCase { plus, minus };

const char* to_string(FamilyCase c) noexcept;

struct FamilyParams {
    std::uint64_t k = 0;
    std::uint64_t m = 0;
    std::uint64_t l = 0;
    FamilyCase sign_case = FamilyCase::plus;

    std::uint64_t N() const noexcept { return k * m; }
    /// lm + 2 or lm - 2, reduced mod N.
    std::uint64_t point() const noexcept;
};

/// Throws InvalidArgument unless k, m >= 2, l^2 = 1 mod k, the case's
/// congruence holds and N fits the modulus cap.
void require_admissible(const FamilyParams& p);
bool admissible(const FamilyParams& p) noexcept;

/// K_r = c1 lm + c0 for r = 0..23.
struct LinearInLm {
    std::int64_t c1;
    std::int64_t c0;
};

const std::array<LinearInLm, 24>& closed_form_table(FamilyCase c);

/// K_n at the family point from the table entry r = n mod period plus the
/// correction period q (lm + 1) (plus case) or (-1)^{n+1} period q (lm - 1)
/// (minus case), q = n / period. period is 6, 12 or 24.
Residue closed_form_K(const FamilyParams& p, std::uint64_t n, unsigned period = 24);

/// The explicit reduction of N = 2m or N = km, k in {3, 4, 6, 8, 12, 24}.
struct FamilyReport {
    std::uint64_t N = 0;
    /// k = 2 for the 2m family; l = 1 there.
    FamilyParams params;
    std::uint64_t point = 0;
    std::size_t predicted_h = 0;
    std::size_t predicted_part_size = 0;
    /// Part built from the family's prediction; `defect` is empty iff it replays.
    ReductionCertificate certificate;
    std::string defect;
    /// What the generic certificate search reports at the same point.
    MonomialReport search;
};

/// Picks the family of N: 2m with m odd >= 3 and 3 not dividing m first,
/// then km with the smallest listed k whose cofactor m is odd >= 5 and
/// prime to 3. Throws InvalidArgument when no family applies.
FamilyReport family_certificate(std::uint64_t N);
FamilyReport family_certificate(std::uint64_t k, std::uint64_t m);

struct ClosedFormMismatch {
    std::string kind;  // "value" or "size"
    FamilyParams params;
    std::uint64_t n = 0;
    unsigned period = 0;
    std::uint64_t expected = 0;
    std::uint64_t got = 0;
};

struct ClosedFormAudit {
    std::uint64_t value_checks = 0;
    std::uint64_t size_checks = 0;
    std::vector<ClosedFormMismatch> mismatches;
};

/// Compares closed_form_K (periods 6, 12, 24) with the recurrence for every
/// admissible (k, m, l, case), k <= k_max, m <= m_max, n <= 48; and checks
/// minimal size 6m at the family point for k >= 3, m odd, 3 not dividing m.
ClosedFormAudit verify_closed_forms(std::uint64_t k_max, std::uint64_t m_max, unsigned jobs = 1);

}  // namespace monoirr
