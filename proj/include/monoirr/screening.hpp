#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoirr/budget.hpp"
#include "monoirr/polynomial.hpp"

namespace monoirr {

enum class ScreenRule { quadratic5, quadratic8, poly_cubic, poly_quintic, poly_sextic, poly_nonic, generic, none };

/// "quadratic-5", "poly-cubic", "generic", ...
const char* to_string(ScreenRule r) noexcept;

/// For N = m p with m >= 3 coprime to p, the lift l of (s mod m, x mod p)
/// satisfies K_n(l, ..., l) = eps mod N, which yields a part of size n + 2,
/// while no size up to n + 2 closes the minimal l-monomial solution.
struct GenericWitness {
    unsigned n = 0;
    int eps = 1;
    int s = 1;
    std::uint64_t x = 0;

    bool operator==(const GenericWitness&) const = default;
};

struct ScreenReport {
    std::uint64_t p = 0;
    ScreenRule rule = ScreenRule::none;
    std::optional<GenericWitness> witness;
    /// All roots mod p of the rule's polynomial (empty for generic and none).
    std::vector<std::uint64_t> roots;
};

struct ScreenOptions {
    bool generic = true;
    unsigned n_max = 30;
};

/// The polynomial behind a fixed rule, and the (n, eps, s) its roots plug into.
struct FixedRule {
    ScreenRule rule;
    IntPolynomial poly;
    unsigned n;
    int eps;
    int s;
};

/// quadratic-5, quadratic-8, cubic, quintic, sextic, nonic, in precedence order.
const std::vector<FixedRule>& fixed_rules();

/// K_n(s, ..., s) as an integer for s = +-1 (periods 6 and 3).
int continuant_at_unit(int s, unsigned n) noexcept;

/// Empty when w satisfies every witness condition at p; otherwise the first
/// failing condition.
std::string witness_defect(std::uint64_t p, const GenericWitness& w);

/// Throws InvalidArgument unless p is a prime >= 5.
ScreenReport screen_prime(std::uint64_t p, const ScreenOptions& options = {});

/// Smallest n (n = 2, 5 mod 6 skipped), then s = -1 before s = +1, then
/// smallest x. Throws InvalidArgument unless p is a prime >= 5 and n_max >= 3.
std::optional<GenericWitness> generic_witness_search(std::uint64_t p, unsigned n_max = 30);

/// Over N = m p: the lifted l has minimal monomial size > n + 2 and a
/// reduction certificate with part size <= n + 2.
bool validate_witness(std::uint64_t p, const GenericWitness& w, std::uint64_t m, const WorkBudget& budget = {});

/// Reports for every prime in [lo, hi] with lo >= 5, ascending.
std::vector<ScreenReport> screen_range(std::uint64_t lo, std::uint64_t hi, const ScreenOptions& options = {},
                                       unsigned jobs = 1);

/// Primes 5 <= p <= bound that no fixed rule screens.
std::vector<std::uint64_t> omega_unscreened(std::uint64_t bound);

struct DensityReport {
    std::uint64_t x = 0;
    std::uint64_t primes = 0;
    std::uint64_t class5 = 0;   // p = +-1 mod 5
    std::uint64_t class8 = 0;   // p = +-1 mod 8
    std::uint64_t class40 = 0;  // both, i.e. p = +-1, +-9 mod 40
    std::uint64_t favorable = 0;
    /// favorable / primes in lowest terms.
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
    /// value() rounded to six decimals.
    std::string decimal() const;
};

inline constexpr std::uint64_t kDensitySieveLimit = 400'000'000;

/// Throws InvalidArgument for x < 10 and UnsupportedSize above `sieve_limit`.
DensityReport density_D(std::uint64_t x, std::uint64_t sieve_limit = kDensitySieveLimit);

}  // namespace monoirr
