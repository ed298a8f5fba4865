#include "monoirr/screening.hpp"

#include <array>
#include <cstdio>
#include <numeric>
#include <string>

#include "monoirr/errors.hpp"
#include "monoirr/modular.hpp"
#include "monoirr/monomial.hpp"
#include "monoirr/primes.hpp"
#include "parallel.hpp"

namespace monoirr {

namespace {

void require_screenable(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("screening needs a prime p >= 5, got " + std::to_string(p));
}

// K_0(x)..K_count(x) mod p for the constant tuple.
std::vector<std::uint64_t> powers_at(const Modulus& mod, std::uint64_t x, std::size_t count) {
    return monomial_continuants(mod, x, count);
}

bool is_unit_class(const Modulus& mod, std::uint64_t v) { return v == 1 || v == mod.value() - 1; }

struct SideConditions {
    bool x_not_unit;
    std::vector<unsigned> not_unit;  // K_j != +-1
    std::vector<unsigned> not_zero;  // K_j != 0
};

const SideConditions& side_conditions(ScreenRule r) {
    static const SideConditions none{false, {}, {}};
    static const SideConditions cubic{true, {4}, {8}};
    static const SideConditions sextic{true, {4, 10}, {8, 14}};
    static const SideConditions nonic{false, {3, 6, 9, 12, 15, 18, 21}, {}};
    switch (r) {
        case ScreenRule::poly_cubic:
        case ScreenRule::poly_quintic: return cubic;
        case ScreenRule::poly_sextic: return sextic;
        case ScreenRule::poly_nonic: return nonic;
        default: return none;
    }
}

bool side_conditions_hold(const Modulus& mod, ScreenRule r, std::uint64_t x) {
    const SideConditions& sc = side_conditions(r);
    const auto K = powers_at(mod, x, 21);
    if (sc.x_not_unit && is_unit_class(mod, x)) return false;
    for (unsigned j : sc.not_unit) {
        if (is_unit_class(mod, K[j])) return false;
    }
    for (unsigned j : sc.not_zero) {
        if (K[j] == 0) return false;
    }
    return true;
}

bool congruence_applies(ScreenRule r, std::uint64_t p) {
    if (r == ScreenRule::quadratic5) return p == 5 || p % 5 == 1 || p % 5 == 4;
    if (r == ScreenRule::quadratic8) return p % 8 == 1 || p % 8 == 7;
    return true;
}

// Does the candidate (n, s) hold at x given the precomputed K_j(x)?
bool witness_holds(const Modulus& mod, const std::vector<std::uint64_t>& K, unsigned n, int s) {
    const int eps = continuant_at_unit(s, n);
    if (eps == 0 || K[n] != mod.reduce(eps)) return false;
    for (unsigned j = 3; j <= n + 2; j += 3) {
        if (K[j - 1] == 0 && K[j] == mod.reduce(continuant_at_unit(s, j))) return false;
    }
    return true;
}

}  // namespace

const char* to_string(ScreenRule r) noexcept {
    switch (r) {
        case ScreenRule::quadratic5: return "quadratic-5";
        case ScreenRule::quadratic8: return "quadratic-8";
        case ScreenRule::poly_cubic: return "poly-cubic";
        case ScreenRule::poly_quintic: return "poly-quintic";
        case ScreenRule::poly_sextic: return "poly-sextic";
        case ScreenRule::poly_nonic: return "poly-nonic";
        case ScreenRule::generic: return "generic";
        case ScreenRule::none: return "none";
    }
    return "none";
}

const std::vector<FixedRule>& fixed_rules() {
    static const std::vector<FixedRule> rules{
        {ScreenRule::quadratic5, IntPolynomial{-1, -1, 1}, 3, 1, -1},
        {ScreenRule::quadratic8, IntPolynomial{-2, 0, 1}, 4, -1, 1},
        {ScreenRule::poly_cubic, IntPolynomial{1, -2, -1, 1}, 7, -1, -1},
        {ScreenRule::poly_quintic, IntPolynomial{1, 3, -3, -4, 1, 1}, 9, -1, 1},
        {ScreenRule::poly_sextic, IntPolynomial{-1, -3, 6, 4, -5, -1, 1}, 13, -1, -1},
        {ScreenRule::poly_nonic, IntPolynomial{-1, 5, 10, -20, -15, 21, 7, -8, -1, 1}, 19, -1, -1},
    };
    return rules;
}

int continuant_at_unit(int s, unsigned n) noexcept {
    static constexpr std::array<int, 6> at_one{1, 1, 0, -1, -1, 0};
    static constexpr std::array<int, 3> at_minus_one{1, -1, 0};
    return s > 0 ? at_one[n % 6] : at_minus_one[n % 3];
}

std::string witness_defect(std::uint64_t p, const GenericWitness& w) {
    if (p < 5 || !is_prime(p)) return "p is not a prime >= 5";
    if (w.s != 1 && w.s != -1) return "s must be +-1";
    if (w.n < 1 || w.n % 6 == 2 || w.n % 6 == 5) return "n must be >= 1 and not 2, 5 mod 6";
    if (continuant_at_unit(w.s, w.n) != w.eps) return "K_n(s) differs from eps";
    if (w.x >= p) return "x is not a canonical residue";
    const Modulus mod(static_cast<std::int64_t>(p));
    if (is_unit_class(mod, w.x)) return "x is +-1 mod p";
    const auto K = powers_at(mod, w.x, w.n + 2);
    if (K[w.n] != mod.reduce(w.eps)) return "K_n(x) differs from eps mod p";
    for (unsigned j = 3; j <= w.n + 2; j += 3) {
        if (K[j - 1] == 0 && K[j] == mod.reduce(continuant_at_unit(w.s, j))) {
            return "size " + std::to_string(j) + " closes the monomial solution";
        }
    }
    return {};
}

ScreenReport screen_prime(std::uint64_t p, const ScreenOptions& options) {
    require_screenable(p);
    const Modulus mod(static_cast<std::int64_t>(p));
    ScreenReport report;
    report.p = p;
    for (const FixedRule& fr : fixed_rules()) {
        if (!congruence_applies(fr.rule, p)) continue;
        auto roots = poly_roots_mod_p(fr.poly, p);
        for (std::uint64_t x : roots) {
            if (!side_conditions_hold(mod, fr.rule, x)) continue;
            report.rule = fr.rule;
            report.witness = GenericWitness{fr.n, fr.eps, fr.s, x};
            report.roots = std::move(roots);
            return report;
        }
    }
    if (options.generic) {
        if (auto w = generic_witness_search(p, options.n_max)) {
            report.rule = ScreenRule::generic;
            report.witness = w;
        }
    }
    return report;
}

std::optional<GenericWitness> generic_witness_search(std::uint64_t p, unsigned n_max) {
    require_screenable(p);
    if (n_max < 3) throw InvalidArgument("n_max must be at least 3");
    const Modulus mod(static_cast<std::int64_t>(p));
    std::optional<GenericWitness> best;
    // The search key is (n, s = -1 first, x); x ascends in the outer loop so
    // only a strictly smaller (n, s) can displace an earlier hit.
    for (std::uint64_t x = 0; x < p; ++x) {
        if (is_unit_class(mod, x)) continue;
        const auto K = powers_at(mod, x, n_max + 2);
        for (unsigned n = 1; n <= n_max; ++n) {
            if (n % 6 == 2 || n % 6 == 5) continue;
            if (best && n > best->n) break;
            bool found = false;
            for (int s : {-1, 1}) {
                if (best && n == best->n && (best->s == -1 || s == 1)) break;
                if (witness_holds(mod, K, n, s)) {
                    best = GenericWitness{n, continuant_at_unit(s, n), s, x};
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return best;
}

bool validate_witness(std::uint64_t p, const GenericWitness& w, std::uint64_t m, const WorkBudget& budget) {
    require_screenable(p);
    if (m < 3 || std::gcd(m, p) != 1) throw InvalidArgument("validate_witness needs m >= 3 coprime to p");
    const std::uint64_t N = saturating_mul(m, p);
    if (N > Modulus::kMax) throw UnsupportedSize("m p exceeds the modulus cap");
    budget.require(saturating_mul(N, 8), "witness validation at N = " + std::to_string(N));
    const Modulus mm(static_cast<std::int64_t>(m)), mp(static_cast<std::int64_t>(p));
    const Residue l = crt_lift(Residue(w.s, mm), Residue(static_cast<std::int64_t>(w.x), mp));
    const Modulus mod(static_cast<std::int64_t>(N));
    const MonomialSize ms = minimal_monomial_size(mod, l.value());
    if (ms.h <= w.n + 2) return false;
    const auto cert = find_reduction_certificate(mod, l.value());
    return cert && cert->part_size <= w.n + 2 && certificate_valid(*cert);
}

std::vector<ScreenReport> screen_range(std::uint64_t lo, std::uint64_t hi, const ScreenOptions& options,
                                       unsigned jobs) {
    if (lo < 5) throw InvalidArgument("screen_range starts at 5 or above");
    const auto primes = primes_between(lo, hi);
    std::vector<ScreenReport> out(primes.size());
    detail::parallel_for(primes.size(), jobs, [&](std::size_t i) { out[i] = screen_prime(primes[i], options); });
    return out;
}

std::vector<std::uint64_t> omega_unscreened(std::uint64_t bound) {
    if (bound < 5) throw InvalidArgument("omega bound must be at least 5");
    std::vector<std::uint64_t> out;
    for (const ScreenReport& r : screen_range(5, bound, ScreenOptions{false, 30})) {
        if (r.rule == ScreenRule::none) out.push_back(r.p);
    }
    return out;
}

std::string DensityReport::decimal() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value());
    return buf;
}

DensityReport density_D(std::uint64_t x, std::uint64_t sieve_limit) {
    if (x < 10) throw InvalidArgument("density needs x >= 10");
    if (x > sieve_limit) {
        throw UnsupportedSize("sieve to " + std::to_string(x) + " exceeds limit " + std::to_string(sieve_limit));
    }
    const auto flags = prime_sieve(x);
    DensityReport d;
    d.x = x;
    for (std::uint64_t p = 2; p <= x; ++p) {
        if (!flags[p]) continue;
        ++d.primes;
        const bool by5 = p % 5 == 1 || p % 5 == 4;
        const bool by8 = p % 8 == 1 || p % 8 == 7;
        const std::uint64_t r40 = p % 40;
        d.class5 += by5;
        d.class8 += by8;
        d.class40 += r40 == 1 || r40 == 9 || r40 == 31 || r40 == 39;
        d.favorable += by5 || by8;
    }
    if (d.class5 + d.class8 - d.class40 != d.favorable) {
        throw InternalError("inclusion-exclusion over classes mod 40 disagrees with the sieve count");
    }
    const std::uint64_t g = std::gcd(d.favorable, d.primes);
    d.numerator = d.favorable / g;
    d.denominator = d.primes / g;
    return d;
}

}  // namespace monoirr
