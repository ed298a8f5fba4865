#include "monoirr/monomial.hpp"

#include <string>

#include "monoirr/errors.hpp"
#include "parallel.hpp"

namespace monoirr {

namespace {

struct PowerScan {
    std::size_t h = 0;
    int sign = 1;
    // Smallest n >= 1 with K_n = +-1, and the junction it forces; n = 0 if
    // no such n precedes h.
    std::size_t first_n = 0;
    std::uint64_t first_a = 0;
};

// Walks K_j(k, ..., k) until K_{j-1} = 0 and K_j = +-1, which is exactly
// A_k^j = +-Id.
PowerScan scan_powers(const Modulus& mod, std::uint64_t k) {
    const std::uint64_t N = mod.value();
    const std::uint64_t cap = sl2_group_order_saturating(mod);
    k %= N;
    PowerScan out;
    std::uint64_t prev = 0, cur = 1;
    for (std::uint64_t j = 1;; ++j) {
        const std::uint64_t next = mod.sub(mod.mul(k, cur), prev);
        prev = cur;
        cur = next;
        if (cur == 1 || cur == N - 1) {
            const int eps = cur == 1 ? 1 : -1;
            if (prev == 0) {
                out.h = j;
                out.sign = eps;
                return out;
            }
            if (out.first_n == 0) {
                out.first_n = j;
                out.first_a = eps > 0 ? prev : mod.neg(prev);
            }
        }
        if (j >= cap) {
            throw InternalError("no power of A_" + std::to_string(k) + " mod " + std::to_string(N) +
                                " up to the group order is +-Id");
        }
    }
}

SolutionTuple bordered(const Modulus& mod, std::uint64_t k, std::size_t size, std::uint64_t end) {
    std::vector<std::int64_t> v(size, static_cast<std::int64_t>(k));
    v.front() = v.back() = static_cast<std::int64_t>(end);
    return SolutionTuple(mod, v);
}

}  // namespace

SolutionTuple ReductionCertificate::left() const {
    if (part_size < 2) throw InvalidArgument("certificate part size below 2");
    return bordered(Modulus(static_cast<std::int64_t>(N)), k, part_size, junction_a);
}

SolutionTuple ReductionCertificate::right() const {
    if (part_size > h) throw InvalidArgument("certificate part size exceeds h");
    const Modulus mod(static_cast<std::int64_t>(N));
    return bordered(mod, k, complementary_size(), mod.sub(k % N, junction_a % N));
}

MonomialSize minimal_monomial_size(Modulus modulus, std::uint64_t k) {
    const PowerScan s = scan_powers(modulus, k);
    return {s.h, s.sign};
}

std::vector<std::uint64_t> junction_roots(Modulus modulus, std::uint64_t k) {
    const std::uint64_t N = modulus.value();
    k %= N;
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 0; a < N; ++a) {
        if (modulus.mul(a, modulus.sub(a, k)) == 0) out.push_back(a);
    }
    return out;
}

namespace {

std::optional<ReductionCertificate> certificate_from_scan(const Modulus& mod, std::uint64_t k, const PowerScan& s) {
    if (s.h < 3) {
        throw InvalidArgument("minimal monomial size " + std::to_string(s.h) + " admits no reduction (k = " +
                              std::to_string(k) + ")");
    }
    if (s.first_n == 0 || s.first_n + 2 > s.h - 1) return std::nullopt;
    return ReductionCertificate{mod.value(), k % mod.value(), s.h, s.sign, s.first_n + 2, s.first_a};
}

}  // namespace

std::optional<ReductionCertificate> find_reduction_certificate(Modulus modulus, std::uint64_t k) {
    return certificate_from_scan(modulus, k, scan_powers(modulus, k));
}

MonomialReport monomial_report(Modulus modulus, std::uint64_t k) {
    const PowerScan s = scan_powers(modulus, k);
    MonomialReport r;
    r.N = modulus.value();
    r.k = k % modulus.value();
    r.h = s.h;
    r.sign = s.sign;
    r.certificate = certificate_from_scan(modulus, k, s);
    r.irreducible = !r.certificate.has_value();
    return r;
}

std::string certificate_defect(const ReductionCertificate& c) {
    if (c.N < 2 || c.N > Modulus::kMax) return "modulus out of range";
    if (c.k == 0 || c.k >= c.N) return "k must lie in [1, N-1]";
    if (c.junction_a >= c.N) return "junction is not a canonical residue";
    if (c.sign != 1 && c.sign != -1) return "sign must be +1 or -1";
    const Modulus mod(static_cast<std::int64_t>(c.N));
    const MonomialSize ms = minimal_monomial_size(mod, c.k);
    if (c.h != ms.h) return "h is not the minimal monomial size (" + std::to_string(ms.h) + ")";
    if (c.sign != ms.sign) return "sign does not match the minimal monomial solution";
    if (c.part_size < 3 || c.part_size + 1 > c.h) return "part size outside [3, h-1]";
    if (mod.mul(c.junction_a, mod.sub(c.junction_a, c.k)) != 0) return "junction is not a root of X(X-k)";
    const SolutionTuple left = c.left(), right = c.right();
    if (!is_solution(left)) return "left part is not a solution";
    if (!is_solution(right)) return "right part is not a solution";
    if (!(oplus(left, right) == SolutionTuple::monomial(mod, c.k, c.h))) return "parts do not recombine";
    return {};
}

std::uint64_t classification_cost(std::uint64_t N) noexcept { return saturating_mul(N, N); }

ClassificationVerdict is_monomially_irreducible(std::uint64_t N, const WorkBudget& budget) {
    if (N < 2 || N > Modulus::kMax) throw InvalidArgument("N out of range: " + std::to_string(N));
    budget.require(classification_cost(N), "classification of N = " + std::to_string(N));
    const Modulus mod(static_cast<std::int64_t>(N));
    ClassificationVerdict v;
    v.N = N;
    v.witnesses.reserve(N - 1);
    for (std::uint64_t k = 1; k < N; ++k) {
        v.witnesses.push_back(monomial_report(mod, k));
        if (!v.witnesses.back().irreducible) v.monomially_irreducible = false;
    }
    return v;
}

void classify_range(std::uint64_t lo, std::uint64_t hi, const ClassifyOptions& options,
                    const std::function<void(RangeEntry&&)>& sink) {
    if (lo < 2 || lo > hi) throw InvalidArgument("classify_range needs 2 <= lo <= hi");
    const std::uint64_t block = 8 * static_cast<std::uint64_t>(std::max(1u, options.jobs));
    for (std::uint64_t start = lo; start <= hi;) {
        const std::uint64_t count = std::min(block, hi - start + 1);
        std::vector<RangeEntry> entries(count);
        detail::parallel_for(count, options.jobs, [&](std::size_t i) {
            RangeEntry& e = entries[i];
            e.N = start + i;
            const std::uint64_t cost = classification_cost(e.N);
            if (!options.budget.allows(cost)) {
                e.gap = "work estimate " + std::to_string(cost) + " exceeds budget " +
                        std::to_string(options.budget.limit);
                return;
            }
            e.verdict = is_monomially_irreducible(e.N, options.budget);
            if (!options.keep_witnesses) {
                e.verdict->witnesses.clear();
                e.verdict->witnesses.shrink_to_fit();
            }
        });
        for (auto& e : entries) sink(std::move(e));
        if (hi - start + 1 == count) break;
        start += count;
    }
}

std::vector<RangeEntry> classify_range(std::uint64_t lo, std::uint64_t hi, const ClassifyOptions& options) {
    std::vector<RangeEntry> out;
    classify_range(lo, hi, options, [&](RangeEntry&& e) { out.push_back(std::move(e)); });
    return out;
}

}  // namespace monoirr
