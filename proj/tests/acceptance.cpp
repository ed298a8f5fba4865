#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "monoirr/closed_forms.hpp"
#include "monoirr/errors.hpp"
#include "monoirr/monomial.hpp"
#include "monoirr/primes.hpp"
#include "monoirr/screening.hpp"
#include "monoirr/solutions.hpp"
#include "oracles.hpp"

using namespace monoirr;

namespace {

const std::vector<std::uint64_t> kOmega{107, 163, 173, 277, 283, 317, 347, 523, 557,
                                        563, 613, 653, 733, 773, 787, 877, 907, 997};

struct Outcome {
    bool pass = false;
    std::string detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string join(const std::vector<std::uint64_t>& v, std::size_t limit = 40) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? " " : "") << v[i];
    if (v.size() > limit) os << " ... (" << v.size() << " total)";
    return v.empty() ? "{}" : os.str();
}

// Irreducible N in [lo, hi] accepted by `keep`, plus any N left undecided.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> irreducible_in(
    std::uint64_t lo, std::uint64_t hi, const std::function<bool(std::uint64_t)>& keep, WorkBudget budget = {}) {
    std::vector<std::uint64_t> irreducible, gaps;
    ClassifyOptions options{jobs(), budget, false};
    classify_range(lo, hi, options, [&](RangeEntry&& e) {
        if (!keep(e.N)) return;
        if (!e.verdict) gaps.push_back(e.N);
        else if (e.verdict->monomially_irreducible) irreducible.push_back(e.N);
    });
    return {irreducible, gaps};
}

Outcome primes_irreducible() {
    std::vector<std::uint64_t> reducible, gaps;
    std::size_t count = 0;
    classify_range(2, 1000, ClassifyOptions{jobs(), {}, false}, [&](RangeEntry&& e) {
        if (!is_prime(e.N)) return;
        ++count;
        if (!e.verdict) gaps.push_back(e.N);
        else if (!e.verdict->monomially_irreducible) reducible.push_back(e.N);
    });
    const bool pass = count == 168 && reducible.empty() && gaps.empty();
    return {pass, std::to_string(count) + " primes, reducible: " + join(reducible) + ", gaps: " + join(gaps)};
}

Outcome composite_classification(std::uint64_t hi, WorkBudget budget) {
    const auto [irreducible, gaps] = irreducible_in(2, hi, [](std::uint64_t N) { return !is_prime(N); }, budget);
    const std::vector<std::uint64_t> expected{4, 6, 8, 12, 24};
    return {irreducible == expected && gaps.empty(),
            "composites <= " + std::to_string(hi) + " irreducible: " + join(irreducible) + ", gaps: " + join(gaps)};
}

Outcome omega_set() {
    const auto got = omega_unscreened(1000);
    return {got == kOmega, "omega(1000) = " + join(got)};
}

Outcome worked_examples() {
    std::vector<std::string> failures;
    const auto part_is = [](const MonomialReport& r, std::vector<std::uint64_t> part) {
        return r.certificate && r.certificate->left().values() == part && certificate_valid(*r.certificate);
    };
    const auto r40 = monomial_report(Modulus(40), 23);
    if (r40.h != 30 || r40.irreducible || !part_is(r40, {8, 23, 23, 23, 8})) failures.push_back("40/23");
    const auto r56 = monomial_report(Modulus(56), 17);
    if (r56.h != 24 || r56.irreducible || !part_is(r56, {49, 17, 17, 17, 17, 49})) failures.push_back("56/17");
    const auto r55 = monomial_report(Modulus(55), 23);
    if (r55.h != 15 || !r55.irreducible || r55.certificate) failures.push_back("55/23");
    std::string detail = "40/23 h=" + std::to_string(r40.h) + ", 56/17 h=" + std::to_string(r56.h) +
                         ", 55/23 h=" + std::to_string(r55.h);
    for (const auto& f : failures) detail += ", mismatch " + f;
    return {failures.empty(), detail};
}

Outcome n24_table() {
    const std::vector<std::size_t> expected{12, 12, 6, 8, 6, 12, 12, 24, 6};
    std::vector<std::uint64_t> sizes;
    bool all_irreducible = true;
    for (std::uint64_t k = 3; k <= 11; ++k) {
        const auto r = monomial_report(Modulus(24), k);
        sizes.push_back(r.h);
        all_irreducible = all_irreducible && r.irreducible;
    }
    const bool pass = std::equal(sizes.begin(), sizes.end(), expected.begin()) && all_irreducible;
    return {pass, "sizes " + join(sizes) + (all_irreducible ? ", all irreducible" : ", some reducible")};
}

Outcome square_factor_laws() {
    std::vector<std::uint64_t> bad;
    std::size_t cases = 0;
    for (std::uint64_t N = 4; N <= 200; ++N) {
        for (const auto& [p, e] : factorize(N)) {
            if (e < 2) continue;
            ++cases;
            const auto r = monomial_report(Modulus(static_cast<std::int64_t>(N)), N / p);
            if (r.h != 2 * p || r.irreducible != (p == 2)) bad.push_back(N);
        }
    }
    for (std::uint64_t N : {16, 32, 48, 80, 160}) {
        ++cases;
        const auto r = monomial_report(Modulus(static_cast<std::int64_t>(N)), N / 4);
        if (r.h != 8 || r.irreducible) bad.push_back(N);
    }
    return {bad.empty(), std::to_string(cases) + " cases, violations at N = " + join(bad)};
}

Outcome closed_form_suite() {
    const auto audit = verify_closed_forms(24, 60, jobs());
    std::string detail = std::to_string(audit.value_checks) + " value checks, " +
                         std::to_string(audit.size_checks) + " size checks, " +
                         std::to_string(audit.mismatches.size()) + " mismatches";
    return {audit.mismatches.empty() && audit.size_checks > 0 && audit.value_checks > 0, detail};
}

Outcome oracle_equivalence() {
    std::size_t finder_cases = 0, law_cases = 0;
    std::vector<std::string> violations;
    const auto fail = [&](const std::string& what) {
        if (violations.size() < 5) violations.push_back(what);
        else violations.back() = "...";
    };

    for (std::int64_t N = 2; N <= 30; ++N) {
        const Modulus mod(N);
        for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(N); ++k) {
            const auto size = minimal_monomial_size(mod, k);
            if (size.h < 3 || size.h > 12) continue;
            ++finder_cases;
            const auto cert = find_reduction_certificate(mod, k);
            const auto generic = is_reducible_generic(SolutionTuple::monomial(mod, k, size.h));
            const bool brute = oracle::reducible(std::vector<oracle::i64>(size.h, static_cast<oracle::i64>(k)), N);
            if (cert.has_value() != generic.has_value() || generic.has_value() != brute) {
                fail("finder N=" + std::to_string(N) + " k=" + std::to_string(k));
            }
            if (cert && !certificate_valid(*cert)) fail("certificate N=" + std::to_string(N));
        }
    }

    for (std::int64_t N = 2; N <= 8; ++N) {
        const Modulus mod(N);
        std::vector<SolutionTuple> small;
        for (unsigned m = 2; m <= 4; ++m) {
            for (const auto& b : enumerate_solutions(mod, m)) small.push_back(b);
        }
        for (unsigned n = 1; n <= 6; ++n) {
            for (const auto& raw : oracle::all_tuples(N, n)) {
                const SolutionTuple t(mod, raw);
                const bool sol = is_solution(t);
                if (sol != (oracle::tuple_sign(raw, N) != 0)) fail("sign N=" + std::to_string(N));
                ++law_cases;
                if (n >= 2) {
                    for (const auto& b : small) {
                        if (n + b.size() - 2 > 6) continue;
                        if (is_solution(oplus(t, b)) != sol) fail("sum law N=" + std::to_string(N));
                    }
                }
                if (!sol) continue;
                if (!is_solution(t.negated())) fail("negation N=" + std::to_string(N));
                const bool reducible = n >= 3 && is_reducible_generic(t).has_value();
                if (n >= 3 && is_reducible_generic(t.negated()).has_value() != reducible) {
                    fail("negated reducibility N=" + std::to_string(N));
                }
                for (int refl = 0; refl < 2; ++refl) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const auto img = dihedral_image(t, r, refl == 1);
                        if (!is_solution(img)) fail("equivalence N=" + std::to_string(N));
                        if (n >= 3 && is_reducible_generic(img).has_value() != reducible) {
                            fail("equivalent reducibility N=" + std::to_string(N));
                        }
                    }
                }
            }
        }
    }
    std::string detail = std::to_string(finder_cases) + " finder cases, " + std::to_string(law_cases) +
                         " law tuples, violations: ";
    if (violations.empty()) detail += "none";
    for (const auto& v : violations) detail += v + "; ";
    return {violations.empty(), detail};
}

Outcome screening_soundness() {
    std::vector<std::string> unsound;
    std::size_t validated = 0;
    for (std::uint64_t p = 5; p <= 300; ++p) {
        if (!is_prime(p)) continue;
        const auto r = screen_prime(p);
        if (r.rule == ScreenRule::none) continue;
        for (std::uint64_t m : {3, 4, 9}) {
            if (m % p == 0) continue;
            ++validated;
            const bool lifted = validate_witness(p, *r.witness, m);
            const bool reducible = !is_monomially_irreducible(m * p).monomially_irreducible;
            if (!lifted || !reducible) unsound.push_back(std::to_string(m) + "*" + std::to_string(p));
        }
    }

    std::vector<std::uint64_t> unscreened;
    std::vector<std::string> generic_hits;
    for (const auto& r : screen_range(5, 2000, ScreenOptions{true, 30}, jobs())) {
        if (r.rule == ScreenRule::none) {
            if (r.p <= 1000) unscreened.push_back(r.p);
        } else if (r.rule == ScreenRule::generic && r.p <= 1000 &&
                   std::binary_search(kOmega.begin(), kOmega.end(), r.p)) {
            const auto& w = *r.witness;
            generic_hits.push_back(std::to_string(r.p) + " (n=" + std::to_string(w.n) + ", eps=" +
                                   std::to_string(w.eps) + ", s=" + std::to_string(w.s) + ", x=" +
                                   std::to_string(w.x) + ")");
        }
    }
    const bool soundness = unsound.empty();
    const bool coverage = unscreened == kOmega;
    std::string detail = std::to_string(validated) + " lifts validated" +
                         (soundness ? "" : ", unsound: " + std::to_string(unsound.size())) +
                         "; unscreened <= 1000: " + join(unscreened);
    if (!coverage) {
        std::vector<std::uint64_t> missing;
        std::set_difference(kOmega.begin(), kOmega.end(), unscreened.begin(), unscreened.end(),
                            std::back_inserter(missing));
        detail += "; expected omega, missing " + join(missing);
        for (const auto& h : generic_hits) detail += "; generic witness " + h;
    }
    return {soundness && coverage, detail};
}

Outcome density() {
    const auto d = density_D(1'000'000);
    const double v = d.value();
    return {v >= 0.70 && v <= 0.80, "D(1e6) = " + d.decimal() + " (" + std::to_string(d.numerator) + "/" +
                                         std::to_string(d.denominator) + ")"};
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i) extended = extended || std::strcmp(argv[i], "--extended") == 0;

    const std::uint64_t composite_hi = extended ? 17440 : 2000;
    const WorkBudget composite_budget{extended ? std::uint64_t{400'000'000} : WorkBudget::kDefault};
    const std::vector<std::function<Outcome()>> criteria{
        primes_irreducible,
        [&] { return composite_classification(composite_hi, composite_budget); },
        omega_set,
        worked_examples,
        n24_table,
        square_factor_laws,
        closed_form_suite,
        oracle_equivalence,
        screening_soundness,
        density,
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s (%.1fs) %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
