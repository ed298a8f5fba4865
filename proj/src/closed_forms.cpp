#include "monoirr/closed_forms.hpp"

#include <string>

#include "monoirr/errors.hpp"
#include "parallel.hpp"

namespace monoirr {

namespace {

// lm reduced mod N, from the stored l (which may exceed k).
std::uint64_t lm_mod(const FamilyParams& p) { return (p.l % p.k) * p.m % p.N(); }

std::int64_t signed_mod(std::int64_t v, std::int64_t n) {
    const std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

const char* to_string(FamilyCase c) noexcept { return c == FamilyCase::plus ? "plus" : "minus"; }

std::uint64_t FamilyParams::point() const noexcept {
    const std::uint64_t n = N();
    if (n == 0) return 0;
    const std::uint64_t lm = (l % k) * m % n;
    return sign_case == FamilyCase::plus ? (lm + 2) % n : (lm + n - 2 % n) % n;
}

bool admissible(const FamilyParams& p) noexcept {
    if (p.k < 2 || p.m < 2 || p.l == 0) return false;
    if (p.k > Modulus::kMax / p.m) return false;
    if ((p.l % p.k) * (p.l % p.k) % p.k != 1 % p.k) return false;
    const std::uint64_t m = p.m % p.k, l = p.l % p.k;
    return p.sign_case == FamilyCase::plus ? (m + l) % p.k == 0 : m == l;
}

void require_admissible(const FamilyParams& p) {
    if (!admissible(p)) {
        throw InvalidArgument("inadmissible family parameters k=" + std::to_string(p.k) + " m=" + std::to_string(p.m) +
                              " l=" + std::to_string(p.l) + " case=" + to_string(p.sign_case));
    }
}

const std::array<LinearInLm, 24>& closed_form_table(FamilyCase c) {
    static const std::array<LinearInLm, 24> plus{{
        {0, 1},   {1, 2},   {3, 3},   {5, 4},   {6, 5},   {6, 6},   {6, 7},   {7, 8},
        {9, 9},   {11, 10}, {12, 11}, {12, 12}, {12, 13}, {13, 14}, {15, 15}, {17, 16},
        {18, 17}, {18, 18}, {18, 19}, {19, 20}, {21, 21}, {23, 22}, {24, 23}, {24, 24},
    }};
    static const std::array<LinearInLm, 24> minus{{
        {0, 1},    {1, -2},   {-3, 3},   {5, -4},   {-6, 5},   {6, -6},   {-6, 7},   {7, -8},
        {-9, 9},   {11, -10}, {-12, 11}, {12, -12}, {-12, 13}, {13, -14}, {-15, 15}, {17, -16},
        {-18, 17}, {18, -18}, {-18, 19}, {19, -20}, {-21, 21}, {23, -22}, {-24, 23}, {24, -24},
    }};
    return c == FamilyCase::plus ? plus : minus;
}

Residue closed_form_K(const FamilyParams& p, std::uint64_t n, unsigned period) {
    require_admissible(p);
    if (period != 6 && period != 12 && period != 24) throw InvalidArgument("period must be 6, 12 or 24");
    const auto N = static_cast<std::int64_t>(p.N());
    const auto lm = static_cast<std::int64_t>(lm_mod(p));
    const std::uint64_t q = n / period, r = n % period;
    const LinearInLm& e = closed_form_table(p.sign_case)[r];
    std::int64_t v = signed_mod(signed_mod(e.c1, N) * lm + e.c0, N);
    const std::int64_t qq = signed_mod(static_cast<std::int64_t>(q % p.N()) * period, N);
    if (p.sign_case == FamilyCase::plus) {
        v += qq * ((lm + 1) % N) % N;
    } else {
        const std::int64_t corr = qq * signed_mod(lm - 1, N) % N;
        v += (n % 2 == 1) ? corr : N - corr;
    }
    return Residue(v, Modulus(N));
}

namespace {

constexpr std::array<std::uint64_t, 6> kFamilyK{3, 4, 6, 8, 12, 24};

bool good_cofactor(std::uint64_t m, std::uint64_t least) { return m >= least && m % 2 == 1 && m % 3 != 0; }

FamilyReport build_report(const FamilyParams& params, std::size_t predicted_h, std::size_t n) {
    FamilyReport r;
    r.N = params.N();
    r.params = params;
    r.point = params.point();
    r.predicted_h = predicted_h;
    r.predicted_part_size = n + 2;
    const Modulus mod(static_cast<std::int64_t>(r.N));
    r.search = monomial_report(mod, r.point);

    const auto K = monomial_continuants(mod, r.point, n);
    ReductionCertificate& c = r.certificate;
    c.N = r.N;
    c.k = r.point;
    c.h = predicted_h;
    c.sign = r.search.sign;
    c.part_size = n + 2;
    if (K[n] == 1 || K[n] == r.N - 1) {
        c.junction_a = K[n] == 1 ? K[n - 1] : mod.neg(K[n - 1]);
        r.defect = certificate_defect(c);
    } else {
        r.defect = "K_" + std::to_string(n) + " at the family point is not +-1";
    }
    return r;
}

}  // namespace

FamilyReport family_certificate(std::uint64_t k, std::uint64_t m) {
    if (k == 2) {
        if (!good_cofactor(m, 3)) throw InvalidArgument("the 2m family needs m odd >= 3 and prime to 3");
        const std::size_t n = m % 6 == 1 ? m : m - 2;
        return build_report(FamilyParams{2, m, 1, FamilyCase::plus}, 3 * m, n);
    }
    bool listed = false;
    for (auto kk : kFamilyK) listed = listed || kk == k;
    if (!listed) throw InvalidArgument("k must be one of 3, 4, 6, 8, 12, 24");
    if (!good_cofactor(m, 5)) throw InvalidArgument("the km family needs m odd >= 5 and prime to 3");
    struct Row {
        std::uint64_t residue, l;
        FamilyCase c;
        bool part_m;  // part size m (n = m - 2) rather than m + 2 (n = m)
    };
    static constexpr Row rows[] = {
        {23, 1, FamilyCase::plus, true},   {1, 1, FamilyCase::minus, false}, {19, 5, FamilyCase::plus, false},
        {5, 5, FamilyCase::minus, true},   {17, 7, FamilyCase::plus, true},  {7, 7, FamilyCase::minus, false},
        {13, 11, FamilyCase::plus, false}, {11, 11, FamilyCase::minus, true},
    };
    for (const Row& row : rows) {
        if (m % 24 != row.residue) continue;
        const FamilyParams params{k, m, row.l, row.c};
        require_admissible(params);
        return build_report(params, 6 * m, row.part_m ? m - 2 : m);
    }
    throw InternalError("m prime to 6 must fall in one of the eight classes mod 24");
}

FamilyReport family_certificate(std::uint64_t N) {
    if (N % 2 == 0 && good_cofactor(N / 2, 3)) return family_certificate(2, N / 2);
    for (auto k : kFamilyK) {
        if (N % k == 0 && good_cofactor(N / k, 5)) return family_certificate(k, N / k);
    }
    throw InvalidArgument("N = " + std::to_string(N) + " is neither 2m nor km in the known families");
}

ClosedFormAudit verify_closed_forms(std::uint64_t k_max, std::uint64_t m_max, unsigned jobs) {
    struct Cell {
        std::uint64_t k, m;
    };
    std::vector<Cell> cells;
    for (std::uint64_t k = 2; k <= k_max; ++k) {
        for (std::uint64_t m = 2; m <= m_max; ++m) cells.push_back({k, m});
    }
    std::vector<ClosedFormAudit> partial(cells.size());
    detail::parallel_for(cells.size(), jobs, [&](std::size_t i) {
        const auto [k, m] = cells[i];
        ClosedFormAudit& out = partial[i];
        for (std::uint64_t l = 1; l < std::max<std::uint64_t>(k, 2); ++l) {
            for (FamilyCase c : {FamilyCase::plus, FamilyCase::minus}) {
                const FamilyParams params{k, m, l, c};
                if (!admissible(params)) continue;
                const Modulus mod(static_cast<std::int64_t>(params.N()));
                const auto K = monomial_continuants(mod, params.point(), 48);
                for (std::uint64_t n = 0; n <= 48; ++n) {
                    for (unsigned period : {6u, 12u, 24u}) {
                        ++out.value_checks;
                        const std::uint64_t got = closed_form_K(params, n, period).value();
                        if (got != K[n]) out.mismatches.push_back({"value", params, n, period, K[n], got});
                    }
                }
                if (k >= 3 && good_cofactor(m, 5)) {
                    ++out.size_checks;
                    const std::size_t h = minimal_monomial_size(mod, params.point()).h;
                    if (h != 6 * m) out.mismatches.push_back({"size", params, 0, 0, 6 * m, h});
                }
            }
        }
    });
    ClosedFormAudit audit;
    for (auto& p : partial) {
        audit.value_checks += p.value_checks;
        audit.size_checks += p.size_checks;
        for (auto& mm : p.mismatches) audit.mismatches.push_back(std::move(mm));
    }
    return audit;
}

}  // namespace monoirr
