#include <doctest.h>

#include "monoirr/errors.hpp"
#include "monoirr/monomial.hpp"
#include "oracles.hpp"

using namespace monoirr;

namespace {

Modulus mod(std::int64_t N) { return Modulus(N); }

bool prime_or_special(std::uint64_t N) {
    return oracle::is_prime(static_cast<std::int64_t>(N)) || N == 4 || N == 6 || N == 8 || N == 12 || N == 24;
}

}  // namespace

TEST_CASE("minimal size examples") {
    CHECK(minimal_monomial_size(mod(24), 5).h == 6);
    CHECK(minimal_monomial_size(mod(24), 10).h == 24);
    CHECK(minimal_monomial_size(mod(40), 23).h == 30);
    CHECK(minimal_monomial_size(mod(56), 17).h == 24);
    for (std::int64_t N = 3; N <= 200; ++N) {
        const auto s = minimal_monomial_size(mod(N), 1);
        CHECK(s.h == 3);
        CHECK(s.sign == -1);
    }
    CHECK(minimal_monomial_size(mod(2), 1).sign == 1);
    CHECK(minimal_monomial_size(mod(9), 0).h == 2);
}

TEST_CASE("order law") {
    for (std::int64_t N = 2; N <= 60; ++N) {
        for (std::int64_t k = 1; k < N; ++k) {
            const auto s = minimal_monomial_size(mod(N), static_cast<std::uint64_t>(k));
            const auto [h, sign] = oracle::monomial_size(N, k);
            REQUIRE(s.h == h);
            REQUIRE(s.sign == sign);
        }
    }
}

TEST_CASE("junction roots") {
    CHECK(junction_roots(mod(55), 23) == std::vector<std::uint64_t>{0, 23, 33, 45});
    for (std::int64_t N = 2; N <= 40; ++N) {
        for (std::int64_t k = 0; k < N; ++k) {
            std::vector<std::uint64_t> expected;
            for (std::int64_t a = 0; a < N; ++a) {
                if (oracle::mod(a * (a - k), N) == 0) expected.push_back(static_cast<std::uint64_t>(a));
            }
            REQUIRE(junction_roots(mod(N), static_cast<std::uint64_t>(k)) == expected);
        }
    }
}

TEST_CASE("certificate examples") {
    const auto c40 = find_reduction_certificate(mod(40), 23);
    REQUIRE(c40.has_value());
    CHECK(c40->part_size == 5);
    CHECK(c40->left() == SolutionTuple(mod(40), {8, 23, 23, 23, 8}));
    CHECK(c40->h == 30);

    const auto c56 = find_reduction_certificate(mod(56), 17);
    REQUIRE(c56.has_value());
    CHECK(c56->part_size == 6);
    CHECK(c56->left() == SolutionTuple(mod(56), {49, 17, 17, 17, 17, 49}));

    const auto r55 = monomial_report(mod(55), 23);
    CHECK(r55.h == 15);
    CHECK(r55.irreducible);
    CHECK_FALSE(r55.certificate.has_value());

    CHECK(find_reduction_certificate(mod(9), 3).has_value());
    CHECK_THROWS_AS(find_reduction_certificate(mod(9), 0), InvalidArgument);
}

TEST_CASE("certificate search matches the full junction scan") {
    for (std::int64_t N = 2; N <= 45; ++N) {
        for (std::int64_t k = 1; k < N; ++k) {
            const auto c = find_reduction_certificate(mod(N), static_cast<std::uint64_t>(k));
            const auto o = oracle::certificate(N, k);
            REQUIRE(c.has_value() == o.has_value());
            if (c) {
                REQUIRE(c->part_size == o->l);
                REQUIRE(c->junction_a == static_cast<std::uint64_t>(o->a));
                REQUIRE(certificate_valid(*c));
            }
        }
    }
}

TEST_CASE("oracle equivalence with the generic reducibility test") {
    for (std::int64_t N = 2; N <= 30; ++N) {
        for (std::int64_t k = 1; k < N; ++k) {
            const auto s = minimal_monomial_size(mod(N), static_cast<std::uint64_t>(k));
            if (s.h > 12) continue;
            const auto cert = find_reduction_certificate(mod(N), static_cast<std::uint64_t>(k));
            const auto generic = is_reducible_generic(SolutionTuple::monomial(mod(N), static_cast<std::uint64_t>(k), s.h));
            REQUIRE(cert.has_value() == generic.has_value());
        }
    }
}

TEST_CASE("junction law") {
    for (std::int64_t N = 2; N <= 20; ++N) {
        for (std::int64_t k = 0; k < N; ++k) {
            for (std::size_t size = 3; size <= 8; ++size) {
                for (std::int64_t a = 0; a < N; ++a) {
                    for (std::int64_t b = 0; b < N; ++b) {
                        std::vector<std::int64_t> t(size, k);
                        t.front() = a;
                        t.back() = b;
                        if (!is_solution(SolutionTuple(mod(N), t))) continue;
                        REQUIRE(a == b);
                        REQUIRE(oracle::mod(a * (a - k), N) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("square-factor law") {
    for (std::int64_t N = 4; N <= 200; ++N) {
        for (std::int64_t p = 2; p * p <= N; ++p) {
            if (!oracle::is_prime(p) || N % (p * p) != 0) continue;
            const auto k = static_cast<std::uint64_t>(N / p);
            REQUIRE(minimal_monomial_size(mod(N), k).h == static_cast<std::size_t>(2 * p));
            REQUIRE(find_reduction_certificate(mod(N), k).has_value() == (p != 2));
        }
    }
}

TEST_CASE("16-divisibility law") {
    for (std::int64_t N = 16; N <= 320; N += 16) {
        const auto k = static_cast<std::uint64_t>(N / 4);
        REQUIRE(minimal_monomial_size(mod(N), k).h == 8);
        REQUIRE(find_reduction_certificate(mod(N), k).has_value());
    }
}

TEST_CASE("constructed-solution law") {
    for (std::int64_t N = 2; N <= 40; ++N) {
        for (std::int64_t k = 0; k < N; ++k) {
            for (std::size_t n = 1; n <= 10; ++n) {
                const std::int64_t Kn = oracle::continuant(std::vector<std::int64_t>(n, k), N);
                if (Kn != 1 % N && Kn != N - 1) continue;
                const std::int64_t eps = Kn == 1 % N ? 1 : -1;
                const std::int64_t a = oracle::mod(eps * oracle::continuant(std::vector<std::int64_t>(n - 1, k), N), N);
                std::vector<std::int64_t> t(n + 2, k);
                t.front() = t.back() = a;
                REQUIRE(is_solution(SolutionTuple(mod(N), t)));
            }
        }
    }
}

TEST_CASE("classification examples") {
    CHECK(is_monomially_irreducible(24).monomially_irreducible);
    CHECK_FALSE(is_monomially_irreducible(10).monomially_irreducible);
    CHECK(is_monomially_irreducible(7).monomially_irreducible);
    CHECK_FALSE(is_monomially_irreducible(9).monomially_irreducible);
    CHECK(is_monomially_irreducible(2).monomially_irreducible);
    CHECK(is_monomially_irreducible(24).witnesses.size() == 23);
    CHECK_THROWS_AS(is_monomially_irreducible(1), InvalidArgument);
    CHECK_THROWS_AS(is_monomially_irreducible(5000, WorkBudget{1000}), UnsupportedSize);
}

TEST_CASE("classify range") {
    const auto v = classify_range(2, 30);
    REQUIRE(v.size() == 29);
    for (const auto& e : v) {
        REQUIRE(e.verdict.has_value());
        CHECK(e.verdict->N == e.N);
        CHECK(e.verdict->monomially_irreducible == prime_or_special(e.N));
        for (const auto& r : e.verdict->witnesses) {
            if (r.certificate) REQUIRE(certificate_valid(*r.certificate));
        }
    }
    CHECK_FALSE(classify_range(25, 25).front().verdict->monomially_irreducible);
    CHECK(classify_range(2, 2).front().verdict->monomially_irreducible);
    CHECK_THROWS_AS(classify_range(1, 5), InvalidArgument);
    CHECK_THROWS_AS(classify_range(9, 5), InvalidArgument);
}

TEST_CASE("classify range is deterministic across job counts") {
    ClassifyOptions one, four;
    four.jobs = 4;
    const auto a = classify_range(2, 90, one), b = classify_range(2, 90, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].N == b[i].N);
        REQUIRE(a[i].verdict->monomially_irreducible == b[i].verdict->monomially_irreducible);
        for (std::size_t j = 0; j < a[i].verdict->witnesses.size(); ++j) {
            REQUIRE(a[i].verdict->witnesses[j].certificate == b[i].verdict->witnesses[j].certificate);
        }
    }
}

TEST_CASE("classify range marks gaps past the budget") {
    ClassifyOptions opt;
    opt.budget = WorkBudget{400};
    opt.keep_witnesses = false;
    const auto v = classify_range(18, 22, opt);
    REQUIRE(v.size() == 5);
    CHECK(v[0].verdict.has_value());
    CHECK(v[0].verdict->witnesses.empty());
    CHECK(v[2].verdict.has_value());
    CHECK_FALSE(v[3].verdict.has_value());
    CHECK_FALSE(v[3].gap.empty());
}

TEST_CASE("certificate checker") {
    for (std::int64_t N = 4; N <= 120; ++N) {
        for (std::int64_t k = 1; k < N; ++k) {
            const auto c = find_reduction_certificate(mod(N), static_cast<std::uint64_t>(k));
            if (!c) continue;
            REQUIRE(certificate_defect(*c).empty());
            auto bad = *c;
            bad.N += 1;
            CHECK_FALSE(certificate_valid(bad));
            bad = *c;
            bad.k = (bad.k + 1) % bad.N;
            CHECK_FALSE(certificate_valid(bad));
            bad = *c;
            bad.h += 1;
            CHECK_FALSE(certificate_valid(bad));
            bad = *c;
            bad.sign = -bad.sign;
            CHECK_FALSE(certificate_valid(bad));
            bad = *c;
            bad.part_size += 1;
            CHECK_FALSE(certificate_valid(bad));
            bad = *c;
            bad.junction_a = (bad.junction_a + 1) % bad.N;
            CHECK_FALSE(certificate_valid(bad));
        }
    }
}
