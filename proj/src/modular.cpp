#include "monoirr/modular.hpp"

#include <limits>
#include <ostream>
#include <string>

#include "monoirr/budget.hpp"
#include "monoirr/errors.hpp"
#include "monoirr/primes.hpp"

namespace monoirr {

void WorkBudget::require(std::uint64_t estimate, const std::string& what) const {
    if (!allows(estimate)) {
        throw UnsupportedSize(what + ": estimated work " + std::to_string(estimate) + " exceeds budget " +
                              std::to_string(limit));
    }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
    return r;
}

Modulus::Modulus(std::int64_t n) {
    if (n < 2 || static_cast<std::uint64_t>(n) > kMax) {
        throw InvalidArgument("modulus must lie in [2, 2^31-1], got " + std::to_string(n));
    }
    n_ = static_cast<std::uint64_t>(n);
}

namespace {

void require_same(const Modulus& a, const Modulus& b) {
    if (!(a == b)) {
        throw InvalidArgument("mixed moduli " + std::to_string(a.value()) + " and " + std::to_string(b.value()));
    }
}

}  // namespace

Residue Residue::operator+(const Residue& rhs) const {
    require_same(modulus_, rhs.modulus_);
    return Residue(static_cast<std::int64_t>(modulus_.add(value_, rhs.value_)), modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
    require_same(modulus_, rhs.modulus_);
    return Residue(static_cast<std::int64_t>(modulus_.sub(value_, rhs.value_)), modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
    require_same(modulus_, rhs.modulus_);
    return Residue(static_cast<std::int64_t>(modulus_.mul(value_, rhs.value_)), modulus_);
}

Residue Residue::operator-() const { return Residue(static_cast<std::int64_t>(modulus_.neg(value_)), modulus_); }

std::ostream& operator<<(std::ostream& os, const Residue& r) {
    return os << r.value() << " (mod " << r.modulus().value() << ")";
}

Mat2::Mat2(Modulus modulus, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : modulus_(modulus), e_{modulus.reduce(a), modulus.reduce(b), modulus.reduce(c), modulus.reduce(d)} {}

Mat2 Mat2::step(const Residue& k) {
    return Mat2(k.modulus(), static_cast<std::int64_t>(k.value()), -1, 1, 0);
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
    require_same(modulus_, rhs.modulus_);
    const Modulus& m = modulus_;
    const auto& x = e_;
    const auto& y = rhs.e_;
    Mat2 out = *this;
    out.e_[0] = m.add(m.mul(x[0], y[0]), m.mul(x[1], y[2]));
    out.e_[1] = m.add(m.mul(x[0], y[1]), m.mul(x[1], y[3]));
    out.e_[2] = m.add(m.mul(x[2], y[0]), m.mul(x[3], y[2]));
    out.e_[3] = m.add(m.mul(x[2], y[1]), m.mul(x[3], y[3]));
    return out;
}

Residue Mat2::det() const {
    const Modulus& m = modulus_;
    return Residue(static_cast<std::int64_t>(m.sub(m.mul(e_[0], e_[3]), m.mul(e_[1], e_[2]))), m);
}

int Mat2::scalar_sign() const noexcept {
    if (e_[1] != 0 || e_[2] != 0 || e_[0] != e_[3]) return 0;
    if (e_[0] == 1) return 1;
    if (e_[0] == modulus_.value() - 1) return -1;
    return 0;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    const auto& e = m.raw();
    return os << "[[" << e[0] << ", " << e[1] << "], [" << e[2] << ", " << e[3] << "]] (mod " << m.modulus().value()
              << ")";
}

int legendre(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw InvalidArgument("legendre symbol needs an odd prime, got " + std::to_string(p));
    }
    std::int64_t x = a % p;
    if (x < 0) x += p;
    std::int64_t n = p;
    int result = 1;
    // Jacobi-style descent: pull out factors of 2 with the supplementary law,
    // then flip with quadratic reciprocity.
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) result = -result;
        x %= n;
    }
    return n == 1 ? result : 0;
}

std::array<std::int64_t, 3> bezout(std::int64_t a, std::int64_t b) noexcept {
    std::int64_t r0 = a, r1 = b;
    std::int64_t u0 = 1, u1 = 0;
    std::int64_t v0 = 0, v1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
        t = v0 - q * v1;
        v0 = v1;
        v1 = t;
    }
    if (r0 < 0) return {-r0, -u0, -v0};
    return {r0, u0, v0};
}

Residue crt_lift(const Residue& x_m, const Residue& x_p) {
    const auto m = static_cast<std::int64_t>(x_m.modulus().value());
    const auto p = static_cast<std::int64_t>(x_p.modulus().value());
    const auto [g, u, v] = bezout(m, p);
    if (g != 1) {
        throw InvalidArgument("crt_lift needs coprime moduli, got " + std::to_string(m) + " and " + std::to_string(p));
    }
    const Modulus mp(m * p);
    const __int128 big = static_cast<__int128>(m) * p;
    // x_m * v * p + x_p * u * m, reduced into [0, mp).
    __int128 acc = static_cast<__int128>(x_m.value()) * v % big * p % big;
    acc += static_cast<__int128>(x_p.value()) * u % big * m % big;
    acc %= big;
    if (acc < 0) acc += big;
    return Residue(static_cast<std::int64_t>(acc), mp);
}

Residue continuant(Modulus modulus, std::span<const Residue> entries) {
    std::uint64_t prev = 0;  // K_{-1}
    std::uint64_t cur = 1;   // K_0
    for (const Residue& a : entries) {
        require_same(modulus, a.modulus());
        const std::uint64_t next = modulus.sub(modulus.mul(a.value(), cur), prev);
        prev = cur;
        cur = next;
    }
    return Residue(static_cast<std::int64_t>(cur), modulus);
}

Mat2 transfer_product(std::span<const Residue> entries) {
    if (entries.empty()) throw InvalidArgument("transfer_product of an empty tuple");
    const Modulus modulus = entries.front().modulus();
    Mat2 acc = Mat2::identity(modulus);
    for (const Residue& a : entries) {
        require_same(modulus, a.modulus());
        acc = Mat2::step(a) * acc;
    }
    return acc;
}

std::vector<std::uint64_t> monomial_continuants(Modulus modulus, std::uint64_t k, std::size_t count) {
    k %= modulus.value();
    std::vector<std::uint64_t> out;
    out.reserve(count + 1);
    std::uint64_t prev = 0, cur = 1;
    out.push_back(cur);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t next = modulus.sub(modulus.mul(k, cur), prev);
        prev = cur;
        cur = next;
        out.push_back(cur);
    }
    return out;
}

namespace {

// N^3 prod (1 - 1/p^2) = prod p^(3e-2) (p^2 - 1); false on overflow.
bool group_order(Modulus modulus, std::uint64_t& out) {
    std::uint64_t order = 1;
    for (const auto& [p, e] : factorize(modulus.value())) {
        std::uint64_t term = p * p - 1;
        for (unsigned i = 0; i < 3 * e - 2; ++i) {
            if (__builtin_mul_overflow(term, p, &term)) return false;
        }
        if (__builtin_mul_overflow(order, term, &order)) return false;
    }
    out = order;
    return true;
}

}  // namespace

std::uint64_t sl2_group_order(Modulus modulus) {
    std::uint64_t order = 0;
    if (!group_order(modulus, order)) {
        throw UnsupportedSize("|SL2(Z/" + std::to_string(modulus.value()) + "Z)| does not fit in 64 bits");
    }
    return order;
}

std::uint64_t sl2_group_order_saturating(Modulus modulus) {
    std::uint64_t order = 0;
    if (!group_order(modulus, order)) return std::numeric_limits<std::uint64_t>::max();
    return order;
}

}  // namespace monoirr
