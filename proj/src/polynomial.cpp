#include "monoirr/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "monoirr/errors.hpp"
#include "monoirr/primes.hpp"

namespace monoirr {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw UnsupportedSize("integer polynomial coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw UnsupportedSize("integer polynomial coefficient overflow");
    return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::x() { return IntPolynomial({0, 1}); }

IntPolynomial IntPolynomial::constant(std::int64_t c) { return IntPolynomial(std::vector<std::int64_t>{c}); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<std::int64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(coefficient(i), rhs.coefficient(i));
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<std::int64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = checked_add(coefficient(i), checked_mul(-1, rhs.coefficient(i)));
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<std::int64_t> out(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            out[i + j] = checked_add(out[i + j], checked_mul(c_[i], rhs.c_[j]));
        }
    }
    return IntPolynomial(std::move(out));
}

std::int64_t IntPolynomial::eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

Residue IntPolynomial::eval(const Residue& x) const {
    const Modulus m = x.modulus();
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = m.add(m.mul(acc, x.value()), m.reduce(*it));
    return Residue(static_cast<std::int64_t>(acc), m);
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const std::int64_t c = p.coefficient(static_cast<std::size_t>(i));
        if (c == 0) continue;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "X";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os;
}

IntPolynomial continuant_polynomial(unsigned n) {
    IntPolynomial prev = IntPolynomial::constant(1);
    if (n == 0) return prev;
    IntPolynomial cur = IntPolynomial::x();
    const IntPolynomial x = IntPolynomial::x();
    for (unsigned i = 2; i <= n; ++i) {
        IntPolynomial next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::uint64_t> poly_roots_mod_p(const IntPolynomial& poly, std::uint64_t p, std::uint64_t scan_bound) {
    if (p > scan_bound) {
        throw UnsupportedSize("root scan mod " + std::to_string(p) + " exceeds bound " + std::to_string(scan_bound));
    }
    if (!is_prime(p)) throw InvalidArgument("poly_roots_mod_p needs a prime modulus, got " + std::to_string(p));
    const Modulus m(static_cast<std::int64_t>(p));
    std::vector<std::uint64_t> reduced;
    reduced.reserve(poly.coefficients().size());
    for (std::int64_t c : poly.coefficients()) reduced.push_back(m.reduce(c));

    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) acc = m.add(m.mul(acc, x), *it);
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

}  // namespace monoirr
