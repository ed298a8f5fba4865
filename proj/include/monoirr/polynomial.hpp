#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "monoirr/modular.hpp"

namespace monoirr {

/// Polynomial with 64-bit integer coefficients, stored in ascending degree.
/// Trailing zero coefficients are stripped, so the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading term.
/// Arithmetic throws UnsupportedSize on coefficient overflow.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> ascending);
    IntPolynomial(std::initializer_list<std::int64_t> ascending)
        : IntPolynomial(std::vector<std::int64_t>(ascending)) {}

    static IntPolynomial x();
    static IntPolynomial constant(std::int64_t c);

    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;

    /// Exact value at an integer point.
    std::int64_t eval(std::int64_t x) const;
    /// Horner evaluation over Z/NZ.
    Residue eval(const Residue& x) const;

    bool operator==(const IntPolynomial&) const = default;

   private:
    void trim();
    std::vector<std::int64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// K_n(X, ..., X) from P_0 = 1, P_1 = X, P_n = X P_{n-1} - P_{n-2}.
IntPolynomial continuant_polynomial(unsigned n);

inline constexpr std::uint64_t kDefaultRootScanBound = 1'000'000;

/// All roots of `poly` mod the prime p, ascending, by evaluating at every
/// residue. Throws InvalidArgument if p is not prime and UnsupportedSize if
/// p exceeds `scan_bound`.
std::vector<std::uint64_t> poly_roots_mod_p(const IntPolynomial& poly, std::uint64_t p,
                                            std::uint64_t scan_bound = kDefaultRootScanBound);

}  // namespace monoirr
