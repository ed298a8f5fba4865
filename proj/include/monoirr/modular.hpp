#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace monoirr {

/// An integer N >= 2 defining the ring Z/NZ.
///
/// N is capped at 2^31 - 1 so the product of two canonical residues fits in
/// an unsigned 64-bit word without widening.
class Modulus {
   public:
    static constexpr std::uint64_t kMax = 0x7fffffffULL;

    /// Throws InvalidArgument unless 2 <= n <= kMax.
    explicit Modulus(std::int64_t n);

    std::uint64_t value() const noexcept { return n_; }

    /// Canonical representative of x in [0, N).
    std::uint64_t reduce(std::int64_t x) const noexcept {
        const std::int64_t n = static_cast<std::int64_t>(n_);
        std::int64_t r = x % n;
        return static_cast<std::uint64_t>(r < 0 ? r + n : r);
    }

    // The helpers below expect canonical inputs in [0, N).
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + n_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : n_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % n_; }

    bool operator==(const Modulus&) const = default;

   private:
    std::uint64_t n_;
};

/// An element of Z/NZ, stored as its canonical representative.
class Residue {
   public:
    Residue(std::int64_t value, Modulus modulus) : modulus_(modulus), value_(modulus.reduce(value)) {}

    std::uint64_t value() const noexcept { return value_; }
    Modulus modulus() const noexcept { return modulus_; }

    /// Binary operators throw InvalidArgument on mixed moduli.
    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator*(const Residue& rhs) const;
    Residue operator-() const;

    bool operator==(const Residue&) const = default;

   private:
    Modulus modulus_;
    std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// A 2x2 matrix over Z/NZ, row-major (a b; c d).
class Mat2 {
   public:
    Mat2(Modulus modulus, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static Mat2 identity(Modulus modulus) { return Mat2(modulus, 1, 0, 0, 1); }
    /// The elementary factor (k -1; 1 0).
    static Mat2 step(const Residue& k);

    Modulus modulus() const noexcept { return modulus_; }
    Residue a() const { return entry(0); }
    Residue b() const { return entry(1); }
    Residue c() const { return entry(2); }
    Residue d() const { return entry(3); }
    const std::array<std::uint64_t, 4>& raw() const noexcept { return e_; }

    Mat2 operator*(const Mat2& rhs) const;
    Residue det() const;

    /// +1 if the matrix is Id, -1 if it is -Id, 0 otherwise. For N = 2 the
    /// two coincide and +1 is reported.
    int scalar_sign() const noexcept;

    bool operator==(const Mat2&) const = default;

   private:
    Residue entry(int i) const { return Residue(static_cast<std::int64_t>(e_[i]), modulus_); }

    Modulus modulus_;
    std::array<std::uint64_t, 4> e_;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Legendre symbol (a/p) for an odd prime p, computed with the reciprocity
/// law and its supplement for 2. Throws InvalidArgument if p is not an odd
/// prime.
int legendre(std::int64_t a, std::int64_t p);

/// The unique class mod m*p congruent to x_m mod m and x_p mod p, built from
/// Bezout coefficients u*m + v*p = 1 as x_m*v*p + x_p*u*m.
/// Throws InvalidArgument if the moduli share a factor or m*p exceeds the cap.
Residue crt_lift(const Residue& x_m, const Residue& x_p);

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g = gcd(a, b).
std::array<std::int64_t, 3> bezout(std::int64_t a, std::int64_t b) noexcept;

/// Continuant K_n(a_1..a_n) via K_i = a_i K_{i-1} - K_{i-2}, K_{-1} = 0,
/// K_0 = 1. The empty tuple gives 1. Throws InvalidArgument if an entry
/// carries a different modulus.
Residue continuant(Modulus modulus, std::span<const Residue> entries);

/// Ordered product M_n = A(a_n) ... A(a_1), A(x) = (x -1; 1 0).
/// Throws InvalidArgument on an empty tuple or mixed moduli.
Mat2 transfer_product(std::span<const Residue> entries);

/// K_0..K_count of the constant tuple (k, ..., k), as canonical values.
std::vector<std::uint64_t> monomial_continuants(Modulus modulus, std::uint64_t k, std::size_t count);

/// |SL_2(Z/NZ)| = N^3 prod_{p | N} (1 - 1/p^2). Throws UnsupportedSize if
/// the value does not fit in 64 bits.
std::uint64_t sl2_group_order(Modulus modulus);

/// Same value, saturating at UINT64_MAX instead of throwing.
std::uint64_t sl2_group_order_saturating(Modulus modulus);

}  // namespace monoirr
