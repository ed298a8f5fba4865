#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "monoirr/budget.hpp"
#include "monoirr/modular.hpp"

namespace monoirr {

/// An ordered tuple (a_1, ..., a_n), n >= 1, over a single modulus.
class SolutionTuple {
   public:
    /// Reduces every value mod N. Throws InvalidArgument on an empty tuple.
    SolutionTuple(Modulus modulus, std::span<const std::int64_t> values);
    SolutionTuple(Modulus modulus, std::initializer_list<std::int64_t> values)
        : SolutionTuple(modulus, std::span<const std::int64_t>(values.begin(), values.size())) {}
    /// Throws InvalidArgument on an empty span or mixed moduli.
    explicit SolutionTuple(std::span<const Residue> entries);

    /// n copies of k.
    static SolutionTuple monomial(Modulus modulus, std::uint64_t k, std::size_t n);

    Modulus modulus() const noexcept { return modulus_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::uint64_t operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::vector<Residue> residues() const;

    SolutionTuple negated() const;
    SolutionTuple reversed() const;
    /// (a_{1+r}, ..., a_n, a_1, ..., a_r).
    SolutionTuple rotated(std::size_t r) const;

    bool operator==(const SolutionTuple&) const = default;
    /// Lexicographic on the canonical values; moduli must agree.
    bool operator<(const SolutionTuple& rhs) const { return values_ < rhs.values_; }

   private:
    SolutionTuple(Modulus modulus, std::vector<std::uint64_t> canonical);

    Modulus modulus_;
    std::vector<std::uint64_t> values_;
};

std::ostream& operator<<(std::ostream& os, const SolutionTuple& t);

enum class SolutionSign { plus, minus, none };

const char* to_string(SolutionSign s) noexcept;

/// Whether M_n(t) is Id, -Id or neither. Id = -Id when N = 2; that case is
/// reported as plus.
SolutionSign solution_sign(const SolutionTuple& t);

inline bool is_solution(const SolutionTuple& t) { return solution_sign(t) != SolutionSign::none; }

/// (a_1 + b_m, a_2, ..., a_{n-1}, a_n + b_1, b_2, ..., b_{m-1}).
/// Throws InvalidArgument if either side has fewer than two entries or the
/// moduli differ.
SolutionTuple oplus(const SolutionTuple& a, const SolutionTuple& b);

/// Image of t under a dihedral motion: reverse first when `reflected`, then
/// rotate left by `rotation`.
SolutionTuple dihedral_image(const SolutionTuple& t, std::size_t rotation, bool reflected);

/// Lexicographically least tuple among the rotations of t and of its reversal.
SolutionTuple canonical_form(const SolutionTuple& t);

inline bool equivalent(const SolutionTuple& a, const SolutionTuple& b) {
    return a.size() == b.size() && a.modulus() == b.modulus() && canonical_form(a) == canonical_form(b);
}

/// All solutions of size n over Z/NZ, in lexicographic order. Throws
/// UnsupportedSize when N^n exceeds the budget.
std::vector<SolutionTuple> enumerate_solutions(Modulus modulus, unsigned n, const WorkBudget& budget = {});

/// Witness that a target solution is reducible: the dihedral image of the
/// target selected by (rotation, reflected) equals left (+) right, and both
/// parts are solutions of size >= 3.
struct Decomposition {
    SolutionTuple left;
    SolutionTuple right;
    std::size_t rotation = 0;
    bool reflected = false;
};

/// Checks every clause of the Decomposition invariant against `target`.
bool replays(const Decomposition& d, const SolutionTuple& target);

/// Brute-force reducibility test. Images are scanned as rotations
/// 0..n-1 of t, then rotations of the reversal; splits by ascending left
/// size m in [3, n-1]; and the two free junction entries (first and last of
/// the left part) by ascending value. Returns the first decomposition found,
/// or nullopt when t is irreducible.
///
/// Throws InvalidArgument if t is not a solution or has fewer than three
/// entries, UnsupportedSize if 2 n^2 N^2 exceeds the budget.
std::optional<Decomposition> is_reducible_generic(const SolutionTuple& t, const WorkBudget& budget = {});

}  // namespace monoirr
