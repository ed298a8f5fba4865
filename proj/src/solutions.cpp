#include "monoirr/solutions.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "monoirr/errors.hpp"

namespace monoirr {

namespace {

// A(x) * m for the elementary factor A(x) = (x -1; 1 0), on raw entries.
std::array<std::uint64_t, 4> step_left(const Modulus& mod, std::uint64_t x, const std::array<std::uint64_t, 4>& m) {
    return {mod.sub(mod.mul(x, m[0]), m[2]), mod.sub(mod.mul(x, m[1]), m[3]), m[0], m[1]};
}

// m * A(x).
std::array<std::uint64_t, 4> step_right(const Modulus& mod, const std::array<std::uint64_t, 4>& m, std::uint64_t x) {
    return {mod.add(mod.mul(m[0], x), m[1]), mod.neg(m[0]), mod.add(mod.mul(m[2], x), m[3]), mod.neg(m[2])};
}

int raw_sign(const Modulus& mod, const std::array<std::uint64_t, 4>& m) {
    if (m[1] != 0 || m[2] != 0 || m[0] != m[3]) return 0;
    if (m[0] == 1) return 1;
    if (m[0] == mod.value() - 1) return -1;
    return 0;
}

std::array<std::uint64_t, 4> raw_product(const Modulus& mod, const std::uint64_t* first, std::size_t count) {
    std::array<std::uint64_t, 4> acc{1, 0, 0, 1};
    for (std::size_t i = 0; i < count; ++i) acc = step_left(mod, first[i], acc);
    return acc;
}

}  // namespace

SolutionTuple::SolutionTuple(Modulus modulus, std::vector<std::uint64_t> canonical)
    : modulus_(modulus), values_(std::move(canonical)) {}

SolutionTuple::SolutionTuple(Modulus modulus, std::span<const std::int64_t> values) : modulus_(modulus) {
    if (values.empty()) throw InvalidArgument("a tuple needs at least one entry");
    values_.reserve(values.size());
    for (std::int64_t v : values) values_.push_back(modulus.reduce(v));
}

SolutionTuple::SolutionTuple(std::span<const Residue> entries)
    : modulus_(entries.empty() ? throw InvalidArgument("a tuple needs at least one entry") : entries.front().modulus()) {
    values_.reserve(entries.size());
    for (const Residue& r : entries) {
        if (!(r.modulus() == modulus_)) throw InvalidArgument("tuple entries carry mixed moduli");
        values_.push_back(r.value());
    }
}

SolutionTuple SolutionTuple::monomial(Modulus modulus, std::uint64_t k, std::size_t n) {
    if (n == 0) throw InvalidArgument("a tuple needs at least one entry");
    return SolutionTuple(modulus, std::vector<std::uint64_t>(n, k % modulus.value()));
}

std::vector<Residue> SolutionTuple::residues() const {
    std::vector<Residue> out;
    out.reserve(values_.size());
    for (std::uint64_t v : values_) out.emplace_back(static_cast<std::int64_t>(v), modulus_);
    return out;
}

SolutionTuple SolutionTuple::negated() const {
    std::vector<std::uint64_t> out(values_);
    for (auto& v : out) v = modulus_.neg(v);
    return SolutionTuple(modulus_, std::move(out));
}

SolutionTuple SolutionTuple::reversed() const {
    return SolutionTuple(modulus_, std::vector<std::uint64_t>(values_.rbegin(), values_.rend()));
}

SolutionTuple SolutionTuple::rotated(std::size_t r) const {
    std::vector<std::uint64_t> out(values_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % out.size()), out.end());
    return SolutionTuple(modulus_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const SolutionTuple& t) {
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    return os << ")";
}

const char* to_string(SolutionSign s) noexcept {
    switch (s) {
        case SolutionSign::plus: return "+1";
        case SolutionSign::minus: return "-1";
        case SolutionSign::none: return "none";
    }
    return "none";
}

SolutionSign solution_sign(const SolutionTuple& t) {
    const int s = raw_sign(t.modulus(), raw_product(t.modulus(), t.values().data(), t.size()));
    if (s > 0) return SolutionSign::plus;
    if (s < 0) return SolutionSign::minus;
    return SolutionSign::none;
}

SolutionTuple oplus(const SolutionTuple& a, const SolutionTuple& b) {
    if (a.size() < 2 || b.size() < 2) throw InvalidArgument("oplus needs operands of size >= 2");
    if (!(a.modulus() == b.modulus())) throw InvalidArgument("oplus operands carry mixed moduli");
    const Modulus& mod = a.modulus();
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::int64_t> out;
    out.reserve(n + m - 2);
    out.push_back(static_cast<std::int64_t>(mod.add(a[0], b[m - 1])));
    for (std::size_t i = 1; i + 1 < n; ++i) out.push_back(static_cast<std::int64_t>(a[i]));
    out.push_back(static_cast<std::int64_t>(mod.add(a[n - 1], b[0])));
    for (std::size_t i = 1; i + 1 < m; ++i) out.push_back(static_cast<std::int64_t>(b[i]));
    return SolutionTuple(mod, out);
}

SolutionTuple dihedral_image(const SolutionTuple& t, std::size_t rotation, bool reflected) {
    return (reflected ? t.reversed() : t).rotated(rotation);
}

SolutionTuple canonical_form(const SolutionTuple& t) {
    const std::size_t n = t.size();
    const auto& v = t.values();
    // Track the best starting offset and direction without materializing images.
    std::size_t best_start = 0;
    bool best_rev = false;
    auto at = [&](std::size_t start, bool rev, std::size_t i) {
        return rev ? v[(start + n - i) % n] : v[(start + i) % n];
    };
    for (int pass = 0; pass < 2; ++pass) {
        const bool rev = pass == 1;
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                const auto x = at(s, rev, i), y = at(best_start, best_rev, i);
                if (x != y) {
                    if (x < y) {
                        best_start = s;
                        best_rev = rev;
                    }
                    break;
                }
            }
        }
    }
    std::vector<std::int64_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::int64_t>(at(best_start, best_rev, i));
    return SolutionTuple(t.modulus(), out);
}

std::vector<SolutionTuple> enumerate_solutions(Modulus modulus, unsigned n, const WorkBudget& budget) {
    if (n == 0) throw InvalidArgument("solution size must be at least 1");
    std::uint64_t work = 1;
    for (unsigned i = 0; i < n; ++i) work = saturating_mul(work, modulus.value());
    budget.require(work, "enumerate_solutions(" + std::to_string(modulus.value()) + ", " + std::to_string(n) + ")");

    const std::uint64_t N = modulus.value();
    std::vector<std::uint64_t> digits(n, 0);
    // prefix[i] = A(a_i) ... A(a_1), prefix[0] = Id.
    std::vector<std::array<std::uint64_t, 4>> prefix(n + 1);
    prefix[0] = {1, 0, 0, 1};
    for (unsigned i = 0; i < n; ++i) prefix[i + 1] = step_left(modulus, 0, prefix[i]);

    std::vector<SolutionTuple> out;
    while (true) {
        if (raw_sign(modulus, prefix[n]) != 0) {
            out.emplace_back(modulus, std::vector<std::int64_t>(digits.begin(), digits.end()));
        }
        // Odometer increment, last position fastest.
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && digits[pos] + 1 == N) {
            digits[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[pos];
        for (unsigned i = static_cast<unsigned>(pos); i < n; ++i) prefix[i + 1] = step_left(modulus, digits[i], prefix[i]);
    }
    return out;
}

bool replays(const Decomposition& d, const SolutionTuple& target) {
    if (d.left.size() < 3 || d.right.size() < 3) return false;
    if (!(d.left.modulus() == target.modulus()) || !(d.right.modulus() == target.modulus())) return false;
    if (d.left.size() + d.right.size() - 2 != target.size()) return false;
    if (d.rotation >= target.size()) return false;
    if (!is_solution(d.left) || !is_solution(d.right)) return false;
    return oplus(d.left, d.right) == dihedral_image(target, d.rotation, d.reflected);
}

std::optional<Decomposition> is_reducible_generic(const SolutionTuple& t, const WorkBudget& budget) {
    const std::size_t n = t.size();
    if (n < 3) throw InvalidArgument("reducibility is defined for solutions of size >= 3");
    if (!is_solution(t)) throw InvalidArgument("is_reducible_generic needs a solution");
    const Modulus& mod = t.modulus();
    const std::uint64_t N = mod.value();
    std::uint64_t work = saturating_mul(saturating_mul(2 * n, n), saturating_mul(N, N));
    budget.require(work, "is_reducible_generic");

    for (int pass = 0; pass < 2; ++pass) {
        const bool reflected = pass == 1;
        for (std::size_t r = 0; r < n; ++r) {
            const SolutionTuple image = dihedral_image(t, r, reflected);
            const auto& c = image.values();
            for (std::size_t m = 3; m + 1 <= n; ++m) {
                // left = (x, c[1..m-2], y), right = (c[m-1]-y, c[m..n-1], c[0]-x)
                const auto inner_left = raw_product(mod, c.data() + 1, m - 2);
                const auto inner_right = raw_product(mod, c.data() + m, n - m);
                for (std::uint64_t x = 0; x < N; ++x) {
                    const auto left_tail = step_right(mod, inner_left, x);
                    const auto right_head = step_left(mod, mod.sub(c[0], x), inner_right);
                    for (std::uint64_t y = 0; y < N; ++y) {
                        if (raw_sign(mod, step_left(mod, y, left_tail)) == 0) continue;
                        if (raw_sign(mod, step_right(mod, right_head, mod.sub(c[m - 1], y))) == 0) continue;
                        std::vector<std::int64_t> left, right;
                        left.push_back(static_cast<std::int64_t>(x));
                        for (std::size_t i = 1; i + 1 < m; ++i) left.push_back(static_cast<std::int64_t>(c[i]));
                        left.push_back(static_cast<std::int64_t>(y));
                        right.push_back(static_cast<std::int64_t>(mod.sub(c[m - 1], y)));
                        for (std::size_t i = m; i < n; ++i) right.push_back(static_cast<std::int64_t>(c[i]));
                        right.push_back(static_cast<std::int64_t>(mod.sub(c[0], x)));
                        return Decomposition{SolutionTuple(mod, left), SolutionTuple(mod, right), r, reflected};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace monoirr
