#ifndef OBOUND_SEMIGROUP_HPP
#define OBOUND_SEMIGROUP_HPP

#include <span>
#include <vector>

#include "obound/checked.hpp"

namespace obound {

/**
 * A numerical semigroup stored by its conductor and the sorted list of
 * members below the conductor. Every integer at or above the conductor is
 * a member.
 *
 * Instances are immutable once built; from_members() is the only way in
 * and it checks additive closure in O(n^2) over the listed members.
 */
class NumericalSemigroup {
public:
    /// The full semigroup N0.
    NumericalSemigroup() = default;

    static NumericalSemigroup from_members(std::vector<Int> members_below, Int conductor);

    [[nodiscard]] Int conductor() const noexcept { return conductor_; }
    [[nodiscard]] Int genus() const noexcept { return conductor_ - static_cast<Int>(members_.size()); }
    [[nodiscard]] std::span<const Int> members_below_conductor() const noexcept { return members_; }

    [[nodiscard]] bool contains(Int x) const noexcept;

    /// lambda_i, the (i+1)-th smallest member.
    [[nodiscard]] Int enumerate(Int i) const;

    /// The index i with enumerate(i) == x. Throws NotAMember for gaps.
    [[nodiscard]] Int inverse_enumerate(Int x) const;

    /// Largest member not exceeding k (k >= 0).
    [[nodiscard]] Int floor(Int k) const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
    NumericalSemigroup(std::vector<Int> members, Int conductor)
        : conductor_(conductor), members_(std::move(members))
    {
    }

    Int conductor_ = 0;
    std::vector<Int> members_;
};

// Brute-force quantities straight from the definitions. These are the
// oracle for every closed form in tower.hpp.

/// nu_i = #{j : lambda_i - lambda_j in S}, by scanning j = 0..i.
[[nodiscard]] Int nu_bruteforce(const NumericalSemigroup& s, Int i);

/// delta_i = min{nu_j : j > i}, scanned over i < j <= max(i+1, 2c-g).
[[nodiscard]] Int order_bound_bruteforce(const NumericalSemigroup& s, Int i);

/// nu_0 .. nu_{count-1} in one pass. Counts decompositions x = a + b of
/// x = lambda_i by splitting on whether a and b lie below the conductor,
/// which costs O(n^2 + count) for n members below the conductor.
[[nodiscard]] std::vector<Int> nu_sequence(const NumericalSemigroup& s, Int count);

/// delta_0 .. delta_{count-1} by suffix minima over nu_sequence().
[[nodiscard]] std::vector<Int> order_bound_sequence(const NumericalSemigroup& s, Int count);

struct BoundRow {
    Int i = 0;
    Int lambda = 0;
    Int nu = 0;
    Int delta = 0;

    friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

struct BoundTable {
    std::vector<BoundRow> rows;

    friend bool operator==(const BoundTable&, const BoundTable&) = default;
};

/// First `rows` rows of (i, lambda_i, nu_i, delta_i) from the brute-force side.
[[nodiscard]] BoundTable bound_table(const NumericalSemigroup& s, Int rows);

} // namespace obound

#endif // OBOUND_SEMIGROUP_HPP
