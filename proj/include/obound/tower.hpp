#ifndef OBOUND_TOWER_HPP
#define OBOUND_TOWER_HPP

#include <vector>

#include "obound/checked.hpp"
#include "obound/semigroup.hpp"

namespace obound {

/// Default cap on the conductor of any semigroup we materialize.
inline constexpr Int kDefaultMemberBudget = Int{1} << 26;

/// kDefaultMemberBudget, or the decimal value of SEMIGROUP_BUDGET when set.
[[nodiscard]] Int member_budget_from_env();

/**
 * Selects the semigroup of level m of the tower over base q.
 *
 * The constructor refuses q < 2 or m < 1 (InvalidArgument) and any level
 * where 2 q^m does not fit in Int (Overflow). q need not be a prime power;
 * the closed forms are purely arithmetic.
 */
class TowerParams {
public:
    TowerParams(Int q, Int m);

    [[nodiscard]] Int q() const noexcept { return q_; }
    [[nodiscard]] Int m() const noexcept { return m_; }

    friend bool operator==(const TowerParams&, const TowerParams&) = default;

private:
    Int q_;
    Int m_;
};

/// Conductor of level `level` (>= 1) over q: q^level - q^floor((level+1)/2).
[[nodiscard]] Int conductor_at(Int q, Int level);

/// Genus of level `level` over q: (q^floor((level+1)/2) - 1)(q^ceil((level-1)/2) - 1).
[[nodiscard]] Int genus_at(Int q, Int level);

[[nodiscard]] Int conductor_formula(const TowerParams& p);
[[nodiscard]] Int genus_formula(const TowerParams& p);

/// Builds the level by iterating S_1 = N0, S_k = q S_{k-1} u {x >= c_k}.
/// Each intermediate conductor threshold must be <= budget.
[[nodiscard]] NumericalSemigroup build_recursive(const TowerParams& p, Int budget = kDefaultMemberBudget);

/// The interval A_i = [q^{2i-1} - q^i, q^{2i-1} - q^{i-1} - 1], optionally
/// paired with the multiplier it carries inside a given level.
struct BlockA {
    Int i = 1;
    Int start = 0;
    Int length = 0;
    Int scale = 1;

    [[nodiscard]] Int last() const { return start + length - 1; }
    [[nodiscard]] Int scaled_min() const { return checked_mul(scale, start); }
    [[nodiscard]] Int scaled_max() const { return checked_mul(scale, last()); }

    friend bool operator==(const BlockA&, const BlockA&) = default;
};

/// A_i with scale 1.
[[nodiscard]] BlockA block_A(Int q, Int i);

/// A_1 .. A_{floor(m/2)}, each with scale q^{m-2i+1}.
[[nodiscard]] std::vector<BlockA> scaled_blocks(const TowerParams& p);

/// Builds the level as the disjoint union of the scaled blocks and the
/// tail {x >= c_m}. Throws DisjointnessViolation if the blocks overlap.
[[nodiscard]] NumericalSemigroup build_closed(const TowerParams& p, Int budget = kDefaultMemberBudget);

struct IndexDecomposition {
    Int l = 1;
    Int j = 0;

    friend bool operator==(const IndexDecomposition&, const IndexDecomposition&) = default;
};

/// The unique (l, j) with t = q^{l-1} + j - 1 and 0 <= j < q^{l-1}(q-1).
[[nodiscard]] IndexDecomposition decompose_t(Int q, Int t);

/// lambda_t of the level, without materializing it.
[[nodiscard]] Int lambda_closed(const TowerParams& p, Int t);

/// Index of the semigroup floor of k, i.e. lambda^{-1}(floor_S(k)).
[[nodiscard]] Int inverse_floor_closed(const TowerParams& p, Int k);

/// nu_i via the four-case recursion on the level.
[[nodiscard]] Int nu_closed(const TowerParams& p, Int i);

/// delta_i expressed through nu_{i+1} or nu_{i+2}.
[[nodiscard]] Int order_bound_via_nu(const TowerParams& p, Int i);

/// delta_i in closed form. The middle branch floors the quotient
/// (i + 1 + g - c) / q^{2a-m-1}; see order_bound_unfloored().
[[nodiscard]] Int order_bound_closed(const TowerParams& p, Int i);

/// Exact rational num/den, den > 0, in lowest terms.
struct Rational {
    Int num = 0;
    Int den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// order_bound_closed() with the middle-branch quotient taken as an exact
/// rational instead of a floor. Kept to pin the difference in tests; it
/// disagrees with the true bound, e.g. at q = 2, m = 3, i = 2 it gives 3.
[[nodiscard]] Rational order_bound_unfloored(const TowerParams& p, Int i);

} // namespace obound

#endif // OBOUND_TOWER_HPP
