#include "obound/tower.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obound {

namespace {

std::string describe(const TowerParams& p)
{
    return "(q=" + std::to_string(p.q()) + ", m=" + std::to_string(p.m()) + ")";
}

void require_within_budget(const TowerParams& p, Int conductor, Int budget)
{
    if (conductor > budget)
        throw Error(Errc::BudgetExceeded, "conductor " + std::to_string(conductor) + " of " + describe(p) +
                                              " exceeds the member budget " + std::to_string(budget));
}

} // namespace

Int member_budget_from_env()
{
    const char* raw = std::getenv("SEMIGROUP_BUDGET");
    if (raw == nullptr) return kDefaultMemberBudget;
    const std::string_view text(raw);
    Int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value < 0)
        throw Error(Errc::InvalidArgument, "SEMIGROUP_BUDGET is not a non-negative decimal integer");
    return value;
}

TowerParams::TowerParams(Int q, Int m) : q_(q), m_(m)
{
    if (q < 2) throw Error(Errc::InvalidArgument, "q must be at least 2, got " + std::to_string(q));
    if (m < 1) throw Error(Errc::InvalidArgument, "m must be at least 1, got " + std::to_string(m));
    try {
        (void)checked_mul(2, checked_pow(q, m));
    } catch (const Error&) {
        throw Error(Errc::Overflow, "2*q^m does not fit in 64 bits for " + describe(*this));
    }
}

Int conductor_at(Int q, Int level)
{
    return checked_sub(checked_pow(q, level), checked_pow(q, (level + 1) / 2));
}

Int genus_at(Int q, Int level)
{
    return checked_mul(checked_pow(q, (level + 1) / 2) - 1, checked_pow(q, level / 2) - 1);
}

Int conductor_formula(const TowerParams& p) { return conductor_at(p.q(), p.m()); }

Int genus_formula(const TowerParams& p) { return genus_at(p.q(), p.m()); }

NumericalSemigroup build_recursive(const TowerParams& p, Int budget)
{
    const Int q = p.q();
    require_within_budget(p, conductor_formula(p), budget);

    NumericalSemigroup current;
    for (Int level = 2; level <= p.m(); ++level) {
        const Int threshold = conductor_at(q, level);
        require_within_budget(p, threshold, budget);

        // membership of q * S_{level-1} below the threshold; everything above is added wholesale
        std::vector<char> member(static_cast<std::size_t>(threshold), 0);
        for (Int a : current.members_below_conductor())
            if (q * a < threshold) member[static_cast<std::size_t>(q * a)] = 1;
        for (Int x = current.conductor(); q * x < threshold; ++x) member[static_cast<std::size_t>(q * x)] = 1;

        Int conductor = threshold;
        while (conductor > 0 && member[static_cast<std::size_t>(conductor - 1)]) --conductor;

        std::vector<Int> below;
        for (Int x = 0; x < conductor; ++x)
            if (member[static_cast<std::size_t>(x)]) below.push_back(x);
        current = NumericalSemigroup::from_members(std::move(below), conductor);
    }
    return current;
}

BlockA block_A(Int q, Int i)
{
    if (q < 2 || i < 1) throw Error(Errc::InvalidArgument, "block_A needs q >= 2 and i >= 1");
    BlockA block;
    block.i = i;
    block.start = conductor_at(q, 2 * i - 1);
    block.length = checked_mul(checked_pow(q, i - 1), q - 1);
    return block;
}

std::vector<BlockA> scaled_blocks(const TowerParams& p)
{
    std::vector<BlockA> blocks;
    for (Int i = 1; i <= p.m() / 2; ++i) {
        BlockA block = block_A(p.q(), i);
        block.scale = checked_pow(p.q(), p.m() - 2 * i + 1);
        blocks.push_back(block);
    }
    return blocks;
}

NumericalSemigroup build_closed(const TowerParams& p, Int budget)
{
    const Int conductor = conductor_formula(p);
    require_within_budget(p, conductor, budget);

    std::vector<Int> members;
    Int previous_max = -1;
    for (const BlockA& block : scaled_blocks(p)) {
        if (block.scaled_min() <= previous_max)
            throw Error(Errc::DisjointnessViolation, "block A_" + std::to_string(block.i) + " of " + describe(p) +
                                                         " overlaps its predecessor");
        for (Int j = 0; j < block.length; ++j) members.push_back(block.scale * (block.start + j));
        previous_max = block.scaled_max();
    }
    if (previous_max >= conductor)
        throw Error(Errc::DisjointnessViolation, "scaled blocks of " + describe(p) + " reach the conductor");
    return NumericalSemigroup::from_members(std::move(members), conductor);
}

IndexDecomposition decompose_t(Int q, Int t)
{
    if (q < 2 || t < 0) throw Error(Errc::InvalidArgument, "decompose_t needs q >= 2 and t >= 0");
    const Int l = floor_log(q, checked_add(t, 1)) + 1;
    const Int block_start = checked_pow(q, l - 1);
    const Int j = t - block_start + 1;
    if (block_start + j - 1 != t || j < 0 || j > checked_mul(block_start, q - 1) - 1)
        throw std::logic_error("decompose_t: defining identity does not hold for t=" + std::to_string(t));
    return {l, j};
}

Int lambda_closed(const TowerParams& p, Int t)
{
    if (t < 0) throw Error(Errc::InvalidArgument, "negative index");
    const Int q = p.q();
    const Int m = p.m();
    const Int head = checked_pow(q, m / 2);
    if (t >= head - 1) return checked_add(conductor_formula(p), t - head + 1);

    const auto [l, j] = decompose_t(q, t);
    return checked_mul(checked_pow(q, m - 2 * l + 1), conductor_at(q, 2 * l - 1) + j);
}

Int inverse_floor_closed(const TowerParams& p, Int k)
{
    if (k < 0) throw Error(Errc::InvalidArgument, "semigroup floor of a negative integer");
    const Int q = p.q();
    const Int m = p.m();
    const Int c = conductor_formula(p);
    if (k >= c) return k - genus_formula(p);

    const Int l = m + 1 - ceil_log(q, checked_pow(q, m) - k);
    return checked_pow(q, l - 1) - 1 + k / checked_pow(q, m - 2 * l + 1) - conductor_at(q, 2 * l - 1);
}

Int nu_closed(const TowerParams& p, Int i)
{
    if (i < 0) throw Error(Errc::InvalidArgument, "negative index");
    const Int q = p.q();
    const Int m = p.m();
    if (m == 1) return checked_add(i, 1);

    const Int c = conductor_formula(p);
    const Int g = genus_formula(p);
    if (i <= c - g) return nu_closed(TowerParams(q, m - 1), i);
    if (i <= 2 * c - g) {
        const Int value = i + g;
        if (value % q == 0) return nu_closed(TowerParams(q, m - 1), value / q - genus_at(q, m - 1));
        return checked_add(2, checked_mul(2, inverse_floor_closed(p, value - c - 1)));
    }
    return i - g + 1;
}

Int order_bound_via_nu(const TowerParams& p, Int i)
{
    if (i < 0) throw Error(Errc::InvalidArgument, "negative index");
    const Int c = conductor_formula(p);
    const Int g = genus_formula(p);
    if (i <= c - g) return 2;
    if (i <= 2 * c - g - 2 && (i + 1 + g) % p.q() == 0) return nu_closed(p, i + 2);
    return nu_closed(p, checked_add(i, 1));
}

namespace {

struct MiddleBranch {
    Int power_term;    // 2 q^{m-alpha} - 2 c_{2m-2alpha+1}
    Int numerator;     // i + 1 + g - c
    Int denominator;   // q^{2alpha-m-1}
};

MiddleBranch middle_branch(const TowerParams& p, Int i, Int c, Int g)
{
    const Int q = p.q();
    const Int m = p.m();
    const Int shifted = i + 1 + g - c;
    const Int alpha = ceil_log(q, checked_pow(q, m) - shifted);
    return {2 * checked_pow(q, m - alpha) - 2 * conductor_at(q, 2 * m - 2 * alpha + 1), shifted,
            checked_pow(q, 2 * alpha - m - 1)};
}

} // namespace

Int order_bound_closed(const TowerParams& p, Int i)
{
    if (i < 0) throw Error(Errc::InvalidArgument, "negative index");
    const Int c = conductor_formula(p);
    const Int g = genus_formula(p);
    if (i <= c - g) return 2;
    if (i > 2 * c - g - 2) return checked_add(i - g, 2);
    const auto branch = middle_branch(p, i, c, g);
    return branch.power_term + 2 * (branch.numerator / branch.denominator);
}

Rational order_bound_unfloored(const TowerParams& p, Int i)
{
    if (i < 0) throw Error(Errc::InvalidArgument, "negative index");
    const Int c = conductor_formula(p);
    const Int g = genus_formula(p);
    if (i <= c - g) return {2, 1};
    if (i > 2 * c - g - 2) return {checked_add(i - g, 2), 1};
    const auto branch = middle_branch(p, i, c, g);
    const Int num = checked_add(checked_mul(branch.power_term, branch.denominator), 2 * branch.numerator);
    const Int divisor = std::gcd(num, branch.denominator);
    return {num / divisor, branch.denominator / divisor};
}

} // namespace obound
