#include "obound/semigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace obound {

NumericalSemigroup NumericalSemigroup::from_members(std::vector<Int> members_below, Int conductor)
{
    if (conductor < 0) throw Error(Errc::UnsortedOrOutOfRange, "negative conductor");
    if (conductor == 0) {
        if (!members_below.empty())
            throw Error(Errc::UnsortedOrOutOfRange, "conductor 0 admits no members below it");
        return {};
    }
    if (members_below.empty() || members_below.front() != 0)
        throw Error(Errc::UnsortedOrOutOfRange, "0 must be the first member");
    for (std::size_t k = 0; k < members_below.size(); ++k) {
        const Int x = members_below[k];
        if (x >= conductor)
            throw Error(Errc::UnsortedOrOutOfRange, std::to_string(x) + " is not below the conductor");
        if (k > 0 && x <= members_below[k - 1])
            throw Error(Errc::UnsortedOrOutOfRange, "members are not strictly increasing");
    }
    if (members_below.back() == conductor - 1)
        throw Error(Errc::ConductorPredecessorIsMember,
                    std::to_string(conductor - 1) + " is listed but the conductor is " + std::to_string(conductor));

    NumericalSemigroup s(std::move(members_below), conductor);
    const auto& m = s.members_;
    for (std::size_t a = 1; a < m.size(); ++a) {
        for (std::size_t b = a; b < m.size(); ++b) {
            const Int sum = m[a] + m[b];
            if (sum >= conductor) break;
            if (!s.contains(sum))
                throw Error(Errc::NotClosedUnderAddition, std::to_string(m[a]) + " + " + std::to_string(m[b]) +
                                                              " = " + std::to_string(sum) + " is missing");
        }
    }
    return s;
}

bool NumericalSemigroup::contains(Int x) const noexcept
{
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return std::binary_search(members_.begin(), members_.end(), x);
}

Int NumericalSemigroup::enumerate(Int i) const
{
    if (i < 0) throw Error(Errc::InvalidArgument, "negative index");
    const Int n = static_cast<Int>(members_.size());
    if (i < n) return members_[static_cast<std::size_t>(i)];
    return checked_add(conductor_, i - n);
}

Int NumericalSemigroup::inverse_enumerate(Int x) const
{
    if (!contains(x)) throw Error(Errc::NotAMember, std::to_string(x) + " is a gap");
    if (x >= conductor_) return static_cast<Int>(members_.size()) + (x - conductor_);
    return std::lower_bound(members_.begin(), members_.end(), x) - members_.begin();
}

Int NumericalSemigroup::floor(Int k) const
{
    if (k < 0) throw Error(Errc::InvalidArgument, "semigroup floor of a negative integer");
    if (k >= conductor_) return k;
    return *(std::upper_bound(members_.begin(), members_.end(), k) - 1);
}

Int nu_bruteforce(const NumericalSemigroup& s, Int i)
{
    const Int x = s.enumerate(i);
    Int count = 0;
    // lambda_j > lambda_i for j > i, so the difference is negative there
    for (Int j = 0; j <= i; ++j)
        if (s.contains(x - s.enumerate(j))) ++count;
    return count;
}

Int order_bound_bruteforce(const NumericalSemigroup& s, Int i)
{
    if (i < 0) throw Error(Errc::InvalidArgument, "negative index");
    const Int tail_start = checked_sub(checked_mul(2, s.conductor()), s.genus());
    const Int last = std::max(checked_add(i, 1), tail_start);
    Int best = nu_bruteforce(s, i + 1);
    for (Int j = i + 2; j <= last; ++j) best = std::min(best, nu_bruteforce(s, j));
    return best;
}

std::vector<Int> nu_sequence(const NumericalSemigroup& s, Int count)
{
    if (count < 0) throw Error(Errc::InvalidArgument, "negative count");
    std::vector<Int> out;
    if (count == 0) return out;
    out.reserve(static_cast<std::size_t>(count));

    const Int c = s.conductor();
    const auto small = s.members_below_conductor();
    const Int top = s.enumerate(count - 1);

    // pairs[x] = #{(a, b) : a, b members below c, a + b = x}, for x <= min(top, 2c - 2)
    const Int pair_limit = std::min(top, 2 * c - 2);
    std::vector<std::uint32_t> pairs(static_cast<std::size_t>(std::max<Int>(pair_limit + 1, 0)), 0);
    for (Int a : small) {
        for (Int b : small) {
            if (a + b > pair_limit) break;
            ++pairs[static_cast<std::size_t>(a + b)];
        }
    }

    for (Int i = 0; i < count; ++i) {
        const Int x = s.enumerate(i);
        Int total = x <= pair_limit ? static_cast<Int>(pairs[static_cast<std::size_t>(x)]) : 0;
        // one summand below c and the other at or above it, in either order
        if (x >= c) {
            const Int below = std::upper_bound(small.begin(), small.end(), x - c) - small.begin();
            total += 2 * below;
        }
        // both summands at or above c
        if (x >= 2 * c) total += x - 2 * c + 1;
        out.push_back(total);
    }
    return out;
}

std::vector<Int> order_bound_sequence(const NumericalSemigroup& s, Int count)
{
    if (count < 0) throw Error(Errc::InvalidArgument, "negative count");
    const Int tail_start = checked_sub(checked_mul(2, s.conductor()), s.genus());
    const Int last = std::max(count, tail_start);
    const auto nu = nu_sequence(s, last + 1);

    std::vector<Int> out(static_cast<std::size_t>(count));
    Int best = nu[static_cast<std::size_t>(last)];
    for (Int j = last - 1; j >= 0; --j) {
        if (j < count) out[static_cast<std::size_t>(j)] = best;
        best = std::min(best, nu[static_cast<std::size_t>(j)]);
    }
    return out;
}

BoundTable bound_table(const NumericalSemigroup& s, Int rows)
{
    if (rows < 1) throw Error(Errc::InvalidArgument, "a bound table needs at least one row");
    const auto nu = nu_sequence(s, rows);
    const auto delta = order_bound_sequence(s, rows);
    BoundTable table;
    table.rows.reserve(static_cast<std::size_t>(rows));
    for (Int i = 0; i < rows; ++i) {
        const auto k = static_cast<std::size_t>(i);
        table.rows.push_back({i, s.enumerate(i), nu[k], delta[k]});
    }
    return table;
}

} // namespace obound
