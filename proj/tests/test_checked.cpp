#include "doctest.h"

#include <limits>

#include "obound/checked.hpp"

using namespace obound;

TEST_CASE("integer logs agree with repeated multiplication")
{
    for (Int base = 2; base <= 10; ++base) {
        for (Int x = 1; x <= 5000; ++x) {
            Int lo = 0;
            while (checked_pow(base, lo + 1) <= x) ++lo;
            Int hi = 0;
            while (checked_pow(base, hi) < x) ++hi;
            REQUIRE(floor_log(base, x) == lo);
            REQUIRE(ceil_log(base, x) == hi);
        }
    }
}

TEST_CASE("integer logs at exact powers and near the top of the range")
{
    CHECK(floor_log(2, 1) == 0);
    CHECK(ceil_log(2, 1) == 0);
    CHECK(floor_log(3, 27) == 3);
    CHECK(ceil_log(3, 27) == 3);
    CHECK(ceil_log(3, 28) == 4);
    constexpr Int max = std::numeric_limits<Int>::max();
    CHECK(floor_log(2, max) == 62);
    CHECK(ceil_log(2, max) == 63);
    CHECK(ceil_log(10, max) == 19);
}

TEST_CASE("checked arithmetic reports overflow")
{
    constexpr Int max = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS((void)checked_add(max, 1), Error);
    CHECK_THROWS_AS((void)checked_sub(-max - 1, 1), Error);
    CHECK_THROWS_AS((void)checked_mul(Int{1} << 32, Int{1} << 31), Error);
    CHECK_THROWS_AS((void)checked_pow(2, 63), Error);
    CHECK(checked_pow(2, 62) == Int{1} << 62);
    try {
        (void)checked_pow(10, 19);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Overflow);
    }
}
