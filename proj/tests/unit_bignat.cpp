#include <random>
#include <string>

#include "doctest.h"

#include "ackinv/bignat.hpp"
#include "ackinv/cost.hpp"
#include "ackinv/errors.hpp"

using namespace ackinv;

TEST_SUITE("bignat") {

TEST_CASE("construction and small round trips") {
    CHECK(BigNat().is_zero());
    CHECK(BigNat(0).is_zero());
    CHECK(BigNat(0).size() == 1);
    CHECK(BigNat(1).try_to_u64() == 1);
    CHECK(BigNat(5).to_binary_string() == "101");
    CHECK(BigNat(0).to_binary_string() == "0");
    CHECK(BigNat::from_binary("101").try_to_u64() == 5);
    CHECK(BigNat::from_binary("000101").try_to_u64() == 5);
    CHECK(BigNat::from_binary("0").is_zero());
    CHECK(BigNat::from_decimal("18446744073709551615").try_to_u64() ==
          UINT64_MAX);
    CHECK(BigNat::from_decimal("0").is_zero());
    CHECK_THROWS_AS(BigNat::from_binary(""), SyntaxError);
    CHECK_THROWS_AS(BigNat::from_binary("102"), SyntaxError);
    CHECK_THROWS_AS(BigNat::from_decimal("12a"), SyntaxError);
}

TEST_CASE("random u64 agreement with machine arithmetic") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t a = rng() >> (i % 60);
        std::uint64_t b = rng() >> (i % 60);
        BigNat na(a);
        BigNat nb(b);
        CHECK(na.try_to_u64() == a);
        CHECK((na < nb) == (a < b));
        CHECK((na == nb) == (a == b));
        CHECK(bit_length(na) == bit_length_u64(a));
        CHECK(ceil_log2(na) == ceil_log2_u64(a));
        CHECK(BigNat::from_decimal(std::to_string(a)) == na);
        CHECK(BigNat::from_binary(na.to_binary_string()) == na);
        if (a != UINT64_MAX) CHECK(succ(na).try_to_u64() == a + 1);
        if (a != 0) CHECK(pred(na).try_to_u64() == a - 1);
    }
}

TEST_CASE("length and logarithm fixed points") {
    CHECK(bit_length(BigNat(0)) == 1);
    CHECK(bit_length(BigNat(1)) == 1);
    CHECK(bit_length(BigNat(5)) == 3);
    CHECK(ceil_log2(BigNat(0)) == 0);
    CHECK(ceil_log2(BigNat(1)) == 0);
    CHECK(ceil_log2(BigNat(2)) == 1);
    CHECK(ceil_log2(BigNat(5)) == 3);
    CHECK(ceil_log2(BigNat(8)) == 3);
    CHECK(ceil_log2_u64(0) == 0);
    CHECK(ceil_log2_u64(1) == 0);
    CHECK(ceil_log2_u64(16) == 4);
    CHECK(ceil_log2_u64(17) == 5);
    CHECK(bit_length_u64(0) == 1);
}

TEST_CASE("huge powers of two") {
    BigNat big = BigNat::power_of_two(100000);
    CHECK(big.size() == 100001);
    CHECK(is_power_of_two(big));
    CHECK(ceil_log2(big) == 100000);
    CHECK_FALSE(big.try_to_u64().has_value());
    CHECK_THROWS_AS(to_small(big), std::overflow_error);

    BigNat below = pred(big);
    CHECK(bit_length(below) == 100000);
    CHECK_FALSE(is_power_of_two(below));
    CHECK(ceil_log2(below) == 100000);
    CHECK(succ(below) == big);
    CHECK(below < big);
}

TEST_CASE("pred of zero underflows") {
    CHECK_THROWS_AS(pred(BigNat(0)), std::underflow_error);
    CHECK(pred(BigNat(1)).is_zero());
}

TEST_CASE("logarithm cost stays linear in the input length") {
    for (std::uint64_t bits : {std::uint64_t{1} << 10, std::uint64_t{1} << 15,
                               std::uint64_t{1} << 20}) {
        BigNat all_ones = pred(BigNat::power_of_two(bits));  // exactly `bits` digits
        CostMeter meter;
        {
            MeterScope scope(meter);
            CHECK(ceil_log2(all_ones) == bits);
        }
        CHECK(meter.count() >= 2 * bits);
        CHECK(meter.count() <= 4 * bits + 16);
    }
}

TEST_CASE("meter scopes nest and detach") {
    CostMeter outer;
    {
        MeterScope outer_scope(outer);
        bit_length(BigNat(5));
        CostMeter inner;
        {
            MeterScope inner_scope(inner);
            bit_length(BigNat(5));
        }
        CHECK(inner.count() > 0);
        std::uint64_t outer_before = outer.count();
        bit_length(BigNat(5));
        CHECK(outer.count() > outer_before);
    }
    std::uint64_t after_detach = outer.count();
    bit_length(BigNat(5));
    CHECK(outer.count() == after_detach);
}

TEST_CASE("literal grammar accepts the documented forms") {
    CHECK(parse_literal("0").is_zero());
    CHECK(parse_literal("65536").try_to_u64() == 65536);
    CHECK(parse_literal("0b101").try_to_u64() == 5);
    CHECK(parse_literal("0x1f").try_to_u64() == 31);
    CHECK(parse_literal("0x1F").try_to_u64() == 31);
    CHECK(parse_literal("pow2(16)").try_to_u64() == 65536);
    CHECK(parse_literal("pow2(0)").try_to_u64() == 1);
    CHECK(parse_literal("pow2(pow2(4))").try_to_u64() == 65536);
    CHECK(parse_literal("tower(0,5)").try_to_u64() == 5);
    CHECK(parse_literal("tower(1,10)").try_to_u64() == 1024);
    CHECK(parse_literal("tower(3,3)") == BigNat::power_of_two(256));
    CHECK(parse_literal("tower(4,2)") == BigNat::power_of_two(65536));
    CHECK(parse_literal("tower(4,2)").size() == 65537);
}

TEST_CASE("literal grammar rejects junk") {
    CHECK_THROWS_AS(parse_literal(""), SyntaxError);
    CHECK_THROWS_AS(parse_literal("5x"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("007"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("0b"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("0b2"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("0x"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("pow2(5"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("pow2()"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("tower(3)"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("tower(3,)"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("12,3"), SyntaxError);
    CHECK_THROWS_AS(parse_literal(" 5"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("pow2 (5)"), SyntaxError);
    CHECK_THROWS_AS(parse_literal("-3"), SyntaxError);
    std::string deep = "1";
    for (int i = 0; i < 70; ++i) deep = "pow2(" + deep + ")";
    CHECK_THROWS_AS(parse_literal(deep), SyntaxError);
}

TEST_CASE("materialization honors the bit budget") {
    CHECK(parse_literal("pow2(1000)", 1001).size() == 1001);
    CHECK_THROWS_AS(parse_literal("pow2(1000)", 1000), BudgetExceeded);
    CHECK_THROWS_AS(parse_literal("pow2(pow2(30))"), BudgetExceeded);
    CHECK_THROWS_AS(parse_literal("pow2(67108864)"), BudgetExceeded);
    CHECK(parse_literal("pow2(67108863)").size() == std::uint64_t{1} << 26);
    CHECK_THROWS_AS(parse_literal("tower(10,2)"), BudgetExceeded);
    CHECK_THROWS_AS(parse_literal("65536", 10), BudgetExceeded);
    CHECK_THROWS_AS(parse_literal("0b10000000", 7), BudgetExceeded);
    CHECK(parse_literal("0b10000000", 8).try_to_u64() == 128);
    CHECK_THROWS_AS(parse_literal("0xffff", 15), BudgetExceeded);
}

}  // TEST_SUITE
