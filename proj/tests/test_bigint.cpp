#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skeinlab/bigint.hpp"

using skeinlab::BigInt;

TEST_CASE("small value construction and printing") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1000000000).to_string() == "1000000000");
    CHECK(BigInt(-2147483648LL).to_string() == "-2147483648");
    CHECK(BigInt(9223372036854775807LL).to_string() == "9223372036854775807");
}

TEST_CASE("decimal string round trip") {
    for (const char* text : {"0", "1", "-1", "999999999", "1000000000",
                             "123456789012345678901234567890",
                             "-987654321098765432109876543210987654321"}) {
        CHECK(BigInt::from_string(text).to_string() == text);
    }
    CHECK(BigInt::from_string("0000123").to_string() == "123");
    CHECK(BigInt::from_string("-000").to_string() == "0");
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x3"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("-"), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with native integers on small values") {
    std::mt19937 rng(7321);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("large products match frozen references") {
    // 40! by repeated multiplication
    BigInt fact(1);
    for (int i = 2; i <= 40; ++i) fact *= BigInt(i);
    CHECK(fact.to_string() == "815915283247897734345611269596115894272000000000");

    BigInt big = BigInt::from_string("1000000000000000000000000000000");
    CHECK(((big + BigInt(7)) * (big - BigInt(7))).to_string() ==
          "999999999999999999999999999999999999999999999999999999999951");
}

TEST_CASE("addition cancels across limb boundaries") {
    BigInt big = BigInt::from_string("1000000000000000000");
    CHECK((big + (-big)).is_zero());
    CHECK((big - BigInt(1)).to_string() == "999999999999999999");
    CHECK((-big + BigInt(1)).to_string() == "-999999999999999999");
}

TEST_CASE("exact quotient") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> dist(-99999, 99999);
    for (int trial = 0; trial < 500; ++trial) {
        BigInt a(dist(rng)), b(dist(rng));
        if (b.is_zero()) continue;
        auto q = (a * b).exact_quotient(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK(!BigInt(7).exact_quotient(BigInt(2)).has_value());
    CHECK(!BigInt(1).exact_quotient(BigInt(0)).has_value());
    CHECK(BigInt(0).exact_quotient(BigInt(5)).value() == BigInt(0));
    BigInt huge = BigInt::from_string("815915283247897734345611269596115894272000000000");
    CHECK(huge.exact_quotient(BigInt::from_string("2432902008176640000")).has_value());  // 40!/20!
}
