#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "sds/natural.hpp"

using sds::Natural;

TEST_CASE("small values behave like machine integers") {
    CHECK(Natural().is_zero());
    CHECK(Natural(0).is_zero());
    CHECK(Natural(1).str() == "1");
    CHECK(Natural(123456789).str() == "123456789");
    CHECK(Natural(UINT64_MAX).str() == "18446744073709551615");
    CHECK(Natural(7) == Natural(7));
    CHECK(Natural(7) < Natural(8));
    CHECK(Natural(8) > Natural(7));
    CHECK((Natural(3) + Natural(4)).str() == "7");
    CHECK((Natural(6) * 7).str() == "42");
    CHECK((Natural(6) * 0).is_zero());
}

TEST_CASE("carries across limb boundaries") {
    Natural a(UINT64_MAX);
    CHECK((a + Natural(1)).str() == "18446744073709551616");  // 2^64
    Natural b(UINT64_MAX);
    b *= 2;
    CHECK(b.str() == "36893488147419103230");
    CHECK(!b.fits_u64());
    CHECK(Natural(5) < b);
    CHECK(b > Natural(5));
}

TEST_CASE("powers match an independent decimal expansion") {
    Natural p(1);
    for (int i = 0; i < 49; ++i) p *= 49;
    CHECK(p.str() ==
          "66009724686219550843768321818371771650147004059278069406814190436565131829325062449");
    Natural q(1);
    for (int i = 0; i < 49; ++i) q *= 48;
    Natural sum = p + q;
    CHECK(sum.str() ==
          "90043424442865598164146099030351174285989081917393280111834562008636572332640428337");
    CHECK(p < sum);
    CHECK(q < p);
}

TEST_CASE("addition is commutative and associative on random values") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto random_natural = [&] {
            Natural n(rng());
            const int extra = static_cast<int>(rng() % 4);
            for (int i = 0; i < extra; ++i) {
                n *= rng() | 1;
                n += Natural(rng());
            }
            return n;
        };
        Natural a = random_natural(), b = random_natural(), c = random_natural();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + b) * 3 == a * 3 + b * 3);
        CHECK(a <= a + b);
        if (!b.is_zero()) CHECK(a < a + b);
    }
}

TEST_CASE("aliasing addition doubles in place") {
    Natural a(UINT64_MAX);
    a *= 123456789;
    Natural expected = a * 2;
    a += a;
    CHECK(a == expected);
}

TEST_CASE("comparison against 64-bit values") {
    Natural big(2);
    for (int i = 0; i < 100; ++i) big *= 2;
    CHECK(sds::compare_u64(UINT64_MAX, big) == std::strong_ordering::less);
    CHECK(sds::compare_u64(41, Natural(41)) == std::strong_ordering::equal);
    CHECK(sds::compare_u64(42, Natural(41)) == std::strong_ordering::greater);
}
