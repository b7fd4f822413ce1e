#include <doctest.h>

#include <cmath>

#include "rolap/counting.hpp"
#include "rolap/error.hpp"
#include "rolap/word.hpp"

using rolap::BigInt;
using rolap::Rational;

namespace {

std::uint64_t brute_no_zero_run(int len, int z) {
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
        int run = 0;
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
            run = ((w >> i) & 1U) ? 0 : run + 1;
            ok = run < z;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("n-step Fibonacci examples") {
    CHECK(rolap::fib_nstep(4, 6) == 15);
    CHECK(rolap::fib_nstep(2, 3) == 2);
    CHECK(rolap::fib_nstep(3, 5) == 7);
    CHECK(rolap::fib_nstep(3, 0) == 0);
    CHECK(rolap::fib_nstep(3, -1) == 0);
    CHECK(rolap::fib_nstep(1, 50) == 1);
    CHECK_THROWS_AS((void)rolap::fib_nstep(3, -2), rolap::DomainError);
    CHECK_THROWS_AS((void)rolap::fib_nstep(0, 3), rolap::DomainError);
    rolap::FibTable fib(2);
    CHECK(fib(100) == BigInt("354224848179261915075"));
}

TEST_CASE("n-step Fibonacci closed forms for z <= 30") {
    for (int z = 1; z <= 30; ++z) {
        rolap::FibTable f(z);
        for (int i = 2; i <= z + 1; ++i) REQUIRE(f(i) == rolap::pow2(static_cast<unsigned>(i - 2)));
        REQUIRE(f(z + 2) == rolap::pow2(static_cast<unsigned>(z)) - 1);
        REQUIRE(f(z + 3) == rolap::pow2(static_cast<unsigned>(z + 1)) - 3);
    }
}

TEST_CASE("count_no_zero_run") {
    CHECK(rolap::count_no_zero_run(5, 2) == 13);
    CHECK(rolap::count_no_zero_run(3, 4) == 8);
    for (int z = 1; z <= 10; ++z) CHECK(rolap::count_no_zero_run(z, z) == rolap::pow2(static_cast<unsigned>(z)) - 1);
}

TEST_CASE("count_no_zero_run matches enumeration for len <= 16") {
    for (int len = 1; len <= 16; ++len) {
        for (int z = 1; z <= len; ++z) {
            REQUIRE(rolap::count_no_zero_run(len, z) == brute_no_zero_run(len, z));
        }
    }
}

TEST_CASE("phi examples") {
    CHECK(rolap::phi(9, 0, 3) == 1);
    for (int len = 3; len <= 12; ++len) CHECK(rolap::phi(len, 1, 2) == static_cast<std::uint64_t>(len));
    CHECK(rolap::phi(6, 2, 2) == 3);
    CHECK_THROWS_AS((void)rolap::phi(25, 2, 2), rolap::CapacityError);
    CHECK_THROWS_AS((void)rolap::phi(6, 2, 6), rolap::DomainError);
}

TEST_CASE("phi lies between the binomial estimates for len <= 18") {
    for (int len = 2; len <= 18; ++len) {
        for (int k = 0; k < len; ++k) {
            const BigInt upper = rolap::binomial(static_cast<unsigned>(len), static_cast<unsigned>(k));
            const BigInt below = k == 0 ? BigInt(0) : rolap::binomial(static_cast<unsigned>(len), static_cast<unsigned>(k - 1));
            for (int z = 1; z < len; ++z) {
                const BigInt value = rolap::phi(len, k, z);
                REQUIRE(value <= upper);
                REQUIRE(upper - BigInt(k) * z * below <= value);
            }
        }
    }
}

TEST_CASE("nu by decomposition agrees with exhaustive counts") {
    // Exhaustive counts fixed beforehand by an independent script.
    CHECK(rolap::nu(2) == 1);
    CHECK(rolap::nu(3) == 47);
    CHECK(rolap::nu(4) == 17155);
    for (int a = 2; a <= 4; ++a) CHECK(rolap::nu(a) == rolap::nu_brute_force(a));
    for (int len = 3; len <= 14; ++len) {
        for (int z = 1; z < len; ++z) {
            std::uint64_t brute = 0;
            for (std::uint64_t w = 1; w < (std::uint64_t{1} << len); ++w) {
                // Doubling the word exposes every cyclic run.
                const std::uint64_t twice = (w << len) | w;
                int run = 0;
                bool ok = true;
                for (int i = 0; i < 2 * len && ok; ++i) {
                    run = ((twice >> i) & 1U) ? 0 : run + 1;
                    ok = run < z;
                }
                if (ok) ++brute;
            }
            REQUIRE(rolap::cyclic_no_zero_run(len, z) == brute);
        }
    }
}

TEST_CASE("gap between the linear and cyclic counts") {
    for (int a = 2; a <= 4; ++a) {
        const int len = 1 << a;
        const BigInt gap = rolap::fib_nstep(a - 1, len + 2) - rolap::nu(a);
        CHECK(gap >= 0);
        CHECK(gap <= rolap::pow2(static_cast<unsigned>(len - (a + 1) / 2 + 1)));
    }
    CHECK(rolap::fib_nstep(2, 10) - rolap::nu(3) == 8);
    CHECK(rolap::fib_nstep(3, 18) - rolap::nu(4) == 2358);
}

TEST_CASE("scaled ratios stay finite for long words") {
    const double r = rolap::scaled_ratio(rolap::fib_nstep(13, 16386), 16384);
    CHECK(r > 0.3);
    CHECK(r < 0.45);
    CHECK(rolap::scaled_ratio(BigInt(3), 2) == doctest::Approx(0.75));
}

TEST_CASE("upper bounds") {
    CHECK(rolap::upper_bound_weak(10, 3, 2) == Rational(1024, 15));
    CHECK(rolap::upper_bound_weak(4, 3, 2) == Rational(16, 3));
    CHECK(rolap::upper_bound_weak(6, 1, 3) == Rational(729, 11));
    CHECK(rolap::upper_bound_1k(14, 7, 2) == Rational(16384, 14));
    CHECK(rolap::to_decimal(rolap::upper_bound_1k(14, 7, 2)) == "1170.3");
    CHECK(rolap::upper_bound_1k(16, 8, 2) == 4096);
    CHECK_THROWS_AS((void)rolap::upper_bound_1k(10, 6, 2), rolap::DomainError);
    CHECK(rolap::upper_bound_graph(12, 6) == 272);
    CHECK(rolap::upper_bound_graph(8, 2) == 32);
    CHECK(rolap::upper_bound_graph(20, 4) == (BigInt(1) << 16) + (BigInt(1) << 14));
    CHECK_THROWS_AS((void)rolap::upper_bound_graph(5, 4), rolap::DomainError);
}

TEST_CASE("explicit lower bounds") {
    using rolap::ExplicitBound;
    CHECK(rolap::lower_bound_explicit(8, ExplicitBound::gen3) == Rational(1, 32));
    CHECK(rolap::lower_bound_explicit(9, ExplicitBound::gen2) == Rational(2, 81));
    CHECK(rolap::lower_bound_explicit(8, ExplicitBound::gen2) < rolap::lower_bound_explicit(8, ExplicitBound::gen3));
    CHECK(rolap::lower_bound_explicit(10, ExplicitBound::gen1) == Rational(100, 9670));
    CHECK_THROWS_AS((void)rolap::lower_bound_explicit(6, ExplicitBound::gen3), rolap::DomainError);
    CHECK(rolap::parse_explicit_bound("gen2") == ExplicitBound::gen2);
    CHECK(rolap::to_string(ExplicitBound::gen1) == "gen1");
}

TEST_CASE("zero-run event bounds hold exactly for k <= 64") {
    for (int k = 2; k <= 64; ++k) {
        for (int z = 1; z <= k - 1; ++z) {
            const BigInt f = rolap::fib_nstep(z, k + 1);
            REQUIRE(Rational(f) > rolap::zero_run_union_bound(k, z));
            REQUIRE(Rational(f) >= rolap::zero_run_first_occurrence_bound(k, z));
        }
    }
}

TEST_CASE("classic bounds") {
    const auto b16 = rolap::classic_bounds(16);
    CHECK(b16.nine_n == Rational(65536, 144));
    REQUIRE(b16.eight_n.has_value());
    CHECK(*b16.eight_n == Rational(65536, 128));
    const auto b12 = rolap::classic_bounds(12);
    CHECK(b12.nine_n == Rational(4096, 108));
    CHECK_FALSE(b12.eight_n.has_value());
    CHECK(rolap::classic_bounds(3).nine_n == Rational(8, 27));
    CHECK(b16.lev_asymptotic_constant == doctest::Approx(2 * 2.718281828459045));
    CHECK(b16.lev_asymptotic_value == doctest::Approx(65536 / (2 * 2.718281828459045 * 16)));
    CHECK_THROWS_AS((void)rolap::classic_bounds(2), rolap::DomainError);
}
