#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

#include "hypu/dd.hpp"
#include "hypu/zeta.hpp"

using namespace hypu;

TEST_CASE("dd addition and multiplication are error-free at binary64 seams") {
    // 1 + 2^-60 is far below one ulp of 1.0; the pair must keep it
    dd a = dd(1.0) + dd(std::ldexp(1.0, -60));
    dd back = a - dd(1.0);
    CHECK(back.hi == std::ldexp(1.0, -60));
    CHECK(back.lo == 0.0);

    // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60: head rounds, tail catches the rest
    dd p = dd(1.0 + std::ldexp(1.0, -30)) * dd(1.0 + std::ldexp(1.0, -30));
    CHECK(p.hi == 1.0 + std::ldexp(1.0, -29));
    CHECK(p.lo == std::ldexp(1.0, -60));
}

TEST_CASE("dd division round-trips") {
    dd x(3.7, 1.3e-17);
    dd y(1.9, -2.2e-17);
    dd q = x / y;
    dd r = q * y - x;
    CHECK(std::abs(double(r)) <= 1e-30);
}

TEST_CASE("dd exp/log/pow consistency") {
    dd x(1.2345);
    dd y = dd_log(dd_exp(x));
    CHECK(std::abs(double(y - x)) <= 1e-28);

    dd s = dd_pow(dd(2.0), dd(0.5));
    dd t = dd_sqrt(dd(2.0));
    CHECK(std::abs(double(s - t)) <= 1e-29);

    CHECK(double(dd_npow(dd(3.0), 5)) == 243.0);
    CHECK(std::abs(double(dd_npow(dd(3.0), -2) - dd(1.0) / dd(9.0))) <=
          1e-32);
}

TEST_CASE("truncated zeta sums against frozen references") {
    const auto& h = oracles()["hurwitz"];
    CHECK_REL(hurwitz_zeta(1.45, 300), h["z_145_300"].get<double>(), 1e-13);
    CHECK_REL(hurwitz_zeta(2.2, 50), h["z_22_50"].get<double>(), 1e-13);
    CHECK_REL(hurwitz_zeta(1.05, 1000), h["z_105_1000"].get<double>(), 1e-13);
    CHECK_REL(hurwitz_zeta(1.3, 1), h["z_13_1"].get<double>(), 1e-13);
    CHECK_REL(hurwitz_zeta(1.32, 1), h["z_132_1"].get<double>(), 1e-13);
    // steep exponent: value is ~1e-70, compare relative to itself
    double tiny = hurwitz_zeta(37.0, 80);
    double ref = h["z_37_80"].get<double>();
    CHECK(std::abs(tiny - ref) <= 1e-12 * std::abs(ref));
}

TEST_CASE("compensated zeta agrees with binary64 and satisfies the shift") {
    for (double e : {1.05, 1.45, 2.2, 6.0}) {
        for (long N : {1L, 7L, 300L}) {
            dd v = hurwitz_zeta(dd(e), N);
            CHECK_REL(double(v), hurwitz_zeta(e, N), 5e-15);
            // zeta(e, N) - zeta(e, N+1) = N^-e, checked beyond binary64
            dd d = v - hurwitz_zeta(dd(e), N + 1) -
                   dd_pow(dd(double(N)), dd(-e));
            CHECK(std::abs(double(d)) <= 1e-25 * std::abs(double(v)));
        }
    }
}
