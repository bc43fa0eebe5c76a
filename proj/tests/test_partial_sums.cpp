#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

#include "hypu/continuation.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"
#include "hypu/partial_sums.hpp"

using namespace hypu;

TEST_CASE("partial sum against the frozen reference") {
    ParameterSet ps = oracle_params(oracles()["zb"]["p2"]);
    CHECK_REL(partial_sum(ps, 1000),
              oracles()["zb"]["p2"]["partial_sum_1000"].get<double>(), 1e-12);
    // the first term is the bare gamma prefactor
    CHECK_REL(partial_sum(ps, 1), gamma_prefactor(ps), 1e-14);
}

TEST_CASE("recurrence equals per-term gamma evaluation") {
    for (const char* key : {"p2", "p3", "p4"}) {
        ParameterSet ps = oracle_params(oracles()["zb"][key]);
        CHECK_REL(partial_sum(ps, 10000), partial_sum_brute(ps, 10000),
                  1e-11);
    }
}

TEST_CASE("regularized sum converges to the expansion constant") {
    const auto& zp = oracles()["zb"]["p2"];
    ParameterSet ps = oracle_params(zp);
    CHECK_REL(script_L(ps, 1000000), zp["script_L_1e6"].get<double>(),
              1e-12);
    // and the cutoff value is within 1e-5 of the constant itself
    CHECK(std::abs(script_L(ps, 1000000) - constant_L(ps)) <= 1e-5);
}

TEST_CASE("asymptotic formula and the 1/m defect decay") {
    ParameterSet ps = oracle_params(oracles()["zb"]["p3"]);
    double L = constant_L(ps);
    for (long m : {100L, 10000L}) {
        PartialSumReport rep = asymptotic_partial_sum(ps, m);
        CHECK(rep.m == m);
        CHECK_REL(rep.asymptotic, L - digamma(1.0) + std::log(double(m)),
                  1e-13);
        CHECK_REL(rep.sum, partial_sum(ps, m), 1e-14);
        CHECK_REL(rep.defect, rep.sum - rep.asymptotic, 1e-14);
    }

    double d3 = asymptotic_partial_sum(ps, 1000).defect;
    double d4 = asymptotic_partial_sum(ps, 10000).defect;
    double d5 = asymptotic_partial_sum(ps, 100000).defect;
    // defect * m approaches a constant: successive ratios near 1/10
    CHECK(std::abs(d4 / d3) < 0.2);
    CHECK(std::abs(d5 / d4) < 0.2);
    CHECK(std::abs(d4 / d3) > 0.05);
}

TEST_CASE("zero balance is a precondition") {
    ParameterSet ps = oracle_params(oracles()["eval"]["p2"]);  // s = 0.66
    CHECK_THROWS_AS(partial_sum(ps, 100), DomainError);
    CHECK_THROWS_AS(partial_sum_brute(ps, 100), DomainError);
    CHECK_THROWS_AS(script_L(ps, 100), DomainError);
    CHECK_THROWS_AS(asymptotic_partial_sum(ps, 100), DomainError);
}
