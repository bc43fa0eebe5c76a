#include <cmath>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

#include "hypu/coeffs.hpp"
#include "hypu/continuation.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"
#include "hypu/series.hpp"

using namespace hypu;

TEST_CASE("closed-form coefficients against frozen spots") {
    const auto& ak = oracles()["a_coeff"];
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p2", "p3", "p4"}) {
        ParameterSet ps = oracle_params(ev[key]);
        for (const char* kk : {"k1", "k3", "k5", "k12"}) {
            long k = std::atol(kk + 1);
            CHECK_REL(a_coeff(ps, k), ak[key][kk].get<double>(), 1e-10);
        }
    }
}

TEST_CASE("recurrence table matches the closed form and starts at 1") {
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p2", "p3", "p4", "p5", "p6"}) {
        ParameterSet ps = oracle_params(ev[key]);
        std::vector<dd> tab = a_table(ps, 12);
        CHECK(double(tab[0]) == 1.0);
        for (long k = 1; k <= 12; ++k)
            CHECK_REL(double(tab[k]), a_coeff(ps, k), 1e-10);
    }
    // p = 1 is degenerate: the expansion has a single coefficient
    ParameterSet p1{{0.52, 0.83}, {1.95}};
    std::vector<dd> tab = a_table(p1, 5);
    CHECK(double(tab[0]) == 1.0);
    for (long k = 1; k <= 5; ++k) CHECK(double(tab[k]) == 0.0);
}

TEST_CASE("rearranged coefficient form (p = 3, 4)") {
    const auto& ak = oracles()["a_coeff"];
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p3", "p4"}) {
        ParameterSet ps = oracle_params(ev[key]);
        for (const char* kk : {"k1", "k3", "k5", "k12"}) {
            long k = std::atol(kk + 1);
            CHECK_REL(a_coeff_alt(ps, k), ak[key][kk].get<double>(), 1e-9);
        }
    }
    ParameterSet p2 = oracle_params(ev["p2"]);
    CHECK_THROWS_AS(a_coeff_alt(p2, 3), RepresentationInapplicable);
}

TEST_CASE("moment route reproduces the table through the ladder prefactor") {
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p3", "p4"}) {
        ParameterSet ps = oracle_params(ev[key]);
        double c1, c2;
        alt_prefactor(ps, c1, c2);
        std::vector<double> mom = alt_moments(ps, 8);
        std::vector<dd> tab = a_table(ps, 8);
        double tol = ps.p() == 3 ? 1e-10 : 1e-8;
        for (long k = 0; k <= 8; ++k) {
            double ak = pochhammer(c1, k) * pochhammer(c2, k) /
                        pochhammer(1.0, k) * mom[k];
            CHECK_REL(ak, double(tab[k]), tol);
        }
    }
}

TEST_CASE("expansion coefficients against frozen references") {
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p2", "p3", "p4"}) {
        ParameterSet ps = oracle_params(ev[key]);
        std::vector<dd> tab = a_table(ps, 600);
        for (long n = 0; n <= 2; ++n) {
            std::string k0 = "g" + std::to_string(n) + "_0";
            std::string ks = "g" + std::to_string(n) + "_s";
            Valued g = g_n_zero(ps, tab, n);
            CHECK_REL(g.value, ev[key][k0].get<double>(), 1e-11);
            CHECK(g.abs_err <= 1e-8 * std::abs(g.value));
            CHECK_REL(g_n_s(ps, tab, n), ev[key][ks].get<double>(), 1e-12);
        }
    }
}

TEST_CASE("leading coefficient on the x^s side is Gamma(-s)") {
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p2", "p3", "p4", "p5", "p6"}) {
        ParameterSet ps = oracle_params(ev[key]);
        std::vector<dd> tab = a_table(ps, 0);
        CHECK_REL(g_n_s(ps, tab, 0), hypu::gamma(-balance(ps).s), 1e-12);
    }
}

TEST_CASE("integer balance is rejected by the coefficient routes") {
    ParameterSet zb{{0.3, 0.5, 0.7}, {0.6, 0.9}};  // s = 0
    std::vector<dd> tab = a_table(zb, 20);
    CHECK_THROWS_AS(g_n_zero(zb, tab, 0), IntegerExponent);
    CHECK_THROWS_AS(g_n_s(zb, tab, 0), IntegerExponent);
    CHECK_THROWS_AS(g_n_limit(zb, 0), IntegerExponent);
}

TEST_CASE("limit route agrees with the summed closed form") {
    ParameterSet ps = oracle_params(oracles()["eval"]["p2"]);
    std::vector<dd> tab = a_table(ps, 600);
    for (long n = 0; n <= 2; ++n) {
        Valued g = g_n_zero(ps, tab, n);
        CHECK_REL(g_n_limit(ps, n), g.value, 1e-5);
    }
}

TEST_CASE("coefficient-route unit sum matches direct summation") {
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p2", "p3", "p4"}) {
        ParameterSet ps = oracle_params(ev[key]);
        std::vector<dd> tab = a_table(ps, 600);
        Valued v = unit_sum_coeff_route(ps, tab);
        double ref = gamma_prefactor(ps) * ev[key]["F_1"].get<double>();
        CHECK_REL(v.value, ref, 1e-9);
    }
    ParameterSet neg{{0.52, 0.83}, {0.95}};
    std::vector<dd> tab = a_table(neg, 10);
    CHECK_THROWS_AS(unit_sum_coeff_route(neg, tab), DomainError);
}

TEST_CASE("terminating transformations against frozen left sides") {
    const auto& tr = oracles()["transform"];
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p2", "p3", "p4"}) {
        ParameterSet ps = oracle_params(ev[key]);
        long m = tr[key]["m"].get<long>();
        double ref = tr[key]["lhs"].get<double>();
        CHECK_REL(transform_lhs(ps, m), ref, 1e-12);
        CHECK_REL(transform_rhs(ps, m), ref, 1e-10);
    }
}

TEST_CASE("transformation identity holds across orders") {
    const auto& ev = oracles()["eval"];
    for (const char* key : {"p2", "p3", "p4"}) {
        ParameterSet ps = oracle_params(ev[key]);
        for (long m : {0L, 1L, 2L, 7L, 15L})
            CHECK_REL(transform_rhs(ps, m), transform_lhs(ps, m), 1e-10);
    }
    ParameterSet p5 = oracle_params(ev["p5"]);
    CHECK_THROWS_AS(transform_rhs(p5, 3), RepresentationInapplicable);
}
