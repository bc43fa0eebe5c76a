// Acceptance gate: one line per criterion, exit 0 only if all pass.
// Each criterion checks an identity the library must reproduce plus a
// wall-clock budget; tolerances are part of the project contract.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hypu/coeffs.hpp"
#include "hypu/continuation.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"
#include "hypu/partial_sums.hpp"
#include "hypu/rng.hpp"
#include "hypu/series.hpp"

using namespace hypu;

namespace {

struct Outcome {
    bool pass;
    double worst;
    double tol;
};

double relmax(double worst, double x, double ref) {
    return std::max(worst, std::abs(x - ref) / std::abs(ref));
}

ParameterSet draw_noninteger(Lcg& rng, int p) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<double> a, b;
        for (int j = 0; j <= p; ++j) a.push_back(rng.uniform(0.2, 1.3));
        for (int j = 0; j < p; ++j) b.push_back(rng.uniform(0.2, 1.3));
        ParameterSet ps{a, b};
        double s = balance(ps).s;
        if (std::abs(s - std::round(s)) <= 0.1) continue;
        if (std::abs(s) >= 2.0) continue;
        return ps;
    }
    throw NoConvergence("draw failed");
}

ParameterSet draw_with_balance(Lcg& rng, int p, double s_target) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<double> a, b;
        double sum = s_target;
        for (int j = 0; j <= p; ++j) {
            a.push_back(rng.uniform(0.2, 1.3));
            sum += a.back();
        }
        for (int j = 0; j + 1 < p; ++j) {
            b.push_back(rng.uniform(0.2, 1.3));
            sum -= b.back();
        }
        if (sum < 0.25 || sum > 3.0) continue;
        b.push_back(sum);
        return ParameterSet{a, b};
    }
    throw NoConvergence("draw failed");
}

// 1. Prefactored zero-balanced value at z = 1 - 1e-4 follows log(1/x) + L.
Outcome log_law_near_unit() {
    ParameterSet ps{{0.3, 0.5, 0.7}, {0.6, 0.9}};
    double L = constant_L(ps, BRep::closed_form);
    double x = 1e-4;
    EvalResult r = evaluate(ps, 1.0 - x);
    double pf = gamma_prefactor(ps) * r.value;
    double target = -std::log(x) + L;
    double worst = std::abs(pf - target);
    return {worst <= 5e-3, worst, 5e-3};
}

// 2. Leading expansion coefficient on the x^s side equals Gamma(-s).
Outcome g0_gamma_value() {
    Lcg rng(42);
    double worst = 0.0;
    for (int p = 2; p <= 6; ++p)
        for (int d = 0; d < 100; ++d) {
            ParameterSet ps = draw_noninteger(rng, p);
            std::vector<dd> tab = a_table(ps, 0);
            double g0 = g_n_s(ps, tab, 0);
            worst = relmax(worst, g0, hypu::gamma(-balance(ps).s));
        }
    return {worst <= 1e-12, worst, 1e-12};
}

// 3. Continued evaluation agrees with the direct series on the overlap.
Outcome overlap_continuation() {
    Lcg rng(43);
    double worst = 0.0;
    for (int p = 2; p <= 4; ++p)
        for (int d = 0; d < 100; ++d) {
            ParameterSet ps = draw_noninteger(rng, p);
            ContinuationExpansion ex = build_expansion(ps, 40, 1e-9);
            for (double z : {0.55, 0.75, 0.9}) {
                EvalResult c = eval_continued(ex, z);
                EvalResult dr = eval_direct(ps, z, 1e-13, 60000);
                worst = relmax(worst, c.value, dr.value);
            }
        }
    return {worst <= 1e-9, worst, 1e-9};
}

// 4. Independent representations of A_k and of B agree.
Outcome representation_consensus() {
    double worst_a = 0.0;
    std::vector<ParameterSet> asets = {
        {{0.52, 0.83, 0.61, 1.05}, {0.95, 1.37, 0.78}},
        {{0.52, 0.83, 0.61, 1.05, 0.97}, {0.95, 1.37, 0.78, 1.21}},
        {{0.5, 0.7, 0.75, 0.7}, {0.9, 0.9, 0.85}},
        {{0.88, 1.1, 0.35, 0.55, 0.8}, {0.85, 0.7, 1.03, 1.1}},
    };
    for (const ParameterSet& ps : asets) {
        std::vector<dd> tab = a_table(ps, 12);
        for (long k = 0; k <= 12; ++k) {
            double c = a_coeff(ps, k);
            double scale = std::max(1.0, std::abs(c));
            worst_a = std::max(worst_a,
                               std::abs(a_coeff_alt(ps, k) - c) / scale);
            worst_a =
                std::max(worst_a, std::abs(double(tab[k]) - c) / scale);
        }
    }
    bool pass = worst_a <= 1e-10;

    double worst_b = 0.0;
    auto pairwise = [&](const ParameterSet& ps,
                        const std::vector<BRep>& reps) {
        std::vector<double> vals;
        for (BRep r : reps) vals.push_back(constant_B(ps, r).value);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t k = i + 1; k < vals.size(); ++k)
                worst_b = std::max(worst_b, std::abs(vals[i] - vals[k]));
    };
    pairwise({{0.5, 0.7, 0.75, 0.7}, {0.9, 0.9, 0.85}},
             {BRep::a_series, BRep::a_series_alt, BRep::descent,
              BRep::split});
    pairwise({{0.88, 1.1, 0.35, 0.55, 0.8}, {0.85, 0.7, 1.03, 1.1}},
             {BRep::a_series, BRep::a_series_alt});
    pass = pass && worst_b <= 1e-9;
    return {pass, std::max(worst_a, worst_b), 1e-9};
}

// 5. Terminating unit-argument transformations: brute sum vs closed side.
Outcome terminating_transforms() {
    Lcg rng(44);
    double worst = 0.0;
    for (int p = 2; p <= 4; ++p)
        for (int d = 0; d < 100; ++d) {
            ParameterSet ps = draw_noninteger(rng, p);
            for (long m = 0; m <= 15; ++m)
                worst = relmax(worst, transform_rhs(ps, m),
                               transform_lhs(ps, m));
        }
    return {worst <= 1e-10, worst, 1e-10};
}

// 6. Coefficient-route unit sum vs direct summation at z = 1.
Outcome unit_argument_sum() {
    Lcg rng(45);
    double worst = 0.0;
    for (int d = 0; d < 50; ++d) {
        int p = 2 + (d % 2);
        ParameterSet ps = draw_with_balance(rng, p, rng.uniform(0.3, 1.5));
        std::vector<dd> tab = a_table(ps, 600);
        Valued v = unit_sum_coeff_route(ps, tab);
        EvalResult r = eval_direct(ps, 1.0, 1e-13, 60000);
        worst = relmax(worst, v.value, gamma_prefactor(ps) * r.value);
    }
    return {worst <= 1e-8, worst, 1e-8};
}

// 7. Partial sums: defect decays like 1/m; regularized sum hits the constant.
Outcome partial_sum_asymptotics() {
    Lcg rng(46);
    double worst_slope = 0.0, worst_l = 0.0;
    const std::vector<long> grid = {100, 1000, 10000, 100000};
    for (int p = 2; p <= 4; ++p)
        for (int d = 0; d < 7; ++d) {
            ParameterSet ps = draw_with_balance(rng, p, 0.0);
            double L = constant_L(ps);
            double base = L - digamma(1.0);
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (long m : grid) {
                double defect =
                    partial_sum(ps, m) - (base + std::log(double(m)));
                double x = std::log(double(m));
                double y = std::log(std::abs(defect));
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            double n = double(grid.size());
            double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
            worst_slope = std::max(worst_slope, std::abs(slope + 1.0));
            worst_l = std::max(worst_l,
                               std::abs(script_L(ps, 1000000) - L));
        }
    bool pass = worst_slope <= 0.15 && worst_l <= 1e-5;
    return {pass, worst_slope, 0.15};
}

// 8. Richardson limit of the terminating route vs the summed closed form.
Outcome coefficient_limit_route() {
    double worst = 0.0;
    std::vector<ParameterSet> sets = {
        {{0.52, 0.83, 0.31}, {0.95, 1.37}},
        {{0.52, 0.83, 0.61, 1.05}, {0.95, 1.37, 0.78}},
        {{0.52, 0.83, 0.61, 1.05, 0.97}, {0.95, 1.37, 0.78, 1.21}},
    };
    for (const ParameterSet& ps : sets) {
        std::vector<dd> tab = a_table(ps, 600);
        for (long n = 0; n <= 2; ++n) {
            Valued g = g_n_zero(ps, tab, n);
            worst = relmax(worst, g_n_limit(ps, n), g.value);
        }
    }
    return {worst <= 1e-5, worst, 1e-5};
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"log_law_near_unit", 1.0, log_law_near_unit},
        {"g0_gamma_value", 5.0, g0_gamma_value},
        {"overlap_continuation", 30.0, overlap_continuation},
        {"representation_consensus", 30.0, representation_consensus},
        {"terminating_transforms", 60.0, terminating_transforms},
        {"unit_argument_sum", 30.0, unit_argument_sum},
        {"partial_sum_asymptotics", 60.0, partial_sum_asymptotics},
        {"coefficient_limit_route", 60.0, coefficient_limit_route},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o{false, std::nan(""), std::nan("")};
        std::string note;
        try {
            o = c.fn();
        } catch (const Error& e) {
            note = std::string("  [") + e.name() + ": " + e.what() + "]";
        } catch (const std::exception& e) {
            note = std::string("  [") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        bool in_budget = secs < c.budget_s;
        bool pass = o.pass && in_budget;
        std::printf("[%zu/8] %s %-26s worst=%.3e tol=%.1e time=%.2fs "
                    "(budget %.0fs)%s%s\n",
                    i + 1, pass ? "PASS" : "FAIL", c.name, o.worst, o.tol,
                    secs, c.budget_s,
                    !in_budget ? "  [over budget]" : "", note.c_str());
        failures += pass ? 0 : 1;
    }
    if (failures)
        std::printf("acceptance: %d of 8 criteria failed\n", failures);
    else
        std::printf("acceptance: all 8 criteria passed\n");
    return failures ? 1 : 0;
}
