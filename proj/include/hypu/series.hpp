#pragma once
#include <string>

#include "hypu/params.hpp"

namespace hypu {

enum class Method { direct, continuation, zero_balanced, closed_form };

std::string method_name(Method m);

struct EvalResult {
    double value;
    double abs_err_estimate;
    long terms_used;
    Method method;
};

// Power series of (p+1)Fp at z. Converges for |z| < 1; at z = 1 requires
// s > 0 (the truncated sum is then completed with the fitted algebraic
// tail); any z when the series terminates.
EvalResult eval_direct(const ParameterSet& params, double z,
                       double tol = 1e-12, long max_terms = 10000);

// 2F1(a1,a2;b1;1) for s1 = b1-a1-a2 > 0.
double gauss_sum(double a1, double a2, double b1);

// Terminating 3F2(a1,a2,-m; b1, 1-s1-m; 1), s1 = b1-a1-a2 not in {0,-1,...}:
// equals (a1+s1)_m (a2+s1)_m / ((s1)_m (b1)_m).
double saalschutz_sum(double a1, double a2, double b1, long m);

// 2F1 near z=1 through the two-series connection formula; s1 non-integer,
// z in (0,1).
EvalResult continue_2f1(double a1, double a2, double b1, double z,
                        double tol = 1e-12);

// Leading behaviour of the zero-balanced 2F1(a1,a2;a1+a2;z) as z -> 1:
// [2 psi(1) - psi(a1) - psi(a2) - log(1-z)] * Gamma(a1+a2)/(Gamma(a1)Gamma(a2)).
double zero_balanced_2f1(double a1, double a2, double z);

} // namespace hypu
