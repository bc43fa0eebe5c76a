#pragma once
#include <cmath>

namespace hypu {

// log|Gamma(x)|; throws PoleError at nonpositive integers (tolerance 1e-12).
double ln_gamma(double x);

// Sign of Gamma(x) for x not a nonpositive integer: +1 for x > 0,
// (-1)^(floor(-x)+1) for x < 0.
int gamma_sign(double x);

// Gamma(x) with pole check.
double gamma(double x);

// Logarithmic derivative of Gamma; throws PoleError at nonpositive integers.
double digamma(double x);

// Rising factorial (lambda)_n. Exact product for moderate n, gamma ratio
// beyond; returns 0 when lambda is a nonpositive integer that the product
// crosses.
double pochhammer(double lambda, long n);

// Gamma(x)/Gamma(y), sign-correct, 0 when x is a nonpositive integer.
// y must not be a nonpositive integer.
double gamma_ratio(double x, double y);

// Accumulates a product of Gamma factors in log magnitude + sign so that
// widely scaled prefactors never overflow mid-product.
struct SignedLog {
    double ln = 0.0;
    int sign = 1;
    void mul_gamma(double x) {
        ln += ln_gamma(x);
        sign *= gamma_sign(x);
    }
    void div_gamma(double x) {
        ln -= ln_gamma(x);
        sign *= gamma_sign(x);
    }
    double value() const { return sign * std::exp(ln); }
};

} // namespace hypu
