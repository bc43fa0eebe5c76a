#pragma once
#include <vector>

namespace hypu {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Jacobi rule for weight (1-t)^alpha (1+t)^beta on [-1,1],
// alpha, beta > -1. Weights carry the full weight-function mass.
QuadRule gauss_jacobi(int n, double alpha, double beta);

// n-point rule for the Beta(a,b) probability density x^(a-1)(1-x)^(b-1)/B(a,b)
// on [0,1]; weights normalized to sum 1 so sums are expectations.
QuadRule beta_rule(double a, double b, int n);

// Rule from the three-term recurrence of a measure's orthonormal polynomials
// (Golub-Welsch): diag holds alpha_0..alpha_{n-1}, offdiag holds
// sqrt(beta_1)..sqrt(beta_{n-1}), mu0 the total mass. Weights sum to mu0.
// This is how rules for non-classical measures (built by discrete Stieltjes)
// enter.
QuadRule rule_from_recurrence(std::vector<double> diag,
                              std::vector<double> offdiag, double mu0);

} // namespace hypu
