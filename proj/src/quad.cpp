#include "hypu/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"

namespace hypu {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix, accumulating only the
// first row of the eigenvector matrix (all Golub-Welsch needs for weights).
void ql_first_row(std::vector<double>& d, std::vector<double>& e,
                  std::vector<double>& q) {
    int n = int(d.size());
    e.resize(n, 0.0);
    q.assign(n, 0.0);
    q[0] = 1.0;
    const double eps = 2.22e-16;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            while (m < n - 1 &&
                   std::abs(e[m]) > eps * (std::abs(d[m]) + std::abs(d[m + 1])))
                ++m;
            if (m == l) break;
            if (++iter > 50)
                throw NoConvergence("tridiagonal QL failed to converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {   // rotation annihilated early: restart sweep
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                f = q[i + 1];
                q[i + 1] = s * q[i] + c * f;
                q[i] = c * q[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

} // namespace

QuadRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1 || alpha <= -1.0 || beta <= -1.0)
        throw DomainError("gauss_jacobi needs n >= 1 and alpha, beta > -1");

    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    double ab = alpha + beta;
    d[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + ab;
        d[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    if (n > 1) {
        // k=1 entry in the form with the (1+alpha+beta) factor cancelled;
        // the generic expression is 0/0 at alpha+beta = -1
        e[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) /
                         ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
        for (int k = 2; k < n; ++k) {
            double s = 2.0 * k + ab;
            e[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                                 ((s - 1.0) * s * s * (s + 1.0)));
        }
    }

    double mu0 = std::exp((ab + 1.0) * std::log(2.0) + ln_gamma(alpha + 1.0) +
                          ln_gamma(beta + 1.0) - ln_gamma(ab + 2.0));
    return rule_from_recurrence(std::move(d), std::move(e), mu0);
}

QuadRule rule_from_recurrence(std::vector<double> diag,
                              std::vector<double> offdiag, double mu0) {
    int n = int(diag.size());
    if (n < 1 || offdiag.size() + 1 != diag.size())
        throw DomainError("rule_from_recurrence needs n >= 1 and n-1 offdiagonals");
    std::vector<double> q;
    ql_first_row(diag, offdiag, q);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return diag[i] < diag[j]; });

    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = diag[idx[i]];
        rule.weights[i] = mu0 * q[idx[i]] * q[idx[i]];
    }
    return rule;
}

QuadRule beta_rule(double a, double b, int n) {
    if (a <= 0.0 || b <= 0.0)
        throw DomainError("beta_rule needs positive shape parameters");
    QuadRule gj = gauss_jacobi(n, b - 1.0, a - 1.0);
    double total = 0.0;
    for (double w : gj.weights) total += w;
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (gj.nodes[i] + 1.0);
        rule.weights[i] = gj.weights[i] / total;
    }
    return rule;
}

} // namespace hypu
