#include "hypu/gamma.hpp"

#include <cmath>
#include <string>

#include "hypu/errors.hpp"

namespace hypu {

namespace {

bool is_nonpositive_integer(double x) {
    if (x > 0.5) return false;
    double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) < 1e-12;
}

void check_pole(double x, const char* who) {
    if (is_nonpositive_integer(x))
        throw PoleError(std::string(who) + " pole at nonpositive integer argument " +
                        std::to_string(x));
}

} // namespace

double ln_gamma(double x) {
    check_pole(x, "ln_gamma");
    return std::lgamma(x);
}

int gamma_sign(double x) {
    if (x > 0.0) return 1;
    // Between consecutive negative integers the sign alternates, negative on
    // (-1,0).
    return (long(std::floor(-x)) % 2 == 0) ? -1 : 1;
}

double gamma(double x) {
    check_pole(x, "gamma");
    return std::tgamma(x);
}

double digamma(double x) {
    check_pole(x, "digamma");
    if (x < 0.5) {
        // reflection: psi(x) = psi(1-x) - pi*cot(pi*x)
        double px = x - std::round(x);   // reduced for a stable tan argument
        return digamma(1.0 - x) - M_PI / std::tan(M_PI * px);
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series: log x - 1/(2x) - sum B_2n / (2n x^(2n))
    double inv2 = 1.0 / (x * x);
    static const double c[7] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    double pw = inv2, corr = 0.0;
    for (int i = 0; i < 7; ++i) {
        corr += c[i] * pw;
        pw *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - corr;
}

double pochhammer(double lambda, long n) {
    if (n == 0) return 1.0;
    if (n <= 48) {
        double prod = 1.0;
        for (long i = 0; i < n; ++i) prod *= lambda + double(i);
        return prod;
    }
    double r = std::round(lambda);
    if (r <= 0.0 && std::abs(lambda - r) < 1e-12 && lambda + double(n) > 0.5)
        return 0.0;   // product crosses the zero factor
    double num = lambda + double(n);
    double lg = std::lgamma(num) - std::lgamma(lambda);
    int sg = gamma_sign(num) * gamma_sign(lambda);
    return double(sg) * std::exp(lg);
}

double gamma_ratio(double x, double y) {
    if (is_nonpositive_integer(y))
        throw PoleError("gamma_ratio denominator pole at " + std::to_string(y));
    if (is_nonpositive_integer(x)) return 0.0;
    double lg = std::lgamma(x) - std::lgamma(y);
    int sg = gamma_sign(x) * gamma_sign(y);
    return double(sg) * std::exp(lg);
}

} // namespace hypu
