#include "hypu/series.hpp"

#include <cmath>
#include <vector>

#include "hypu/compensated.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"
#include "hypu/tail.hpp"

namespace hypu {

namespace {

// index of the last nonzero term when some a_j is a nonpositive integer,
// -1 if the series does not terminate
long termination_index(const ParameterSet& params) {
    long best = -1;
    for (double aj : params.a) {
        double r = std::round(aj);
        if (r <= 0.0 && std::abs(aj - r) < 1e-12) {
            long n = -long(r);
            if (best < 0 || n < best) best = n;
        }
    }
    return best;
}

double term_ratio(const ParameterSet& params, long n, double z) {
    double num = z, den = double(n) + 1.0;
    for (double aj : params.a) num *= aj + double(n);
    for (double bj : params.b) den *= bj + double(n);
    return num / den;
}

EvalResult eval_at_one(const ParameterSet& params, double s) {
    if (s <= 0.0)
        throw DomainError("series at z=1 needs positive balance s, got s=" +
                          std::to_string(s));
    TailPreset pre = tail_preset_f64();
    std::vector<dd> terms(pre.K + 1);
    double t = 1.0;
    for (long k = 0; k <= pre.K; ++k) {
        terms[k] = dd(t);
        t *= term_ratio(params, k, 1.0);
    }
    TailSum ts = sum_with_tail(terms, {1.0 + s}, pre);
    return {double(ts.value), ts.abs_err, ts.terms_used, Method::direct};
}

} // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::continuation: return "continuation";
        case Method::zero_balanced: return "zero_balanced";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

EvalResult eval_direct(const ParameterSet& params, double z,
                       double tol, long max_terms) {
    long term_at = termination_index(params);

    if (std::abs(z) >= 1.0 && term_at < 0) {
        double s = balance(params).s;
        if (z == 1.0) return eval_at_one(params, s);
        if (!(z == -1.0 && s > 0.0))
            throw DomainError("series diverges at z=" + std::to_string(z) +
                              " (needs |z|<1, terminating parameters, or "
                              "|z|=1 with s>0)");
        // z=-1 with s>0: conditionally convergent; fall through to literal
        // summation, which reports NoConvergence honestly if tol is
        // unreachable within max_terms.
    }

    CompensatedSum sum;
    double t = 1.0;
    long n = 0;
    int quiet = 0;
    double next = 0.0;
    while (true) {
        sum.add(t);
        if (term_at >= 0 && n == term_at) {
            next = 0.0;
            break;
        }
        next = t * term_ratio(params, n, z);
        ++n;
        if (n >= max_terms)
            throw NoConvergence("series did not converge within " +
                                std::to_string(max_terms) + " terms");
        if (std::abs(next) <= tol * std::abs(sum.value())) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
        t = next;
    }
    // remainder bound: geometric for |z|<1, first-omitted-term for z=-1
    double denom = (z == -1.0) ? 1.0 : 1.0 - std::abs(z);
    double err = term_at >= 0 ? 0.0 : std::abs(next) / denom;
    return {sum.value(), err, n + 1, Method::direct};
}

double gauss_sum(double a1, double a2, double b1) {
    double s1 = b1 - a1 - a2;
    if (s1 <= 0.0)
        throw DomainError("Gauss sum needs b1-a1-a2 > 0, got " +
                          std::to_string(s1));
    double lg = ln_gamma(b1) + ln_gamma(s1) - ln_gamma(b1 - a1) - ln_gamma(b1 - a2);
    int sg = gamma_sign(b1) * gamma_sign(s1) * gamma_sign(b1 - a1) * gamma_sign(b1 - a2);
    return double(sg) * std::exp(lg);
}

double saalschutz_sum(double a1, double a2, double b1, long m) {
    double s1 = b1 - a1 - a2;
    double r = std::round(s1);
    if (r <= 0.0 && std::abs(s1 - r) < 1e-8)
        throw DomainError("excluded balance: b1-a1-a2 = " + std::to_string(s1) +
                          " is zero or a negative integer");
    if (m == 0) return 1.0;
    return pochhammer(a1 + s1, m) * pochhammer(a2 + s1, m) /
           (pochhammer(s1, m) * pochhammer(b1, m));
}

EvalResult continue_2f1(double a1, double a2, double b1, double z, double tol) {
    double s1 = b1 - a1 - a2;
    if (std::abs(s1 - std::round(s1)) < 1e-8)
        throw IntegerExponent("connection formula needs non-integer "
                              "b1-a1-a2, got " + std::to_string(s1));
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("continuation requires z in (0,1)");

    double w = 1.0 - z;
    ParameterSet f1({a1, a2}, {a1 + a2 - b1 + 1.0});
    ParameterSet f2({b1 - a1, b1 - a2}, {b1 - a1 - a2 + 1.0});
    EvalResult r1 = eval_direct(f1, w, tol);
    EvalResult r2 = eval_direct(f2, w, tol);

    double c1 = gamma_ratio(b1, b1 - a1) * gamma_ratio(s1, b1 - a2);
    double c2 = gamma_ratio(b1, a1) * gamma_ratio(-s1, a2);
    double pw = std::pow(w, s1);
    double value = c1 * r1.value + c2 * pw * r2.value;
    double err = std::abs(c1) * r1.abs_err_estimate +
                 std::abs(c2) * pw * r2.abs_err_estimate;
    return {value, err, r1.terms_used + r2.terms_used, Method::continuation};
}

double zero_balanced_2f1(double a1, double a2, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("zero-balanced form requires z in (0,1)");
    double lead = 2.0 * digamma(1.0) - digamma(a1) - digamma(a2) - std::log1p(-z);
    return lead * gamma_ratio(a1 + a2, a1) / gamma(a2);
}

} // namespace hypu
