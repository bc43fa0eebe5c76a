#include "hypu/partial_sums.hpp"

#include <cmath>

#include "hypu/compensated.hpp"
#include "hypu/continuation.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"

namespace hypu {

namespace {

void check_zero_balance(const ParameterSet& ps) {
    BalanceInfo bal = balance(ps);
    if (!(bal.is_integer && bal.integer_value == 0))
        throw DomainError("partial-sum asymptotics apply to zero balance only");
}

double ratio_at(const ParameterSet& ps, long k) {
    double r = 1.0;
    for (double x : ps.a) r *= x + k;
    for (double y : ps.b) {
        if (std::abs(y + k) < 1e-12)
            throw PoleError("denominator parameter hits a pole inside the sum");
        r /= y + k;
    }
    return r / (1.0 + k);
}

} // namespace

double partial_sum(const ParameterSet& ps, long m) {
    if (m < 1) throw DomainError("partial sum needs m >= 1");
    check_zero_balance(ps);
    CompensatedSum tot;
    double t = gamma_prefactor(ps);
    for (long k = 0; k < m; ++k) {
        tot.add(t);
        t *= ratio_at(ps, k);
    }
    return tot.value();
}

double partial_sum_brute(const ParameterSet& ps, long m) {
    if (m < 1) throw DomainError("partial sum needs m >= 1");
    check_zero_balance(ps);
    CompensatedSum tot;
    for (long k = 0; k < m; ++k) {
        SignedLog t;
        for (double x : ps.a) t.mul_gamma(x + k);
        for (double y : ps.b) t.div_gamma(y + k);
        t.ln -= ln_gamma(double(1 + k));
        tot.add(t.value());
    }
    return tot.value();
}

double script_L(const ParameterSet& ps, long m_cut) {
    if (m_cut < 1) throw DomainError("regularized sum needs m_cut >= 1");
    check_zero_balance(ps);
    CompensatedSum tot;
    double t = gamma_prefactor(ps);
    for (long k = 0; k < m_cut; ++k) {
        tot.add(t - 1.0 / double(k + 1));
        t *= ratio_at(ps, k);
    }
    return tot.value();
}

PartialSumReport asymptotic_partial_sum(const ParameterSet& ps, long m) {
    double sum = partial_sum(ps, m);
    double asym = constant_L(ps) - digamma(1.0) + std::log(double(m));
    return {m, sum, asym, sum - asym};
}

} // namespace hypu
