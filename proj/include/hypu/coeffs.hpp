#pragma once
#include <vector>

#include "hypu/dd.hpp"
#include "hypu/params.hpp"
#include "hypu/tail.hpp"

namespace hypu {

// Connection coefficients A_0..A_K for the expansion of (p+1)Fp about z = 1,
// built with the nested-sum recurrence in compensated arithmetic,
// O((p-1) K^2). A_0 = 1 always; p = 1 gives the degenerate table {1, 0, ...}.
std::vector<dd> a_table(const ParameterSet& params, long K);

// Single coefficient from the per-p closed form (nested finite sums).
// Cost grows like k^(p-2); meant for spot checks at small k, not tables.
double a_coeff(const ParameterSet& params, long k);

// The rearranged closed form (p = 3 and p = 4 only; throws
// RepresentationInapplicable otherwise). Its inner sums alternate in sign
// with binomial growth, so even compensated evaluation dies near k ~ 90;
// keep k small. Agreement with a_coeff is a genuine cross-check because the
// two forms order the nested sums differently.
double a_coeff_alt(const ParameterSet& params, long k);

// Moment sequence E_0..E_K of the alternate form's Beta-product integral
// representation (p = 3: two axes; p = 4: three axes, the inner pair
// collapsed to one Gauss rule built by discrete Stieltjes). A_k equals
// (c1)_k (c2)_k / k! * E_k, which overflows binary64 near k ~ 170, so
// consumers fold the prefactor into their own term ratios instead.
// n_axis = 0 picks a default sized for the requested K.
std::vector<double> alt_moments(const ParameterSet& params, long K,
                                int n_axis = 0);

// The two leading-ladder constants of the alternate form: c1, c2 such that
// A_k = (c1)_k (c2)_k / k! * E_k (p = 3, 4 only).
void alt_prefactor(const ParameterSet& params, double& c1, double& c2);

struct Valued {
    double value;
    double abs_err;
};

// Expansion coefficient g_n(0): prefactored series over the A table with
// algebraic tail completion (compensated fit for n <= 5 where the tail
// matters, plain truncation beyond; the series decays like k^-(1+n+min a)).
// Requires s = balance(params).s non-integer.
Valued g_n_zero(const ParameterSet& params, const std::vector<dd>& tab, long n);

// Expansion coefficient g_n(s): the same series terminates after n+1 terms.
double g_n_s(const ParameterSet& params, const std::vector<dd>& tab, long n);

// g_n(0) through the terminating-series limit with Richardson acceleration
// in 1/m over the doubling schedule {64, 128, 256, 512}. Independent of the
// A table; ~1e-9 relative, used for cross-validation only.
double g_n_limit(const ParameterSet& params, long n);

// Unit-argument value of prod Gamma(a)/prod Gamma(b) * F(1) through the
// coefficient route (requires s > 0): Gamma(a1)Gamma(a2)Gamma(s) /
// (Gamma(a1+s)Gamma(a2+s)) * sum_k (s)_k/((a1+s)_k (a2+s)_k) A_k.
Valued unit_sum_coeff_route(const ParameterSet& params,
                            const std::vector<dd>& tab);

// Terminating transformation identity at unit argument. lhs is the common
// left side 1/prod Gamma(b) * (p+2)F(p+1)(a, -m; b, 1-s-m; 1); rhs is the
// rearranged side (p = 2, 3, 4; throws RepresentationInapplicable beyond).
double transform_lhs(const ParameterSet& params, long m);
double transform_rhs(const ParameterSet& params, long m);

} // namespace hypu
