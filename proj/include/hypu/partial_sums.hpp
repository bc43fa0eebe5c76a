#pragma once
#include "hypu/params.hpp"

namespace hypu {

struct PartialSumReport {
    long m;
    double sum;
    double asymptotic;
    double defect;   // sum - asymptotic
};

// Partial sum of the Gamma-weighted zero-balanced series,
//   sum_{k<m} prod Gamma(a_j+k) / (prod Gamma(b_j+k) Gamma(1+k)),
// by forward recurrence on the term ratio with compensated accumulation.
double partial_sum(const ParameterSet& params, long m);

// Same sum with every term built from ln_gamma directly. O(m) gamma calls;
// exists as an independent cross-check of the recurrence.
double partial_sum_brute(const ParameterSet& params, long m);

// Regularized sum sum_{k<m_cut} [term_k - 1/(k+1)]. Each summand is O(k^-2),
// so the truncation error is O(1/m_cut); the limit equals the constant from
// the zero-balanced expansion.
double script_L(const ParameterSet& params, long m_cut);

// Partial sum against its logarithmic law: asymptotic = L - psi(1) + log m.
// The defect decays like 1/m.
PartialSumReport asymptotic_partial_sum(const ParameterSet& params, long m);

} // namespace hypu
